#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "stabloc/bit_matrix.hpp"
#include "stabloc/stabilizer.hpp"

namespace stabloc {

/// Mod-2 boundary data of a cellulation: D_X has one column per face with
/// 1s at its boundary edges; D_Z has one column per vertex with 1s at the
/// incident edges (the boundary of the dual face). D_X^T D_Z = 0 for every
/// valid closed cellulation.
struct BoundaryPair {
    BitMatrix d_x; // |E| x |F|
    BitMatrix d_z; // |E| x |V|
};

/// Combinatorial cellulation of a closed surface. Faces are explicit closed
/// edge walks; no geometric data is kept. Multi-edges are allowed (a 2-gon
/// needs them), self-loops are rejected because a loop would enter its
/// star's support twice and cancel mod 2.
///
/// Validity: edges join distinct existing vertices; every face is a closed
/// connected walk using each edge at most once; every edge lies in exactly
/// two face boundaries; the 1-skeleton is connected.
class Cellulation {
  public:
    Cellulation(std::size_t num_vertices, std::vector<std::pair<std::size_t, std::size_t>> edges,
                std::vector<std::vector<std::size_t>> faces);

    std::size_t num_vertices() const { return num_vertices_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    const std::vector<std::vector<std::size_t>>& faces() const { return faces_; }

    /// chi = |V| - |E| + |F|; 2 for a sphere, 0 for a torus.
    long euler_characteristic() const;

    std::vector<std::size_t> vertex_valences() const;
    std::vector<std::size_t> face_sizes() const;

    BoundaryPair boundary_matrices() const;

    /// Face/vertex duality: dual vertices are faces, one dual edge per edge
    /// joining its two adjacent faces, dual faces are vertex stars in
    /// umbrella order. Requires each vertex star to close into a single
    /// cycle of corners.
    Cellulation dual() const;

    /// L x L square cellulation of the torus (L >= 2): L^2 vertices,
    /// 2 L^2 edges, L^2 faces, all valences and face sizes 4.
    static Cellulation toric(std::size_t length);

    /// Sphere cellulation with minimum vertex valence 3 and minimum face
    /// size 3 whose code nevertheless has a weight-2 element: the two-edge
    /// equator bounds each hemisphere's disc.
    static Cellulation valence_counterexample();

  private:
    std::size_t num_vertices_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> faces_;
    // Face walks as vertex sequences (resolved during validation);
    // walk_[f][i] is the vertex the walk occupies before traversing
    // faces_[f][i].
    std::vector<std::vector<std::size_t>> walks_;
};

/// dim H_1(cellulation, F_2) = |E| - rank(D_X) - rank(D_Z).
std::size_t h1_dimension(const Cellulation& c);

/// Stabilizer code of the cellulation: one qubit per edge, the X face
/// operators listed before the Z vertex operators, all signs +. The check
/// matrix is diag(D_X^T, D_Z^T) and the codespace dimension is
/// 2^{dim H_1}.
StabilizerGroup build_code(const Cellulation& c);

} // namespace stabloc
