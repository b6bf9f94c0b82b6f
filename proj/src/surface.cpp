#include "stabloc/surface.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "stabloc/errors.hpp"

namespace stabloc {

namespace {

// Resolves a face's edge list into the vertex sequence of a closed walk
// starting at `start`; the returned walk[i] is the vertex occupied before
// traversing edge i.
std::optional<std::vector<std::size_t>> resolve_walk(
    const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    const std::vector<std::size_t>& face, std::size_t start) {
    std::size_t cur = start;
    std::vector<std::size_t> walk;
    walk.reserve(face.size());
    for (std::size_t e : face) {
        const auto& [u, v] = edges[e];
        walk.push_back(cur);
        if (u == cur) {
            cur = v;
        } else if (v == cur) {
            cur = u;
        } else {
            return std::nullopt;
        }
    }
    if (cur != start) {
        return std::nullopt;
    }
    return walk;
}

} // namespace

Cellulation::Cellulation(std::size_t num_vertices,
                         std::vector<std::pair<std::size_t, std::size_t>> edges,
                         std::vector<std::vector<std::size_t>> faces)
    : num_vertices_(num_vertices), edges_(std::move(edges)), faces_(std::move(faces)) {
    if (num_vertices_ == 0) {
        throw ValidationError("cellulation needs at least one vertex");
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& [u, v] = edges_[e];
        if (u >= num_vertices_ || v >= num_vertices_) {
            throw ValidationError("edge " + std::to_string(e) + " references a missing vertex");
        }
        if (u == v) {
            throw ValidationError("edge " + std::to_string(e) + " is a self-loop");
        }
    }

    std::vector<std::size_t> edge_face_count(edges_.size(), 0);
    walks_.reserve(faces_.size());
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        const auto& face = faces_[f];
        if (face.empty()) {
            throw ValidationError("face " + std::to_string(f) + " has no edges");
        }
        std::set<std::size_t> seen;
        for (std::size_t e : face) {
            if (e >= edges_.size()) {
                throw ValidationError("face " + std::to_string(f) + " references missing edge " +
                                      std::to_string(e));
            }
            if (!seen.insert(e).second) {
                throw ValidationError("face " + std::to_string(f) + " repeats edge " +
                                      std::to_string(e));
            }
            ++edge_face_count[e];
        }
        auto walk = resolve_walk(edges_, face, edges_[face.front()].first);
        if (!walk) {
            walk = resolve_walk(edges_, face, edges_[face.front()].second);
        }
        if (!walk) {
            throw ValidationError("face " + std::to_string(f) +
                                  " is not a closed connected walk");
        }
        walks_.push_back(std::move(*walk));
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (edge_face_count[e] != 2) {
            throw ValidationError("edge " + std::to_string(e) + " lies in " +
                                  std::to_string(edge_face_count[e]) +
                                  " face boundaries, expected exactly 2 (closed surface)");
        }
    }

    // Connectivity of the 1-skeleton.
    std::vector<bool> reached(num_vertices_, false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : edges_) {
            if (a == v && !reached[b]) {
                reached[b] = true;
                stack.push_back(b);
            } else if (b == v && !reached[a]) {
                reached[a] = true;
                stack.push_back(a);
            }
        }
    }
    if (!std::all_of(reached.begin(), reached.end(), [](bool r) { return r; })) {
        throw ValidationError("cellulation is disconnected");
    }
}

long Cellulation::euler_characteristic() const {
    return static_cast<long>(num_vertices_) - static_cast<long>(edges_.size()) +
           static_cast<long>(faces_.size());
}

std::vector<std::size_t> Cellulation::vertex_valences() const {
    std::vector<std::size_t> valence(num_vertices_, 0);
    for (const auto& [u, v] : edges_) {
        ++valence[u];
        ++valence[v];
    }
    return valence;
}

std::vector<std::size_t> Cellulation::face_sizes() const {
    std::vector<std::size_t> sizes;
    sizes.reserve(faces_.size());
    for (const auto& face : faces_) {
        sizes.push_back(face.size());
    }
    return sizes;
}

BoundaryPair Cellulation::boundary_matrices() const {
    BoundaryPair pair;
    pair.d_x = BitMatrix(edges_.size(), faces_.size());
    pair.d_z = BitMatrix(edges_.size(), num_vertices_);
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        for (std::size_t e : faces_[f]) {
            pair.d_x.set(e, f, true);
        }
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        pair.d_z.set(e, edges_[e].first, true);
        pair.d_z.set(e, edges_[e].second, true);
    }
    return pair;
}

Cellulation Cellulation::dual() const {
    // Dual vertices are faces; dual edge e* joins the two faces of e.
    std::vector<std::vector<std::size_t>> faces_of_edge(edges_.size());
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        for (std::size_t e : faces_[f]) {
            faces_of_edge[e].push_back(f);
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> dual_edges(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        dual_edges[e] = {faces_of_edge[e][0], faces_of_edge[e][1]};
    }

    // A corner pairs the incoming and outgoing edge of one face-walk visit
    // to a vertex; each incident edge owns exactly two corners, so the
    // corners at a vertex chain its incident edges into cycles. A single
    // cycle is the umbrella giving the dual face's edge order.
    struct Corner {
        std::size_t edge_in;
        std::size_t edge_out;
    };
    std::vector<std::vector<Corner>> corners(num_vertices_);
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        const auto& face = faces_[f];
        const auto& walk = walks_[f];
        const std::size_t k = face.size();
        for (std::size_t i = 0; i < k; ++i) {
            corners[walk[i]].push_back(Corner{face[(i + k - 1) % k], face[i]});
        }
    }

    std::vector<std::vector<std::size_t>> dual_faces;
    dual_faces.reserve(num_vertices_);
    for (std::size_t v = 0; v < num_vertices_; ++v) {
        std::vector<std::size_t> incident;
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            if (edges_[e].first == v || edges_[e].second == v) {
                incident.push_back(e);
            }
        }
        std::vector<std::vector<std::size_t>> corner_ids_of_edge(edges_.size());
        for (std::size_t c = 0; c < corners[v].size(); ++c) {
            corner_ids_of_edge[corners[v][c].edge_in].push_back(c);
            corner_ids_of_edge[corners[v][c].edge_out].push_back(c);
        }
        for (std::size_t e : incident) {
            if (corner_ids_of_edge[e].size() != 2) {
                throw ValidationError("edge " + std::to_string(e) + " has " +
                                      std::to_string(corner_ids_of_edge[e].size()) +
                                      " corners at vertex " + std::to_string(v));
            }
        }
        const std::size_t start = incident.front();
        std::vector<std::size_t> chain;
        std::size_t cur = start;
        std::size_t via = corner_ids_of_edge[start][0];
        while (true) {
            chain.push_back(cur);
            const Corner& c = corners[v][via];
            const std::size_t nxt = (c.edge_in == cur) ? c.edge_out : c.edge_in;
            if (nxt == start) {
                break;
            }
            via = (corner_ids_of_edge[nxt][0] == via) ? corner_ids_of_edge[nxt][1]
                                                      : corner_ids_of_edge[nxt][0];
            cur = nxt;
        }
        if (chain.size() != incident.size()) {
            throw ValidationError("the star of vertex " + std::to_string(v) +
                                  " does not close into a single umbrella");
        }
        dual_faces.push_back(std::move(chain));
    }
    return Cellulation(faces_.size(), std::move(dual_edges), std::move(dual_faces));
}

Cellulation Cellulation::toric(std::size_t length) {
    if (length < 2) {
        throw ValidationError("toric cellulation requires L >= 2");
    }
    const std::size_t l = length;
    auto vid = [l](std::size_t i, std::size_t j) { return (i % l) * l + (j % l); };
    auto hid = [l](std::size_t i, std::size_t j) { return (i % l) * l + (j % l); };
    auto wid = [l](std::size_t i, std::size_t j) { return l * l + (i % l) * l + (j % l); };

    std::vector<std::pair<std::size_t, std::size_t>> edges(2 * l * l);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            edges[hid(i, j)] = {vid(i, j), vid(i, j + 1)};
            edges[wid(i, j)] = {vid(i, j), vid(i + 1, j)};
        }
    }
    std::vector<std::vector<std::size_t>> faces(l * l);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            faces[i * l + j] = {hid(i, j), wid(i, j + 1), hid(i + 1, j), wid(i, j)};
        }
    }
    return Cellulation(l * l, std::move(edges), std::move(faces));
}

Cellulation Cellulation::valence_counterexample() {
    // Two vertices joined by a two-edge equator; each hemisphere is a disc
    // cellulated by two interior vertices and five edges so that every
    // face is a triangle and every valence is at least 3. The equator is a
    // bounding two-edge circle, so the code has a weight-2 element while
    // the minimal valence is 3.
    const std::size_t p = 0, q = 1, n1 = 2, n2 = 3, s1 = 4, s2 = 5;
    std::vector<std::pair<std::size_t, std::size_t>> edges = {
        {p, q},   // 0: equator
        {p, q},   // 1: equator
        {p, n1},  // 2
        {q, n1},  // 3
        {n1, n2}, // 4
        {p, n2},  // 5
        {q, n2},  // 6
        {p, s1},  // 7
        {q, s1},  // 8
        {s1, s2}, // 9
        {p, s2},  // 10
        {q, s2},  // 11
    };
    std::vector<std::vector<std::size_t>> faces = {
        {0, 3, 2},   // P -> Q -> N1 -> P
        {2, 4, 5},   // P -> N1 -> N2 -> P
        {3, 4, 6},   // Q -> N1 -> N2 -> Q
        {1, 6, 5},   // P -> Q -> N2 -> P
        {0, 8, 7},   // P -> Q -> S1 -> P
        {7, 9, 10},  // P -> S1 -> S2 -> P
        {8, 9, 11},  // Q -> S1 -> S2 -> Q
        {1, 11, 10}, // P -> Q -> S2 -> P
    };
    return Cellulation(6, std::move(edges), std::move(faces));
}

std::size_t h1_dimension(const Cellulation& c) {
    const BoundaryPair pair = c.boundary_matrices();
    const std::size_t cycles = c.edges().size() - pair.d_x.rank() - pair.d_z.rank();
    return cycles;
}

StabilizerGroup build_code(const Cellulation& c) {
    const std::size_t n = c.edges().size();
    std::vector<PauliOperator> gens;
    gens.reserve(c.faces().size() + c.num_vertices());
    for (const auto& face : c.faces()) {
        BitVector x(n);
        for (std::size_t e : face) {
            x.set(e, true);
        }
        gens.push_back(PauliOperator::from_bits(std::move(x), BitVector(n), 0));
    }
    for (std::size_t v = 0; v < c.num_vertices(); ++v) {
        BitVector z(n);
        for (std::size_t e = 0; e < n; ++e) {
            if (c.edges()[e].first == v || c.edges()[e].second == v) {
                z.set(e, true);
            }
        }
        gens.push_back(PauliOperator::from_bits(BitVector(n), std::move(z), 0));
    }
    return StabilizerGroup::validate(gens, n);
}

} // namespace stabloc
