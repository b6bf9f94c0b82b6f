#include "doctest.h"

#include <algorithm>
#include <map>

#include "stabloc/locality.hpp"
#include "stabloc/surface.hpp"

using namespace stabloc;

namespace {

Cellulation theta_sphere() {
    // Two vertices, three parallel edges, three 2-gon faces.
    return Cellulation(2, {{0, 1}, {0, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 0}});
}

Cellulation cube_surface() {
    std::vector<std::pair<std::size_t, std::size_t>> edges = {
        {0, 1}, {2, 3}, {4, 5}, {6, 7}, // x-direction
        {0, 2}, {1, 3}, {4, 6}, {5, 7}, // y-direction
        {0, 4}, {1, 5}, {2, 6}, {3, 7}, // z-direction
    };
    std::vector<std::vector<std::size_t>> faces = {
        {0, 5, 1, 4},   // bottom
        {2, 7, 3, 6},   // top
        {0, 9, 2, 8},   // front
        {1, 11, 3, 10}, // back
        {4, 10, 6, 8},  // left
        {5, 11, 7, 9},  // right
    };
    return Cellulation(8, std::move(edges), std::move(faces));
}

Cellulation subdivided_theta() {
    // The theta sphere with every edge subdivided once.
    return Cellulation(5,
                       {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}},
                       {{0, 1, 3, 2}, {2, 3, 5, 4}, {4, 5, 1, 0}});
}

// Brute-force oracle: minimum edge support of a nonzero sum of columns.
std::size_t min_boundary_weight(const BitMatrix& d) {
    const std::size_t cols = d.cols();
    REQUIRE(cols <= 16);
    std::size_t best = d.rows() + 1;
    for (std::uint64_t pattern = 1; pattern < (std::uint64_t{1} << cols); ++pattern) {
        BitVector acc(d.rows());
        for (std::size_t c = 0; c < cols; ++c) {
            if ((pattern >> c) & 1u) {
                for (std::size_t r = 0; r < d.rows(); ++r) {
                    if (d.get(r, c)) {
                        acc.set(r, !acc.get(r));
                    }
                }
            }
        }
        if (!acc.is_zero()) {
            best = std::min(best, acc.popcount());
        }
    }
    return best;
}

std::multiset<std::size_t> multiset_of(const std::vector<std::size_t>& v) {
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("toric counts and Euler characteristic") {
    const auto t3 = Cellulation::toric(3);
    CHECK(t3.num_vertices() == 9);
    CHECK(t3.edges().size() == 18);
    CHECK(t3.faces().size() == 9);
    CHECK(t3.euler_characteristic() == 0);

    const auto t2 = Cellulation::toric(2);
    CHECK(t2.num_vertices() == 4);
    CHECK(t2.edges().size() == 8);
    CHECK(t2.faces().size() == 4);

    CHECK_THROWS_AS((void)Cellulation::toric(1), ValidationError);
}

TEST_CASE("boundary matrices carry face sizes and valences as column weights") {
    const auto t2 = Cellulation::toric(2);
    const auto pair = t2.boundary_matrices();
    CHECK(pair.d_x.rows() == 8);
    CHECK(pair.d_x.cols() == 4);
    for (std::size_t f = 0; f < 4; ++f) {
        std::size_t weight = 0;
        for (std::size_t e = 0; e < 8; ++e) {
            weight += pair.d_x.get(e, f);
        }
        CHECK(weight == 4);
    }
    const auto theta = theta_sphere();
    const auto theta_pair = theta.boundary_matrices();
    CHECK(theta_pair.d_x.rows() == 3);
    CHECK(theta_pair.d_x.cols() == 3);
    for (std::size_t f = 0; f < 3; ++f) {
        std::size_t weight = 0;
        for (std::size_t e = 0; e < 3; ++e) {
            weight += theta_pair.d_x.get(e, f);
        }
        CHECK(weight == 2);
    }
}

TEST_CASE("faces and stars always share an even number of edges") {
    for (const auto& c : {Cellulation::toric(2), Cellulation::toric(3), theta_sphere(),
                          cube_surface(), Cellulation::valence_counterexample(),
                          subdivided_theta()}) {
        const auto pair = c.boundary_matrices();
        const BitMatrix product = pair.d_x.transposed().multiplied_by(pair.d_z);
        for (std::size_t r = 0; r < product.rows(); ++r) {
            CHECK(product.row(r).is_zero());
        }
    }
}

TEST_CASE("invalid cellulations are rejected with the offending element") {
    // Self-loop.
    CHECK_THROWS_AS(Cellulation(2, {{0, 0}, {0, 1}}, {{0, 1}}), ValidationError);
    // Two triangles on three parallel edges: the odd walk cannot close.
    CHECK_THROWS_WITH_AS(Cellulation(2, {{0, 1}, {0, 1}, {0, 1}}, {{0, 1, 2}, {0, 1, 2}}),
                         "face 0 is not a closed connected walk", ValidationError);
    // Repeating an edge within one face is rejected outright.
    CHECK_THROWS_WITH_AS(Cellulation(2, {{0, 1}, {0, 1}}, {{0, 0}, {1, 1}}),
                         "face 0 repeats edge 0", ValidationError);
    CHECK_THROWS_AS(Cellulation(2, {{0, 1}, {0, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 0}, {0, 1}}),
                    ValidationError); // edge 0 in three faces
    // A walk that does not close: single edge face.
    CHECK_THROWS_AS(Cellulation(2, {{0, 1}, {0, 1}}, {{0}, {1}}), ValidationError);
    // Disconnected: two separate theta spheres cannot share a complex.
    CHECK_THROWS_AS(Cellulation(4,
                                {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 3}},
                                {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}),
                    ValidationError);
}

TEST_CASE("dual of the cube is an octahedron-type cellulation") {
    const auto octa = cube_surface().dual();
    CHECK(octa.num_vertices() == 6);
    CHECK(octa.edges().size() == 12);
    CHECK(octa.faces().size() == 8);
    CHECK(multiset_of(octa.vertex_valences()) == std::multiset<std::size_t>{4, 4, 4, 4, 4, 4});
    CHECK(multiset_of(octa.face_sizes()) ==
          std::multiset<std::size_t>{3, 3, 3, 3, 3, 3, 3, 3});
}

TEST_CASE("the toric family is combinatorially self-dual") {
    const auto t3 = Cellulation::toric(3);
    const auto dual = t3.dual();
    CHECK(dual.num_vertices() == t3.faces().size());
    CHECK(dual.edges().size() == t3.edges().size());
    CHECK(dual.faces().size() == t3.num_vertices());
    CHECK(multiset_of(dual.vertex_valences()) == multiset_of(t3.vertex_valences()));
    CHECK(multiset_of(dual.face_sizes()) == multiset_of(t3.face_sizes()));
}

TEST_CASE("dual of dual restores the counts and degree data") {
    for (const auto& c : {Cellulation::toric(2), Cellulation::toric(3), theta_sphere(),
                          cube_surface(), Cellulation::valence_counterexample()}) {
        const auto dd = c.dual().dual();
        CHECK(dd.num_vertices() == c.num_vertices());
        CHECK(dd.edges().size() == c.edges().size());
        CHECK(dd.faces().size() == c.faces().size());
        CHECK(multiset_of(dd.vertex_valences()) == multiset_of(c.vertex_valences()));
        CHECK(multiset_of(dd.face_sizes()) == multiset_of(c.face_sizes()));
    }
}

TEST_CASE("built codes have the homological codespace dimension") {
    const auto code3 = build_code(Cellulation::toric(3));
    CHECK(code3.num_qubits() == 18);
    CHECK(h1_dimension(Cellulation::toric(3)) == 2);
    CHECK(code3.codespace_dim() == 4);

    const auto code2 = build_code(Cellulation::toric(2));
    CHECK(code2.num_qubits() == 8);
    CHECK(code2.codespace_dim() == 4);

    // q = 4 independent of lattice size.
    CHECK(build_code(Cellulation::toric(4)).codespace_dim() == 4);

    // Sphere cellulations have trivial first homology.
    CHECK(h1_dimension(theta_sphere()) == 0);
    CHECK(build_code(theta_sphere()).codespace_dim() == 1);
    CHECK(h1_dimension(cube_surface()) == 0);
    CHECK(h1_dimension(Cellulation::valence_counterexample()) == 0);
    CHECK(build_code(Cellulation::valence_counterexample()).codespace_dim() == 1);
}

TEST_CASE("built codes are XZ-split") {
    for (const auto& c : {Cellulation::toric(2), theta_sphere(),
                          Cellulation::valence_counterexample()}) {
        CHECK(css_split(build_code(c)).is_split);
    }
}

TEST_CASE("delta of a built code is the smallest bounding support of either side") {
    for (const auto& c :
         {Cellulation::toric(2), Cellulation::toric(3), Cellulation::valence_counterexample()}) {
        const auto pair = c.boundary_matrices();
        const std::size_t expected =
            std::min(min_boundary_weight(pair.d_x), min_boundary_weight(pair.d_z));
        const auto code = build_code(c);
        CHECK(delta(code).value == expected);
        if (code.num_generators() <= 24) {
            CHECK(delta_oracle(code).value == expected);
        }
    }
}

TEST_CASE("toric codes have delta = eta = 4") {
    const auto code3 = build_code(Cellulation::toric(3));
    CHECK(delta(code3).value == 4);
    CHECK(eta(code3).value == 4);
    const auto code2 = build_code(Cellulation::toric(2));
    CHECK(delta(code2).value == 4);
    CHECK(eta(code2).value == 4);
    CHECK(delta_oracle(code2).value == 4);
    CHECK(eta_oracle(code2).value == 4);
}

TEST_CASE("the valence counterexample separates delta from the minimum valence") {
    const auto c = Cellulation::valence_counterexample();
    CHECK(c.euler_characteristic() == 2);
    const auto valences = c.vertex_valences();
    CHECK(*std::min_element(valences.begin(), valences.end()) == 3);
    const auto sizes = c.face_sizes();
    CHECK(*std::min_element(sizes.begin(), sizes.end()) == 3);

    const auto code = build_code(c);
    const auto report = delta(code);
    CHECK(report.value == 2);
    // The witness is the pure-X bounding circle on the two equator edges.
    const auto& witness = report.witness.front();
    CHECK(witness.z_bits().is_zero());
    CHECK(witness.support() == std::vector<std::size_t>{0, 1});
    CHECK(delta_oracle(code).value == 2);
}

TEST_CASE("subdividing every edge of the theta sphere raises the X-side minimum") {
    const auto before = theta_sphere().boundary_matrices();
    const auto after = subdivided_theta().boundary_matrices();
    CHECK(min_boundary_weight(before.d_x) == 2);
    CHECK(min_boundary_weight(after.d_x) == 4);
    // Overall delta stays pinned by the Z side: each midpoint vertex has
    // valence 2, so both codes still contain a weight-2 element.
    CHECK(delta(build_code(theta_sphere())).value == 2);
    CHECK(delta(build_code(subdivided_theta())).value == 2);
    CHECK(min_boundary_weight(after.d_z) == 2);
}
