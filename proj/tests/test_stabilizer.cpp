#include "doctest.h"

#include <random>
#include <set>

#include "stabloc/dense.hpp"
#include "stabloc/stabilizer.hpp"
#include "support/random_instances.hpp"

using namespace stabloc;
using stabloc::testing::random_group;

namespace {

std::vector<PauliOperator> ops(const std::vector<std::string>& labels) {
    std::vector<PauliOperator> out;
    for (const auto& l : labels) {
        out.push_back(PauliOperator::from_string(l));
    }
    return out;
}

// Commuting two-generator group with the same check-level structure as the
// worked example: two weight-2 generators, q = 2, all nonidentity elements
// of weight 2.
StabilizerGroup example_like_group() {
    return StabilizerGroup::validate(ops({"XIZ", "IZZ"}));
}

StabilizerGroup bell_group() {
    return StabilizerGroup::validate(ops({"ZZ", "XX"}));
}

StabilizerGroup ghz_group() {
    return StabilizerGroup::validate(ops({"ZZI", "IZZ", "XXX"}));
}

double max_abs(const DenseMatrix& m) {
    return m.cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("validate accepts a commuting pair and records q") {
    const auto g = example_like_group();
    CHECK(g.num_qubits() == 3);
    CHECK(g.num_generators() == 2);
    CHECK(g.codespace_dim() == 2);
    CHECK(g.group_order() == 4);
    CHECK(g.removed_inputs().empty());
}

TEST_CASE("validate rejects anticommuting generators, naming the pair") {
    // The worked example's literal generators anticommute on their only
    // overlapping qubit, so they do not form a stabilizer group.
    CHECK_THROWS_WITH_AS((void)StabilizerGroup::validate(ops({"XIZ", "IZX"})),
                         "generators 1 and 2 anticommute", ValidationError);
    CHECK_THROWS_AS((void)StabilizerGroup::validate(ops({"X", "Z"})), ValidationError);
}

TEST_CASE("validate rejects a trivial codespace with a certificate") {
    try {
        (void)StabilizerGroup::validate(ops({"Z", "-Z"}));
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("-identity") != std::string::npos);
        CHECK(std::string(e.what()).find("1, 2") != std::string::npos);
    }
}

TEST_CASE("validate drops redundant generators and reports them") {
    const auto g = StabilizerGroup::validate(ops({"ZZI", "IZZ", "ZIZ"}));
    CHECK(g.num_generators() == 2);
    CHECK(g.removed_inputs() == std::vector<std::size_t>{2});
}

TEST_CASE("validate rejects non-Hermitian input") {
    const auto bad = PauliOperator::from_string("XIZ").multiplied_by(
        PauliOperator::from_string("IZX"));
    CHECK_THROWS_AS((void)StabilizerGroup::validate({bad}), ValidationError);
}

TEST_CASE("membership distinguishes members, negated members, and strangers") {
    const auto g = example_like_group();
    CHECK(g.membership(PauliOperator::from_string("XIZ")).result == Membership::InGroup);
    CHECK(g.membership(PauliOperator::from_string("-XIZ")).result ==
          Membership::NegationInGroup);
    CHECK(g.membership(PauliOperator::from_string("ZII")).result == Membership::Neither);
    CHECK_THROWS_AS((void)g.membership(PauliOperator::from_bits(BitVector(3), BitVector(3), 1)),
                    ValidationError);
}

TEST_CASE("enumerate yields each element exactly once, sign-exact") {
    const auto g = example_like_group();
    const auto elements = g.elements();
    REQUIRE(elements.size() == 4);
    std::set<std::string> labels;
    for (const auto& e : elements) {
        labels.insert(e.to_string());
    }
    CHECK(labels == std::set<std::string>{"+III", "+XIZ", "+IZZ", "+XZI"});

    const auto trivial = StabilizerGroup::validate({}, 2);
    REQUIRE(trivial.elements().size() == 1);
    CHECK(trivial.elements().front() == PauliOperator::identity(2));

    const auto zz = StabilizerGroup::validate(ops({"ZI", "IZ"}));
    const auto diag = zz.elements();
    CHECK(diag.size() == 4);
    for (const auto& e : diag) {
        CHECK(e.x_bits().is_zero());
    }

    CHECK_THROWS_AS((void)example_like_group().elements(1), ResourceError);
}

TEST_CASE("membership agrees with enumeration on random groups") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        const auto g = random_group(n, 1 + rng() % n, rng);
        g.for_each_element([&](const PauliOperator& e) {
            CHECK(g.membership(e).result == Membership::InGroup);
            CHECK(g.membership(e.negated()).result == Membership::NegationInGroup);
        });
    }
}

TEST_CASE("subgroup_nu keeps exactly the low-weight-generated part") {
    const auto ghz = ghz_group();
    const auto z_block = ghz.subgroup_nu(2);
    CHECK(z_block.num_generators() == 2);
    for (const auto& gen : z_block.generators()) {
        CHECK(gen.weight() <= 2);
        CHECK(gen.x_bits().is_zero());
    }
    CHECK(z_block.codespace_dim() == 2);

    const auto full = ghz.subgroup_nu(3);
    CHECK(full.num_generators() == ghz.num_generators());

    const auto none = example_like_group().subgroup_nu(1);
    CHECK(none.num_generators() == 0);
}

TEST_CASE("subgroup_nu matches an enumeration oracle on random groups") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        const auto g = random_group(n, 1 + rng() % n, rng);
        const std::size_t nu = 1 + rng() % n;
        // Oracle: span of the check rows of all elements with weight <= nu.
        BitMatrix low(0, 2 * n);
        g.for_each_element([&](const PauliOperator& e) {
            if (!e.is_identity_pattern() && e.weight() <= nu) {
                low.append_row(e.check_row());
            }
        });
        const auto g_nu = g.subgroup_nu(nu);
        CHECK(g_nu.check_matrix().rank() == low.rank());
        // Every produced generator is a nu-local member of G.
        for (const auto& gen : g_nu.generators()) {
            CHECK(gen.weight() <= nu);
            CHECK(g.membership(gen).result == Membership::InGroup);
        }
        CHECK(g_nu.codespace_dim() >= g.codespace_dim());
    }
}

TEST_CASE("extend flips exactly the chosen completion generators") {
    const auto bell = bell_group();
    const auto basis = bell.extension_basis(1);
    CHECK(basis.s == 0);
    CHECK(basis.t == 2);

    BitVector none(2);
    CHECK(bell.extend(1, none).check_matrix() == bell.check_matrix());
    CHECK(bell.extend(1, none).signs() == bell.signs());

    BitVector flip_second(2);
    flip_second.set(1, true);
    const auto flipped = bell.extend(1, flip_second);
    CHECK(flipped.signs() == std::vector<int>{1, -1});
    CHECK(flipped.generators()[1] == PauliOperator::from_string("-XX"));

    // Flipping twice restores the group.
    const auto twice = flipped.extend(1, flip_second);
    CHECK(twice.signs() == bell.extend(1, none).signs());

    CHECK_THROWS_AS((void)bell.extend(1, BitVector(1)), DimensionError);
}

TEST_CASE("codespaces of distinct extensions are orthogonal") {
    const auto bell = bell_group();
    std::vector<DenseMatrix> projectors;
    for (unsigned pattern = 0; pattern < 4; ++pattern) {
        BitVector b(2);
        b.set(0, pattern & 1u);
        b.set(1, (pattern >> 1) & 1u);
        projectors.push_back(bell.extend(1, b).projector());
    }
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        for (std::size_t j = i + 1; j < projectors.size(); ++j) {
            CHECK(max_abs(projectors[i] * projectors[j]) < 1e-9);
        }
    }

    std::mt19937_64 rng(43);
    const auto g = random_group(4, 3, rng);
    const auto basis = g.extension_basis(1);
    if (basis.t > basis.s) {
        const std::size_t bits = basis.t - basis.s;
        std::vector<DenseMatrix> ps;
        for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << bits); ++pattern) {
            BitVector b(bits);
            for (std::size_t k = 0; k < bits; ++k) {
                b.set(k, (pattern >> k) & 1u);
            }
            ps.push_back(g.extend(1, b).projector());
        }
        for (std::size_t i = 0; i < ps.size(); ++i) {
            for (std::size_t j = i + 1; j < ps.size(); ++j) {
                CHECK(max_abs(ps[i] * ps[j]) < 1e-9);
            }
        }
    }
}

TEST_CASE("projector of a single-qubit Z group") {
    const auto g = StabilizerGroup::validate(ops({"Z"}));
    const DenseMatrix pi = g.projector();
    CHECK(pi(0, 0) == std::complex<double>(1, 0));
    CHECK(max_abs(pi - (DenseMatrix(2, 2) << 1, 0, 0, 0).finished()) < 1e-15);
}

TEST_CASE("projector laws hold for fixed and random groups") {
    std::mt19937_64 rng(44);
    std::vector<StabilizerGroup> groups = {example_like_group(), bell_group(), ghz_group()};
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        groups.push_back(random_group(n, 1 + rng() % n, rng));
    }
    for (const auto& g : groups) {
        const DenseMatrix pi = g.projector();
        CHECK(max_abs(pi * pi - pi) <= 1e-10);
        CHECK(max_abs(pi - pi.adjoint()) <= 1e-12);
        const double expected_trace = static_cast<double>(g.codespace_dim());
        CHECK(std::abs(pi.trace().real() - expected_trace) <= 1e-9);
        CHECK(std::abs(pi.trace().imag()) <= 1e-12);
        for (const auto& gen : g.generators()) {
            CHECK(max_abs(pi * to_dense(gen) - pi) <= 1e-9);
        }
    }
}

TEST_CASE("check matrix round trips through from_check_matrix") {
    const auto g = ghz_group();
    const auto rebuilt = StabilizerGroup::from_check_matrix(g.check_matrix(), g.signs());
    CHECK(rebuilt.check_matrix() == g.check_matrix());
    CHECK(rebuilt.signs() == g.signs());
}
