// Acceptance suite: ten end-to-end criteria, each printed as a single
// pass/fail line with its measured quantities. Exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stabloc/dense.hpp"
#include "stabloc/formats.hpp"
#include "stabloc/locality.hpp"
#include "stabloc/spectral.hpp"
#include "stabloc/stabilizer.hpp"
#include "stabloc/surface.hpp"
#include "support/random_instances.hpp"

using namespace stabloc;
using stabloc::testing::random_group;
using stabloc::testing::random_pauli;
using stabloc::testing::random_split_group;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Check {
  public:
    void require(bool condition, const std::string& message) {
        if (!condition && failures_ < 5) {
            if (!detail_.empty()) {
                detail_ += "; ";
            }
            detail_ += message;
        }
        if (!condition) {
            ++failures_;
        }
    }

    void note(const std::string& message) { note_ = message; }

    Outcome outcome() const {
        if (failures_ == 0) {
            return {true, note_};
        }
        return {false, detail_ + " (" + std::to_string(failures_) + " failed assertions)"};
    }

  private:
    std::size_t failures_ = 0;
    std::string detail_;
    std::string note_;
};

double ms_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

std::vector<PauliOperator> ops(const std::vector<std::string>& labels) {
    std::vector<PauliOperator> out;
    for (const auto& l : labels) {
        out.push_back(PauliOperator::from_string(l));
    }
    return out;
}

StabilizerGroup example_like_group() {
    return StabilizerGroup::validate(ops({"XIZ", "IZZ"}));
}

StabilizerGroup bell_group() {
    return StabilizerGroup::validate(ops({"ZZ", "XX"}));
}

StabilizerGroup ghz_group() {
    return StabilizerGroup::validate(ops({"ZZI", "IZZ", "XXX"}));
}

StabilizerGroup steane_code() {
    return StabilizerGroup::validate(ops({"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ",
                                          "ZIZIZIZ"}));
}

double max_abs(const DenseMatrix& m) {
    return m.cwiseAbs().maxCoeff();
}

PauliSum doubly_degenerate_field(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    PauliSum h(3);
    for (std::size_t q = 0; q < 2; ++q) {
        for (char letter : {'X', 'Y', 'Z'}) {
            h.add_term(dist(rng), PauliOperator::single(3, q, letter));
        }
    }
    return h;
}

Outcome criterion1_worked_example() {
    Check check;
    const BitMatrix a = BitMatrix::from_rows({"100001", "001010"});
    const std::vector<int> signs = {1, 1};
    const auto start = std::chrono::steady_clock::now();
    const LocalityReport report = delta_of_check_matrix(a, signs);
    const double elapsed = ms_since(start);
    check.require(report.value == 2, "delta != 2");
    check.require(report.witness_subset == std::vector<std::size_t>{0, 2},
                  "rank drop not at S = {1,3}");
    check.require(report.witness.size() == 1 && report.witness.front().to_string() == "+XIZ",
                  "witness is not +XIZ");
    check.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " ms >= 1 ms");
    std::ostringstream note;
    note << "delta=2 at S={1,3}, witness +XIZ, " << elapsed << " ms";
    check.note(note.str());
    return check.outcome();
}

Outcome criterion2_oracle_equivalence() {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1000);
    int done = 0;
    while (done < 200) {
        const std::size_t n = 2 + rng() % 6;
        const std::size_t m = 1 + rng() % std::min(n, std::size_t{7});
        const StabilizerGroup g = random_group(n, m, rng);
        if (g.num_generators() == 0) {
            continue;
        }
        const std::size_t d_algo = delta(g).value;
        const std::size_t d_orac = delta_oracle(g).value;
        const std::size_t e_algo = eta(g).value;
        const std::size_t e_orac = eta_oracle(g).value;
        check.require(d_algo == d_orac, "delta mismatch on group " + std::to_string(done));
        check.require(e_algo == e_orac, "eta mismatch on group " + std::to_string(done));
        check.require(d_algo <= e_algo, "delta > eta on group " + std::to_string(done));
        ++done;
    }
    const double elapsed = ms_since(start);
    check.require(elapsed < 60000.0, "runtime above 60 s");
    std::ostringstream note;
    note << "200 groups, exact agreement, " << elapsed / 1000.0 << " s";
    check.note(note.str());
    return check.outcome();
}

Outcome criterion3_projector_laws() {
    Check check;
    std::vector<StabilizerGroup> groups = {example_like_group(), bell_group(), ghz_group(),
                                           steane_code(), build_code(Cellulation::toric(2))};
    std::mt19937_64 rng(2000);
    for (int i = 0; i < 10; ++i) {
        const std::size_t n = 2 + rng() % 5;
        const StabilizerGroup g = random_group(n, 1 + rng() % n, rng);
        if (g.num_generators() > 0) {
            groups.push_back(g);
        }
    }
    int count = 0;
    for (const auto& g : groups) {
        const DenseMatrix pi = g.projector();
        check.require(max_abs(pi * pi - pi) <= 1e-10,
                      "projector not idempotent within 1e-10 (group " + std::to_string(count) +
                          ")");
        const double expected = static_cast<double>(g.codespace_dim());
        check.require(std::abs(pi.trace().real() - expected) <= 1e-9,
                      "trace != 2^{n-m} within 1e-9 (group " + std::to_string(count) + ")");
        ++count;
    }
    check.note(std::to_string(count) + " groups, idempotence <= 1e-10, trace within 1e-9");
    return check.outcome();
}

Outcome criterion4_theorem1() {
    Check check;
    const std::vector<std::pair<std::string, StabilizerGroup>> groups = {
        {"example", example_like_group()},
        {"bell", bell_group()},
        {"ghz", ghz_group()},
        {"steane", steane_code()},
        {"toric2", build_code(Cellulation::toric(2))},
    };
    int instances = 0;
    for (const auto& [name, g] : groups) {
        const std::size_t d = delta(g).value;
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            PauliSum h(g.num_qubits());
            if (d >= 2) {
                h = random_local_hamiltonian(g.num_qubits(), d - 1, 4000 + seed);
            }
            const Theorem1Certificate cert = check_theorem1(g, h);
            check.require(std::abs(cert.trace_value) <= 1e-9 * std::max(1.0, cert.e_norm),
                          name + " trace above tolerance (seed " + std::to_string(seed) + ")");
            check.require(cert.witness_expectation >= -1e-9,
                          name + " witness expectation below -1e-9 (seed " +
                              std::to_string(seed) + ")");
            ++instances;
        }
    }
    check.note(std::to_string(instances) + " instances over " + std::to_string(groups.size()) +
               " groups");
    return check.outcome();
}

Outcome criterion5_theorem2() {
    Check check;
    std::vector<StabilizerGroup> groups = {bell_group(), ghz_group()};
    std::mt19937_64 rng(3000);
    while (groups.size() < 5) {
        const StabilizerGroup g = random_group(3 + rng() % 4, 2 + rng() % 2, rng);
        if (g.num_generators() >= 2) {
            groups.push_back(g);
        }
    }
    int checks = 0;
    for (const auto& g : groups) {
        for (std::size_t nu = 1; nu < g.num_qubits(); ++nu) {
            const auto basis = g.extension_basis(nu);
            if (basis.s == basis.t || basis.t - basis.s > 6) {
                continue;
            }
            const std::size_t bits = basis.t - basis.s;
            for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << bits); ++pattern) {
                BitVector b(bits);
                for (std::size_t k = 0; k < bits; ++k) {
                    b.set(k, (pattern >> k) & 1u);
                }
                for (std::uint64_t seed = 1; seed <= 20; ++seed) {
                    const PauliSum h = random_local_hamiltonian(g.num_qubits(), nu, 5000 + seed);
                    const Theorem2Certificate cert = check_theorem2(g, nu, b, h);
                    check.require(cert.difference <= 1e-9,
                                  "trace difference above 1e-9 (pattern " +
                                      std::to_string(pattern) + ")");
                    ++checks;
                }
            }
        }
    }
    check.note(std::to_string(checks) + " (group, nu, b, H) checks, difference <= 1e-9");
    return check.outcome();
}

Outcome criterion6_gap_pinch() {
    Check check;
    int done = 0;
    std::uint64_t seed = 0;
    int hypothesis_misses = 0;
    while (done < 50 && seed < 200) {
        ++seed;
        StabilizerGroup g;
        PauliSum h(0);
        std::size_t nu = 1;
        switch (seed % 3) {
            case 0:
                g = bell_group();
                h = random_local_hamiltonian(2, 1, 6000 + seed);
                break;
            case 1:
                g = ghz_group();
                nu = 1 + (seed % 2);
                h = random_local_hamiltonian(3, nu, 6000 + seed);
                break;
            default:
                g = example_like_group();
                h = doubly_degenerate_field(6000 + seed);
                break;
        }
        GapPinchCertificate cert;
        try {
            cert = check_gap_pinch(g, nu, h);
        } catch (const PreconditionError&) {
            ++hypothesis_misses;
            continue;
        }
        check.require(cert.theorem_bound.slack >= -1e-9,
                      "theorem bound violated (seed " + std::to_string(seed) + ")");
        check.require(cert.corollary_bound.slack >= -1e-9,
                      "corollary bound violated (seed " + std::to_string(seed) + ")");
        const TraceIdentityCertificate identity = trace_identity(g, nu, h);
        check.require(identity.difference <= 1e-9,
                      "trace identity broken (seed " + std::to_string(seed) + ")");
        ++done;
    }
    check.require(done == 50, "only " + std::to_string(done) + " hypothesis-satisfying instances");
    check.note("50 instances, slack >= -1e-9 on both bounds, trace identity <= 1e-9 (" +
               std::to_string(hypothesis_misses) + " draws failed the hypothesis)");
    return check.outcome();
}

Outcome criterion7_css_proposition() {
    Check check;
    int count = 0;
    auto verify = [&](const StabilizerGroup& g) {
        const CssLocalityReport r = css_locality(g); // asserts both identities internally
        std::size_t dmin = g.num_qubits() + 1;
        if (r.delta_x) {
            dmin = std::min(dmin, *r.delta_x);
        }
        if (r.delta_z) {
            dmin = std::min(dmin, *r.delta_z);
        }
        std::size_t emax = 0;
        if (r.eta_x) {
            emax = std::max(emax, *r.eta_x);
        }
        if (r.eta_z) {
            emax = std::max(emax, *r.eta_z);
        }
        check.require(r.delta == dmin, "delta != min of sides");
        check.require(r.eta == emax, "eta != max of sides");
        ++count;
    };
    verify(steane_code());
    std::mt19937_64 rng(7000);
    int split_done = 0;
    while (split_done < 20) {
        const std::size_t n = 3 + rng() % 5;
        const StabilizerGroup g = random_split_group(n, 1 + rng() % 2, 1 + rng() % 2, rng);
        if (g.num_generators() < 2 || !css_split(g).is_split) {
            continue;
        }
        verify(g);
        ++split_done;
    }
    check.note(std::to_string(count) + " split groups (Steane + 20 random), identities exact");
    return check.outcome();
}

Outcome criterion8_surface_codes() {
    Check check;
    const Cellulation t2 = Cellulation::toric(2);
    const Cellulation t3 = Cellulation::toric(3);
    const StabilizerGroup code2 = build_code(t2);
    const StabilizerGroup code3 = build_code(t3);
    check.require(code2.codespace_dim() == 4, "toric(2) q != 4");
    check.require(code3.codespace_dim() == 4, "toric(3) q != 4");
    check.require(delta(code2).value == 4, "toric(2) delta != 4");
    check.require(eta(code2).value == 4, "toric(2) eta != 4");
    check.require(delta_oracle(code2).value == 4, "toric(2) delta oracle != 4");
    check.require(eta_oracle(code2).value == 4, "toric(2) eta oracle != 4");
    check.require(delta(code3).value == 4, "toric(3) delta != 4");
    check.require(eta(code3).value == 4, "toric(3) eta != 4");
    check.require(delta_oracle(code3).value == 4, "toric(3) delta oracle != 4");

    for (const auto& cell : {t2, t3, Cellulation::toric(4),
                             Cellulation(2, {{0, 1}, {0, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 0}}),
                             Cellulation::valence_counterexample()}) {
        const BoundaryPair pair = cell.boundary_matrices();
        const BitMatrix product = pair.d_x.transposed().multiplied_by(pair.d_z);
        bool zero = true;
        for (std::size_t r = 0; r < product.rows(); ++r) {
            zero = zero && product.row(r).is_zero();
        }
        check.require(zero, "D_X^T D_Z != 0");
    }
    check.note("toric(2)/toric(3): q=4, delta=eta=4 (oracle-confirmed); D_X^T D_Z = 0 on all");
    return check.outcome();
}

Outcome criterion9_counterexample() {
    Check check;
    const Cellulation cell = Cellulation::valence_counterexample();
    const auto valences = cell.vertex_valences();
    const auto sizes = cell.face_sizes();
    check.require(*std::min_element(valences.begin(), valences.end()) == 3,
                  "minimum valence != 3");
    check.require(*std::min_element(sizes.begin(), sizes.end()) == 3, "minimum face size != 3");
    check.require(cell.euler_characteristic() == 2, "not a sphere");
    const StabilizerGroup code = build_code(cell);
    const LocalityReport report = delta(code);
    check.require(report.value == 2, "delta != 2");
    check.require(delta_oracle(code).value == 2, "delta oracle != 2");
    check.require(report.witness.front().z_bits().is_zero(), "witness not pure-X");
    check.note("sphere with min valence 3, min face size 3, delta = 2 (pure-X equator witness)");
    return check.outcome();
}

Outcome criterion10_round_trips() {
    Check check;
    std::mt19937_64 rng(8000);
    std::vector<StabilizerGroup> groups = {bell_group(), ghz_group(), steane_code()};
    for (int i = 0; i < 5; ++i) {
        const std::size_t n = 1 + rng() % 6;
        const StabilizerGroup g = random_group(n, 1 + rng() % n, rng);
        if (g.num_generators() > 0) {
            groups.push_back(g);
        }
    }
    for (const auto& g : groups) {
        const std::string text = emit_check_matrix(g);
        const SignedCheckMatrix parsed = parse_check_matrix(text);
        check.require(parsed.matrix == g.check_matrix() && parsed.signs == g.signs(),
                      "check-matrix round trip changed the structure");
        check.require(emit_check_matrix(parsed.matrix, parsed.signs) == text,
                      "check-matrix re-emit not byte-identical");
    }
    for (const auto& cell : {Cellulation::toric(2), Cellulation::toric(3),
                             Cellulation(2, {{0, 1}, {0, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 0}}),
                             Cellulation::valence_counterexample()}) {
        const std::string text = emit_cellulation(cell);
        check.require(emit_cellulation(parse_cellulation(text)) == text,
                      "cellulation round trip not byte-identical");
    }
    int coeff_checks = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        PauliSum sum(n);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (int t = 0; t < 6; ++t) {
            sum.add_term(dist(rng), random_pauli(n, rng));
        }
        const PauliSum rebuilt = pauli_decompose(sum_to_dense(sum));
        const auto original = sum.terms();
        const auto recovered = rebuilt.terms();
        std::size_t oi = 0;
        for (const auto& [coeff, op] : recovered) {
            while (oi < original.size() && !(original[oi].second == op)) {
                check.require(std::abs(original[oi].first) <= 1e-10,
                              "nonzero coefficient dropped in round trip");
                ++oi;
            }
            if (oi == original.size()) {
                check.require(false, "unexpected coefficient appeared in round trip");
                break;
            }
            check.require(std::abs(coeff - original[oi].first) <= 1e-10,
                          "coefficient distorted beyond 1e-10");
            ++oi;
            ++coeff_checks;
        }
    }
    check.note(std::to_string(groups.size()) + " groups + 4 cellulations byte-identical; " +
               std::to_string(coeff_checks) + " coefficients within 1e-10");
    return check.outcome();
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"worked-example delta", criterion1_worked_example},
        {"oracle equivalence on 200 random groups", criterion2_oracle_equivalence},
        {"projector laws", criterion3_projector_laws},
        {"theorem 1 trace and witness", criterion4_theorem1},
        {"theorem 2 extension blindness", criterion5_theorem2},
        {"gap-pinching bounds and trace identity", criterion6_gap_pinch},
        {"CSS split proposition", criterion7_css_proposition},
        {"toric surface codes", criterion8_surface_codes},
        {"valence counterexample", criterion9_counterexample},
        {"format round trips and decomposition identity", criterion10_round_trips},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (!outcome.pass) {
            ++failures;
        }
        std::printf("[%s] criterion %zu: %s%s%s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), outcome.detail.empty() ? "" : " — ",
                    outcome.detail.c_str());
        std::fflush(stdout);
    }
    if (failures > 0) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    }
    return failures == 0 ? 0 : 1;
}
