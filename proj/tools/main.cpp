#include <algorithm>
#include <chrono>
#include <sstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stabloc/formats.hpp"
#include "stabloc/locality.hpp"
#include "stabloc/spectral.hpp"
#include "stabloc/stabilizer.hpp"
#include "stabloc/surface.hpp"

using json = nlohmann::ordered_json;
using namespace stabloc;

namespace {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kPrecondition = 2,
    kViolation = 3,
};

class Timer {
  public:
    double elapsed_ms() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string render_double(double value) {
    std::ostringstream out;
    out.precision(6);
    out << value;
    return out.str();
}

struct Report {
    json body;
    json verdicts = json::array();
    bool format_json = false;
    std::vector<std::string> text_lines;

    void verdict(const std::string& name, bool pass, double measured, double tolerance) {
        verdicts.push_back(
            {{"name", name}, {"pass", pass}, {"measured", measured}, {"tolerance", tolerance}});
        if (!format_json) {
            text_lines.push_back(std::string(pass ? "[PASS] " : "[FAIL] ") + name +
                                 " (measured=" + render_double(measured) +
                                 ", tolerance=" + render_double(tolerance) + ")");
        }
    }

    void line(const std::string& s) { text_lines.push_back(s); }

    bool all_pass() const {
        for (const auto& v : verdicts) {
            if (!v["pass"].get<bool>()) {
                return false;
            }
        }
        return true;
    }

    double parse_ms = 0.0;

    int finish(const Timer& timer) {
        body["verdicts"] = verdicts;
        body["timing"] = {{"parse_ms", parse_ms},
                          {"compute_ms", timer.elapsed_ms() - parse_ms},
                          {"total_ms", timer.elapsed_ms()}};
        if (format_json) {
            std::cout << body.dump(2) << "\n";
        } else {
            for (const auto& l : text_lines) {
                std::cout << l << "\n";
            }
        }
        return all_pass() ? kOk : kViolation;
    }
};

Report make_report(const std::string& command, bool format_json) {
    Report r;
    r.format_json = format_json;
    r.body["schema"] = "1";
    r.body["command"] = command;
    return r;
}

std::string render_subset_1based(const std::vector<std::size_t>& subset) {
    std::string s = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) {
            s += ",";
        }
        s += std::to_string(subset[i] + 1);
    }
    return s + "}";
}

bool rows_commute(const SignedCheckMatrix& m) {
    std::vector<PauliOperator> ops;
    for (std::size_t r = 0; r < m.num_rows(); ++r) {
        ops.push_back(PauliOperator::from_check_row(m.matrix.row(r), m.signs[r]));
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            if (!ops[i].commutes_with(ops[j])) {
                return false;
            }
        }
    }
    return true;
}

json echo_inputs(const std::string& path, const SignedCheckMatrix& m) {
    return {{"file", path},
            {"qubits", m.num_qubits()},
            {"generators", m.num_rows()},
            {"commutative", rows_commute(m)}};
}

int run_metric(const std::string& path, MetricKind kind, bool oracle, std::uint64_t budget,
               bool format_json) {
    Timer timer;
    const std::string name = kind == MetricKind::Delta ? "delta" : "eta";
    Report report = make_report(name, format_json);
    const SignedCheckMatrix input = parse_check_matrix(read_text_file(path));
    report.parse_ms = timer.elapsed_ms();
    report.body["inputs"] = echo_inputs(path, input);

    LocalityOptions options;
    options.max_subsets = budget;
    LocalityReport result;
    try {
        result = kind == MetricKind::Delta ? delta_of_check_matrix(input.matrix, input.signs, options)
                                           : eta_of_check_matrix(input.matrix, input.signs, options);
    } catch (const BudgetError& e) {
        report.body["results"] = {{"status", "budget-exceeded"},
                                  {"lower_bound", e.lower_bound},
                                  {"subsets_examined", e.subsets_examined}};
        report.line("budget exceeded after " + std::to_string(e.subsets_examined) +
                    " subsets; " + name + " >= " + std::to_string(e.lower_bound));
        report.body["verdicts"] = report.verdicts;
        report.body["timing"] = {{"total_ms", timer.elapsed_ms()}};
        if (format_json) {
            std::cout << report.body.dump(2) << "\n";
        } else {
            for (const auto& l : report.text_lines) {
                std::cout << l << "\n";
            }
        }
        return kPrecondition;
    }

    json results;
    results["value"] = result.value;
    results["subsets_examined"] = result.subsets_examined;
    if (kind == MetricKind::Delta) {
        results["witness"] = result.witness.front().to_string();
        results["witness_subset_1based"] = [&] {
            json arr = json::array();
            for (std::size_t q : result.witness_subset) {
                arr.push_back(q + 1);
            }
            return arr;
        }();
    } else {
        json arr = json::array();
        for (const auto& w : result.witness) {
            arr.push_back(w.to_string());
        }
        results["witness"] = arr;
    }

    std::string oracle_note;
    if (oracle) {
        const LocalityReport check =
            kind == MetricKind::Delta ? delta_oracle_of_check_matrix(input.matrix, input.signs)
                                      : eta_oracle_of_check_matrix(input.matrix, input.signs);
        results["oracle_value"] = check.value;
        if (check.value != result.value) {
            throw InternalConsistencyError(name + " algorithm returned " +
                                           std::to_string(result.value) + " but the oracle found " +
                                           std::to_string(check.value));
        }
        oracle_note = " (oracle agrees)";
    }
    report.body["results"] = results;

    report.line(name + " = " + std::to_string(result.value) + oracle_note);
    if (kind == MetricKind::Delta) {
        report.line("witness " + result.witness.front().to_string() + " at S = " +
                    render_subset_1based(result.witness_subset));
    } else {
        for (const auto& w : result.witness) {
            report.line("witness generator " + w.to_string());
        }
    }
    report.line("subsets examined: " + std::to_string(result.subsets_examined));
    return report.finish(timer);
}

int run_surface(const std::string& variant, std::size_t length, const std::string& cell_path,
                const std::string& emit_path, bool format_json) {
    Timer timer;
    Report report = make_report("surface", format_json);
    std::optional<Cellulation> cell;
    json inputs;
    inputs["variant"] = variant;
    if (variant == "toric") {
        inputs["L"] = length;
        cell = Cellulation::toric(length);
    } else if (variant == "from") {
        inputs["file"] = cell_path;
        cell = parse_cellulation(read_text_file(cell_path));
    } else {
        cell = Cellulation::valence_counterexample();
    }
    report.parse_ms = timer.elapsed_ms();
    report.body["inputs"] = inputs;

    const StabilizerGroup code = build_code(*cell);
    json results;
    results["vertices"] = cell->num_vertices();
    results["edges"] = cell->edges().size();
    results["faces"] = cell->faces().size();
    results["euler_characteristic"] = cell->euler_characteristic();
    results["h1_dimension"] = h1_dimension(*cell);
    results["qubits"] = code.num_qubits();
    results["generators"] = code.num_generators();
    results["codespace_dim"] = code.codespace_dim();
    const auto valences = cell->vertex_valences();
    const auto sizes = cell->face_sizes();
    results["min_valence"] = *std::min_element(valences.begin(), valences.end());
    results["min_face_size"] = *std::min_element(sizes.begin(), sizes.end());

    if (!emit_path.empty()) {
        const std::string text = emit_check_matrix(code);
        // Emitted files must re-parse to the same structure.
        const SignedCheckMatrix reparsed = parse_check_matrix(text);
        if (!(reparsed.matrix == code.check_matrix()) || reparsed.signs != code.signs()) {
            throw InternalConsistencyError("emitted check matrix does not round trip");
        }
        write_text_file(emit_path, text);
        results["emitted"] = emit_path;
    }
    report.body["results"] = results;

    report.line("cellulation: V=" + std::to_string(cell->num_vertices()) +
                " E=" + std::to_string(cell->edges().size()) +
                " F=" + std::to_string(cell->faces().size()) +
                " chi=" + std::to_string(cell->euler_characteristic()));
    report.line("code: n=" + std::to_string(code.num_qubits()) +
                " m=" + std::to_string(code.num_generators()) +
                " q=" + std::to_string(code.codespace_dim()) +
                " dimH1=" + std::to_string(h1_dimension(*cell)));
    report.line("min valence = " + std::to_string(results["min_valence"].get<std::size_t>()) +
                ", min face size = " +
                std::to_string(results["min_face_size"].get<std::size_t>()));
    if (!emit_path.empty()) {
        report.line("check matrix written to " + emit_path);
    }
    return report.finish(timer);
}

StabilizerGroup load_group(const std::string& path) {
    const SignedCheckMatrix input = parse_check_matrix(read_text_file(path));
    return StabilizerGroup::from_check_matrix(input.matrix, input.signs);
}

int run_verify_theorem1(const std::string& path, std::uint64_t seed, std::size_t trials,
                        bool format_json) {
    Timer timer;
    Report report = make_report("verify theorem1", format_json);
    const StabilizerGroup g = load_group(path);
    report.parse_ms = timer.elapsed_ms();
    const std::size_t d = delta(g).value;
    report.body["inputs"] = {{"file", path},
                             {"qubits", g.num_qubits()},
                             {"generators", g.num_generators()},
                             {"delta", d},
                             {"hamiltonian_locality", d - 1},
                             {"seed", seed},
                             {"trials", trials}};
    json trial_results = json::array();
    for (std::size_t t = 0; t < trials; ++t) {
        PauliSum h(g.num_qubits());
        if (d >= 2) {
            h = random_local_hamiltonian(g.num_qubits(), d - 1, seed + t);
        }
        const Theorem1Certificate cert = check_theorem1(g, h);
        trial_results.push_back({{"trial", t},
                                 {"trace", cert.trace_value},
                                 {"trace_tolerance", cert.trace_tolerance},
                                 {"witness_expectation", cert.witness_expectation}});
        report.verdict("trial " + std::to_string(t) + " trace", cert.trace_ok,
                       std::abs(cert.trace_value), cert.trace_tolerance);
        report.verdict("trial " + std::to_string(t) + " witness", cert.witness_ok,
                       cert.witness_expectation, kBoundSlackTol);
    }
    report.body["results"] = {{"trials", trial_results}};
    return report.finish(timer);
}

int run_verify_theorem2(const std::string& path, std::size_t nu, const std::string& b_string,
                        std::uint64_t seed, std::size_t trials, bool format_json) {
    Timer timer;
    Report report = make_report("verify theorem2", format_json);
    const StabilizerGroup g = load_group(path);
    report.parse_ms = timer.elapsed_ms();
    const auto basis = g.extension_basis(nu);
    if (basis.s == basis.t) {
        throw PreconditionError("nu >= eta(G): the nu-local elements already generate the group");
    }
    const std::size_t bits = basis.t - basis.s;
    std::vector<BitVector> patterns;
    if (!b_string.empty()) {
        patterns.push_back(BitVector::from_string(b_string));
    } else {
        if (bits > 16) {
            throw ResourceError("too many extensions to enumerate; pass --b");
        }
        for (std::uint64_t p = 0; p < (std::uint64_t{1} << bits); ++p) {
            BitVector b(bits);
            for (std::size_t k = 0; k < bits; ++k) {
                b.set(k, (p >> k) & 1u);
            }
            patterns.push_back(b);
        }
    }
    report.body["inputs"] = {{"file", path},     {"nu", nu},        {"s", basis.s},
                             {"t", basis.t},     {"seed", seed},    {"trials", trials},
                             {"b_patterns", patterns.size()}};
    json pattern_results = json::array();
    for (const auto& b : patterns) {
        for (std::size_t t = 0; t < trials; ++t) {
            const PauliSum h = random_local_hamiltonian(g.num_qubits(), nu, seed + t);
            const Theorem2Certificate cert = check_theorem2(g, nu, b, h);
            pattern_results.push_back({{"b", b.to_string()},
                                       {"trial", t},
                                       {"trace_g", cert.trace_g},
                                       {"trace_gb", cert.trace_gb},
                                       {"difference", cert.difference},
                                       {"case1_terms", cert.case1_terms},
                                       {"case2_terms", cert.case2_terms}});
            report.verdict("b=" + b.to_string() + " trial " + std::to_string(t), cert.ok,
                           cert.difference, cert.tolerance);
        }
    }
    report.body["results"] = {{"checks", pattern_results}};
    return report.finish(timer);
}

int run_verify_corollary3(const std::string& path, std::size_t nu, bool format_json) {
    Timer timer;
    Report report = make_report("verify corollary3", format_json);
    const StabilizerGroup g = load_group(path);
    report.parse_ms = timer.elapsed_ms();
    const SpanCertificate cert = check_corollary3_span(g, nu);
    report.body["inputs"] = {{"file", path}, {"nu", nu}, {"s", cert.s}, {"t", cert.t}};
    report.body["results"] = {
        {"extensions", cert.num_extensions},
        {"accumulated_rank", cert.accumulated_rank},
        {"full_dim", cert.full_dim},
        {"spans", cert.spans},
        {"conclusion", cert.spans
                           ? "the union of extension codespaces spans the full space; no "
                             "nu-local Hamiltonian has this codespace as exact ground eigenspace"
                           : "the union of extension codespaces does not span the full space"}};
    report.verdict("span accumulation computed", true,
                   static_cast<double>(cert.accumulated_rank),
                   static_cast<double>(cert.full_dim));
    report.line(std::string("spans = ") + (cert.spans ? "true" : "false") + " (rank " +
                std::to_string(cert.accumulated_rank) + " of " + std::to_string(cert.full_dim) +
                " over " + std::to_string(cert.num_extensions) + " extensions)");
    return report.finish(timer);
}

int run_verify_gap_pinch(const std::string& path, std::size_t nu, std::uint64_t seed,
                         std::size_t trials, bool format_json) {
    Timer timer;
    Report report = make_report("verify gap-pinch", format_json);
    const StabilizerGroup g = load_group(path);
    report.parse_ms = timer.elapsed_ms();
    report.body["inputs"] = {{"file", path},
                             {"nu", nu},
                             {"q", g.codespace_dim()},
                             {"seed", seed},
                             {"trials", trials}};
    json trial_results = json::array();
    std::size_t evaluated = 0;
    std::size_t skipped = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const PauliSum h = random_local_hamiltonian(g.num_qubits(), nu, seed + t);
        try {
            const GapPinchCertificate cert = check_gap_pinch(g, nu, h);
            const TraceIdentityCertificate identity = trace_identity(g, nu, h);
            trial_results.push_back({{"trial", t},
                                     {"status", "evaluated"},
                                     {"lhs", cert.theorem_bound.lhs},
                                     {"theorem_rhs", cert.theorem_bound.rhs},
                                     {"corollary_rhs", cert.corollary_bound.rhs},
                                     {"r", cert.r},
                                     {"gap", cert.gap},
                                     {"e_norm", cert.e_norm},
                                     {"trace_identity_difference", identity.difference}});
            report.verdict("trial " + std::to_string(t) + " theorem bound",
                           cert.theorem_bound.satisfied, cert.theorem_bound.slack,
                           kBoundSlackTol);
            report.verdict("trial " + std::to_string(t) + " corollary bound",
                           cert.corollary_bound.satisfied, cert.corollary_bound.slack,
                           kBoundSlackTol);
            report.verdict("trial " + std::to_string(t) + " trace identity", identity.ok,
                           identity.difference, 1e-9);
            ++evaluated;
        } catch (const PreconditionError& e) {
            trial_results.push_back(
                {{"trial", t}, {"status", "hypothesis-not-met"}, {"reason", e.what()}});
            ++skipped;
        }
    }
    report.body["results"] = {{"trials", trial_results},
                              {"evaluated", evaluated},
                              {"skipped_hypothesis", skipped}};
    report.line("evaluated " + std::to_string(evaluated) + "/" + std::to_string(trials) +
                " trials (" + std::to_string(skipped) + " failed the hypothesis)");
    const int code = report.finish(timer);
    if (code == kOk && evaluated == 0) {
        return kPrecondition;
    }
    return code;
}

int run_verify_css(const std::string& path, bool format_json) {
    Timer timer;
    Report report = make_report("verify css", format_json);
    const StabilizerGroup g = load_group(path);
    report.parse_ms = timer.elapsed_ms();
    report.body["inputs"] = {{"file", path},
                             {"qubits", g.num_qubits()},
                             {"generators", g.num_generators()}};
    const CssSplit split = css_split(g);
    if (!split.is_split) {
        throw PreconditionError("group is not XZ-split");
    }
    // css_locality raises InternalConsistencyError if either identity fails.
    const CssLocalityReport r = css_locality(g);
    json results;
    results["delta"] = r.delta;
    results["eta"] = r.eta;
    if (r.delta_x) {
        results["delta_x"] = *r.delta_x;
    }
    if (r.delta_z) {
        results["delta_z"] = *r.delta_z;
    }
    if (r.eta_x) {
        results["eta_x"] = *r.eta_x;
    }
    if (r.eta_z) {
        results["eta_z"] = *r.eta_z;
    }
    report.body["results"] = results;
    report.verdict("delta = min(delta_X, delta_Z)", true, static_cast<double>(r.delta), 0.0);
    report.verdict("eta = max(eta_X, eta_Z)", true, static_cast<double>(r.eta), 0.0);
    report.line("delta = " + std::to_string(r.delta) + ", eta = " + std::to_string(r.eta));
    return report.finish(timer);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"locality measures of stabilizer groups, surface-code construction, and "
                 "numerical certification of the associated no-go bounds"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}))
        ->description("report format");

    std::string path;
    bool oracle = false;
    std::uint64_t budget = std::uint64_t{1} << 26;

    auto* delta_cmd = app.add_subcommand("delta", "minimum weight of a nontrivial group element");
    delta_cmd->add_option("file", path)->required();
    delta_cmd->add_flag("--oracle", oracle, "cross-check against brute-force enumeration");
    delta_cmd->add_option("--budget", budget, "maximum subsets examined");

    auto* eta_cmd = app.add_subcommand("eta", "minimax generating locality");
    eta_cmd->add_option("file", path)->required();
    eta_cmd->add_flag("--oracle", oracle, "cross-check against brute-force enumeration");
    eta_cmd->add_option("--budget", budget, "maximum subsets examined");

    auto* surface_cmd = app.add_subcommand("surface", "build a code from a surface cellulation");
    std::size_t toric_l = 0;
    std::string cell_file;
    std::string emit_path;
    auto* toric_sub = surface_cmd->add_subcommand("toric", "L x L torus");
    toric_sub->add_option("L", toric_l)->required();
    auto* from_sub = surface_cmd->add_subcommand("from", "read a cellulation file");
    from_sub->add_option("file", cell_file)->required();
    auto* counter_sub =
        surface_cmd->add_subcommand("counterexample", "sphere with min valence 3 but delta 2");
    surface_cmd->require_subcommand(1);
    for (auto* sub : {toric_sub, from_sub, counter_sub}) {
        sub->add_option("--emit", emit_path, "write the check matrix to this file");
    }

    auto* verify_cmd = app.add_subcommand("verify", "certify a theorem on a group file");
    verify_cmd->require_subcommand(1);
    std::uint64_t seed = 7;
    std::size_t trials = 20;
    std::size_t nu = 1;
    std::string b_string;
    auto* t1 = verify_cmd->add_subcommand("theorem1", "codespace not inside V_-");
    t1->add_option("file", path)->required();
    t1->add_option("--seed", seed);
    t1->add_option("--trials", trials);
    auto* t2 = verify_cmd->add_subcommand("theorem2", "extension blindness of traces");
    t2->add_option("file", path)->required();
    t2->add_option("--nu", nu)->required();
    t2->add_option("--b", b_string, "flip pattern over the completion generators");
    t2->add_option("--seed", seed);
    t2->add_option("--trials", trials);
    auto* c3 = verify_cmd->add_subcommand("corollary3", "span of extension codespaces");
    c3->add_option("file", path)->required();
    c3->add_option("--nu", nu)->required();
    auto* gp = verify_cmd->add_subcommand("gap-pinch", "trace-norm and spectral-gap bounds");
    gp->add_option("file", path)->required();
    gp->add_option("--nu", nu)->required();
    gp->add_option("--seed", seed);
    gp->add_option("--trials", trials);
    auto* css = verify_cmd->add_subcommand("css", "XZ-split structure identities");
    css->add_option("file", path)->required();

    // Let options like --format reach the top-level app from any depth.
    for (auto* sub : {delta_cmd, eta_cmd, surface_cmd, toric_sub, from_sub, counter_sub,
                      verify_cmd, t1, t2, c3, gp, css}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }

    const bool format_json = format == "json";
    try {
        if (*delta_cmd) {
            return run_metric(path, MetricKind::Delta, oracle, budget, format_json);
        }
        if (*eta_cmd) {
            return run_metric(path, MetricKind::Eta, oracle, budget, format_json);
        }
        if (*surface_cmd) {
            if (*toric_sub) {
                return run_surface("toric", toric_l, "", emit_path, format_json);
            }
            if (*from_sub) {
                return run_surface("from", 0, cell_file, emit_path, format_json);
            }
            return run_surface("counterexample", 0, "", emit_path, format_json);
        }
        if (*verify_cmd) {
            if (*t1) {
                return run_verify_theorem1(path, seed, trials, format_json);
            }
            if (*t2) {
                return run_verify_theorem2(path, nu, b_string, seed, trials, format_json);
            }
            if (*c3) {
                return run_verify_corollary3(path, nu, format_json);
            }
            if (*gp) {
                return run_verify_gap_pinch(path, nu, seed, trials, format_json);
            }
            if (*css) {
                return run_verify_css(path, format_json);
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error";
        if (e.line > 0) {
            std::cerr << " (line " << e.line << ")";
        }
        std::cerr << ": " << e.what() << "\n";
        return kUsage;
    } catch (const InternalConsistencyError& e) {
        std::cerr << "internal consistency violation: " << e.what() << "\n";
        return kViolation;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kPrecondition;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
    return kUsage;
}
