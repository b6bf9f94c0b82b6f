#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stabloc/dense.hpp"
#include "stabloc/errors.hpp"
#include "stabloc/formats.hpp"
#include "stabloc/locality.hpp"
#include "stabloc/pauli.hpp"
#include "stabloc/spectral.hpp"
#include "stabloc/stabilizer.hpp"
#include "stabloc/surface.hpp"

namespace py = pybind11;
using namespace stabloc;

namespace {

py::array_t<std::uint8_t> bitmatrix_to_numpy(const BitMatrix& m) {
    py::array_t<std::uint8_t> arr({m.rows(), m.cols()});
    auto buf = arr.mutable_unchecked<2>();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            buf(r, c) = m.get(r, c) ? 1 : 0;
        }
    }
    return arr;
}

BitVector bits_from_string(const std::string& s) {
    return BitVector::from_string(s);
}

std::vector<std::string> witness_strings(const LocalityReport& report) {
    std::vector<std::string> out;
    out.reserve(report.witness.size());
    for (const auto& w : report.witness) {
        out.push_back(w.to_string());
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Locality measures of stabilizer groups, surface-code construction, and dense "
              "numerical certification of the associated locality bounds.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<PauliOperator>(m, "PauliOperator")
        .def(py::init(&PauliOperator::from_string), py::arg("label"),
             "Parse a label like '+XIZ' or '-IYZ' (sign optional).")
        .def_static("identity", &PauliOperator::identity, py::arg("n"))
        .def_property_readonly("num_qubits", &PauliOperator::num_qubits)
        .def_property_readonly("phase", &PauliOperator::phase)
        .def("weight", &PauliOperator::weight)
        .def("support", &PauliOperator::support, "0-based qubit positions.")
        .def("is_hermitian", &PauliOperator::is_hermitian)
        .def("sign", &PauliOperator::sign)
        .def("commutes_with", &PauliOperator::commutes_with)
        .def("negated", &PauliOperator::negated)
        .def("to_dense", [](const PauliOperator& op) { return to_dense(op); })
        .def("__mul__", &PauliOperator::multiplied_by)
        .def("__eq__", [](const PauliOperator& a, const PauliOperator& b) { return a == b; })
        .def("__str__", &PauliOperator::to_string)
        .def("__repr__",
             [](const PauliOperator& op) { return "PauliOperator('" + op.to_string() + "')"; });

    py::class_<PauliSum>(m, "PauliSum")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def_property_readonly("num_qubits", &PauliSum::num_qubits)
        .def("add_term", &PauliSum::add_term, py::arg("coeff"), py::arg("op"))
        .def("terms",
             [](const PauliSum& sum) {
                 std::vector<std::pair<double, std::string>> out;
                 for (const auto& [coeff, op] : sum.terms()) {
                     out.emplace_back(coeff, op.to_string());
                 }
                 return out;
             })
        .def("num_terms", &PauliSum::num_terms)
        .def("locality", &PauliSum::locality)
        .def("is_traceless", &PauliSum::is_traceless)
        .def("to_dense", [](const PauliSum& sum) { return sum_to_dense(sum); });

    m.def("pauli_decompose", &pauli_decompose, py::arg("matrix"), py::arg("hermitian_tol") = 1e-10,
          py::arg("cap") = kDenseQubitCap,
          "Coefficients of a Hermitian matrix over the Pauli tensor basis.");

    py::enum_<Membership>(m, "Membership")
        .value("IN_GROUP", Membership::InGroup)
        .value("NEGATION_IN_GROUP", Membership::NegationInGroup)
        .value("NEITHER", Membership::Neither);

    py::class_<StabilizerGroup>(m, "StabilizerGroup")
        .def_static(
            "validate",
            [](const std::vector<PauliOperator>& gens, std::size_t n_hint) {
                return StabilizerGroup::validate(gens, n_hint);
            },
            py::arg("generators"), py::arg("n_hint") = 0)
        .def_static("from_labels",
                    [](const std::vector<std::string>& labels) {
                        std::vector<PauliOperator> gens;
                        for (const auto& l : labels) {
                            gens.push_back(PauliOperator::from_string(l));
                        }
                        return StabilizerGroup::validate(gens, 0);
                    })
        .def_static("from_check_text",
                    [](const std::string& text) {
                        const SignedCheckMatrix parsed = parse_check_matrix(text);
                        return StabilizerGroup::from_check_matrix(parsed.matrix, parsed.signs);
                    })
        .def("to_check_text", [](const StabilizerGroup& g) { return emit_check_matrix(g); })
        .def_property_readonly("num_qubits", &StabilizerGroup::num_qubits)
        .def_property_readonly("num_generators", &StabilizerGroup::num_generators)
        .def_property_readonly("group_order", &StabilizerGroup::group_order)
        .def_property_readonly("codespace_dim", &StabilizerGroup::codespace_dim)
        .def("generators", &StabilizerGroup::generators)
        .def("check_matrix",
             [](const StabilizerGroup& g) { return bitmatrix_to_numpy(g.check_matrix()); })
        .def("membership",
             [](const StabilizerGroup& g, const PauliOperator& p) {
                 return g.membership(p).result;
             })
        .def("elements",
             [](const StabilizerGroup& g, std::size_t cap) { return g.elements(cap); },
             py::arg("max_generators") = 24)
        .def("subgroup_nu", &StabilizerGroup::subgroup_nu, py::arg("nu"))
        .def(
            "extend",
            [](const StabilizerGroup& g, std::size_t nu, const std::string& b) {
                return g.extend(nu, bits_from_string(b));
            },
            py::arg("nu"), py::arg("b"))
        .def(
            "extension_counts",
            [](const StabilizerGroup& g, std::size_t nu) {
                const auto basis = g.extension_basis(nu);
                return std::make_pair(basis.s, basis.t);
            },
            py::arg("nu"), "Returns (s, t): nu-local and total minimal generator counts.")
        .def("projector", [](const StabilizerGroup& g) { return g.projector(); });

    py::class_<LocalityReport>(m, "LocalityReport")
        .def_property_readonly("value", [](const LocalityReport& r) { return r.value; })
        .def_property_readonly("witness", &witness_strings)
        .def_property_readonly("witness_subset",
                               [](const LocalityReport& r) { return r.witness_subset; })
        .def_property_readonly("subsets_examined",
                               [](const LocalityReport& r) { return r.subsets_examined; })
        .def("__repr__", [](const LocalityReport& r) {
            return std::string(r.kind == MetricKind::Delta ? "delta" : "eta") + " = " +
                   std::to_string(r.value);
        });

    m.def("delta", [](const StabilizerGroup& g) { return delta(g); });
    m.def("delta_oracle", [](const StabilizerGroup& g) { return delta_oracle(g); });
    m.def("eta", [](const StabilizerGroup& g) { return eta(g); });
    m.def("eta_oracle", [](const StabilizerGroup& g) { return eta_oracle(g); });
    m.def(
        "delta_of_check_text",
        [](const std::string& text) {
            const SignedCheckMatrix parsed = parse_check_matrix(text);
            return delta_of_check_matrix(parsed.matrix, parsed.signs);
        },
        "Run the rank-drop search directly on a check-matrix file body.");
    m.def("eta_of_check_text", [](const std::string& text) {
        const SignedCheckMatrix parsed = parse_check_matrix(text);
        return eta_of_check_matrix(parsed.matrix, parsed.signs);
    });

    py::class_<CssSplit>(m, "CssSplit")
        .def_readonly("is_split", &CssSplit::is_split)
        .def_readonly("gx", &CssSplit::gx)
        .def_readonly("gz", &CssSplit::gz)
        .def_readonly("reordering", &CssSplit::reordering);
    m.def("css_split", &css_split);

    py::class_<CssLocalityReport>(m, "CssLocalityReport")
        .def_readonly("delta_x", &CssLocalityReport::delta_x)
        .def_readonly("delta_z", &CssLocalityReport::delta_z)
        .def_readonly("eta_x", &CssLocalityReport::eta_x)
        .def_readonly("eta_z", &CssLocalityReport::eta_z)
        .def_readonly("delta", &CssLocalityReport::delta)
        .def_readonly("eta", &CssLocalityReport::eta);
    m.def("css_locality",
          [](const StabilizerGroup& g) { return css_locality(g); });

    py::class_<Cellulation>(m, "Cellulation")
        .def(py::init<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>,
                      std::vector<std::vector<std::size_t>>>(),
             py::arg("num_vertices"), py::arg("edges"), py::arg("faces"))
        .def_static("toric", &Cellulation::toric, py::arg("L"))
        .def_static("valence_counterexample", &Cellulation::valence_counterexample)
        .def_static("from_text", &parse_cellulation)
        .def("to_text", [](const Cellulation& c) { return emit_cellulation(c); })
        .def_property_readonly("num_vertices", &Cellulation::num_vertices)
        .def_property_readonly("edges", &Cellulation::edges)
        .def_property_readonly("faces", &Cellulation::faces)
        .def("euler_characteristic", &Cellulation::euler_characteristic)
        .def("vertex_valences", &Cellulation::vertex_valences)
        .def("face_sizes", &Cellulation::face_sizes)
        .def("dual", &Cellulation::dual)
        .def("boundary_matrices", [](const Cellulation& c) {
            const BoundaryPair pair = c.boundary_matrices();
            return std::make_pair(bitmatrix_to_numpy(pair.d_x), bitmatrix_to_numpy(pair.d_z));
        });
    m.def("h1_dimension", &h1_dimension);
    m.def("build_code", &build_code);

    py::class_<SpectralReport>(m, "SpectralReport")
        .def_readonly("eigenvalues", &SpectralReport::eigenvalues)
        .def_readonly("e_norm", &SpectralReport::e_norm)
        .def_readonly("tolerance", &SpectralReport::tolerance)
        .def_readonly("ground_dim", &SpectralReport::ground_dim)
        .def("gap_above", &SpectralReport::gap_above)
        .def("ground_projector", &SpectralReport::ground_projector)
        .def("projector_negative", &SpectralReport::projector_negative)
        .def("projector_zero", &SpectralReport::projector_zero)
        .def("projector_positive", &SpectralReport::projector_positive);
    m.def("diagonalize", &diagonalize, py::arg("h"), py::arg("cap") = kDenseQubitCap);
    m.def("random_local_hamiltonian", &random_local_hamiltonian, py::arg("n"), py::arg("k"),
          py::arg("seed"));

    py::class_<Theorem1Certificate>(m, "Theorem1Certificate")
        .def_readonly("trace_value", &Theorem1Certificate::trace_value)
        .def_readonly("trace_tolerance", &Theorem1Certificate::trace_tolerance)
        .def_readonly("trace_ok", &Theorem1Certificate::trace_ok)
        .def_readonly("witness_expectation", &Theorem1Certificate::witness_expectation)
        .def_readonly("witness", &Theorem1Certificate::witness)
        .def_readonly("witness_ok", &Theorem1Certificate::witness_ok)
        .def_readonly("delta_value", &Theorem1Certificate::delta_value)
        .def("ok", &Theorem1Certificate::ok);
    m.def(
        "check_theorem1",
        [](const StabilizerGroup& g, const PauliSum& h) { return check_theorem1(g, h); },
        py::arg("group"), py::arg("h"));

    py::class_<Theorem2Certificate>(m, "Theorem2Certificate")
        .def_readonly("trace_g", &Theorem2Certificate::trace_g)
        .def_readonly("trace_gb", &Theorem2Certificate::trace_gb)
        .def_readonly("difference", &Theorem2Certificate::difference)
        .def_readonly("tolerance", &Theorem2Certificate::tolerance)
        .def_readonly("ok", &Theorem2Certificate::ok)
        .def_readonly("case1_terms", &Theorem2Certificate::case1_terms)
        .def_readonly("case2_terms", &Theorem2Certificate::case2_terms);
    m.def(
        "check_theorem2",
        [](const StabilizerGroup& g, std::size_t nu, const std::string& b, const PauliSum& h) {
            return check_theorem2(g, nu, bits_from_string(b), h);
        },
        py::arg("group"), py::arg("nu"), py::arg("b"), py::arg("h"));

    py::class_<SpanCertificate>(m, "SpanCertificate")
        .def_readonly("num_extensions", &SpanCertificate::num_extensions)
        .def_readonly("accumulated_rank", &SpanCertificate::accumulated_rank)
        .def_readonly("full_dim", &SpanCertificate::full_dim)
        .def_readonly("spans", &SpanCertificate::spans)
        .def_readonly("s", &SpanCertificate::s)
        .def_readonly("t", &SpanCertificate::t);
    m.def(
        "check_corollary3_span",
        [](const StabilizerGroup& g, std::size_t nu) { return check_corollary3_span(g, nu); },
        py::arg("group"), py::arg("nu"));

    py::class_<BoundEvaluation>(m, "BoundEvaluation")
        .def_readonly("lhs", &BoundEvaluation::lhs)
        .def_readonly("rhs", &BoundEvaluation::rhs)
        .def_readonly("slack", &BoundEvaluation::slack)
        .def_readonly("satisfied", &BoundEvaluation::satisfied);

    py::class_<GapPinchCertificate>(m, "GapPinchCertificate")
        .def_readonly("theorem_bound", &GapPinchCertificate::theorem_bound)
        .def_readonly("corollary_bound", &GapPinchCertificate::corollary_bound)
        .def_readonly("q", &GapPinchCertificate::q)
        .def_readonly("r", &GapPinchCertificate::r)
        .def_readonly("e_norm", &GapPinchCertificate::e_norm)
        .def_readonly("ground_energy", &GapPinchCertificate::ground_energy)
        .def_readonly("partial_sum", &GapPinchCertificate::partial_sum)
        .def_readonly("gap", &GapPinchCertificate::gap)
        .def("ok", &GapPinchCertificate::ok);
    m.def(
        "check_gap_pinch",
        [](const StabilizerGroup& g, std::size_t nu, const PauliSum& h) {
            return check_gap_pinch(g, nu, h);
        },
        py::arg("group"), py::arg("nu"), py::arg("h"));

    py::class_<TraceIdentityCertificate>(m, "TraceIdentityCertificate")
        .def_readonly("lhs", &TraceIdentityCertificate::lhs)
        .def_readonly("rhs", &TraceIdentityCertificate::rhs)
        .def_readonly("difference", &TraceIdentityCertificate::difference)
        .def_readonly("ok", &TraceIdentityCertificate::ok);
    m.def(
        "trace_identity",
        [](const StabilizerGroup& g, std::size_t nu, const PauliSum& h) {
            return trace_identity(g, nu, h);
        },
        py::arg("group"), py::arg("nu"), py::arg("h"));
}
