#include "stabloc/spectral.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "stabloc/errors.hpp"
#include "stabloc/locality.hpp"

namespace stabloc {

namespace {

DenseMatrix outer_sum(const Eigen::MatrixXcd& vectors, const std::vector<std::size_t>& cols) {
    const Eigen::Index dim = vectors.rows();
    DenseMatrix acc = DenseMatrix::Zero(dim, dim);
    for (std::size_t c : cols) {
        const auto v = vectors.col(static_cast<Eigen::Index>(c));
        acc += v * v.adjoint();
    }
    return acc;
}

double real_trace_product(const DenseMatrix& a, const DenseMatrix& b) {
    return (a * b).trace().real();
}

// Enumerates size-k subsets of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& subset, std::size_t n) {
    const std::size_t k = subset.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (subset[i] != i + n - k) {
            ++subset[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

void require_same_system(const StabilizerGroup& g, const PauliSum& h) {
    if (g.num_qubits() != h.num_qubits()) {
        throw DimensionError("group and Hamiltonian act on different qubit counts");
    }
}

} // namespace

double SpectralReport::gap_above(std::size_t q) const {
    if (q >= static_cast<std::size_t>(eigenvalues.size())) {
        throw DimensionError("gap_above: level index out of range");
    }
    return eigenvalues(static_cast<Eigen::Index>(q)) - eigenvalues(0);
}

DenseMatrix SpectralReport::ground_projector(std::size_t dim) const {
    std::vector<std::size_t> cols(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        cols[i] = i;
    }
    return outer_sum(eigenvectors, cols);
}

DenseMatrix SpectralReport::projector_negative() const {
    std::vector<std::size_t> cols;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        if (eigenvalues(i) < -tolerance) {
            cols.push_back(static_cast<std::size_t>(i));
        }
    }
    return outer_sum(eigenvectors, cols);
}

DenseMatrix SpectralReport::projector_zero() const {
    std::vector<std::size_t> cols;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        if (std::abs(eigenvalues(i)) <= tolerance) {
            cols.push_back(static_cast<std::size_t>(i));
        }
    }
    return outer_sum(eigenvectors, cols);
}

DenseMatrix SpectralReport::projector_positive() const {
    std::vector<std::size_t> cols;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        if (eigenvalues(i) > tolerance) {
            cols.push_back(static_cast<std::size_t>(i));
        }
    }
    return outer_sum(eigenvectors, cols);
}

SpectralReport diagonalize(const PauliSum& h, std::size_t cap) {
    const DenseMatrix m = sum_to_dense(h, cap);
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw Error("eigendecomposition failed to converge");
    }
    SpectralReport report;
    report.eigenvalues = solver.eigenvalues();
    report.eigenvectors = solver.eigenvectors();
    report.e_norm = std::sqrt(report.eigenvalues.squaredNorm());
    report.tolerance = 1e-8 * std::max(1.0, report.e_norm);
    report.ground_dim = 1;
    for (Eigen::Index i = 1; i < report.eigenvalues.size(); ++i) {
        if (report.eigenvalues(i) - report.eigenvalues(0) <= report.tolerance) {
            ++report.ground_dim;
        } else {
            break;
        }
    }
    return report;
}

PauliSum random_local_hamiltonian(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k < 1 || k > n) {
        throw ValidationError("random_local_hamiltonian requires 1 <= k <= n");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    PauliSum sum(n);
    for (std::size_t w = 1; w <= k; ++w) {
        std::vector<std::size_t> support(w);
        for (std::size_t i = 0; i < w; ++i) {
            support[i] = i;
        }
        do {
            // All letter assignments over the support, X < Y < Z.
            std::vector<std::size_t> letters(w, 0);
            bool more = true;
            while (more) {
                PauliOperator op = PauliOperator::identity(n);
                for (std::size_t i = 0; i < w; ++i) {
                    op = op.multiplied_by(
                        PauliOperator::single(n, support[i], "XYZ"[letters[i]]));
                }
                sum.add_term(coeff(rng), op);
                more = false;
                for (std::size_t i = w; i > 0; --i) {
                    if (letters[i - 1] < 2) {
                        ++letters[i - 1];
                        for (std::size_t j = i; j < w; ++j) {
                            letters[j] = 0;
                        }
                        more = true;
                        break;
                    }
                }
            }
        } while (next_combination(support, n));
    }
    return sum;
}

BoundEvaluation evaluate_bound(double lhs, double rhs) {
    BoundEvaluation eval;
    eval.lhs = lhs;
    eval.rhs = rhs;
    eval.slack = lhs - rhs;
    eval.satisfied = eval.slack >= -kBoundSlackTol;
    return eval;
}

Theorem1Certificate check_theorem1(const StabilizerGroup& g, const PauliSum& h, std::size_t cap) {
    require_same_system(g, h);
    if (!h.is_traceless()) {
        throw PreconditionError("theorem 1 requires a traceless Hamiltonian");
    }
    const std::size_t dlt = delta(g).value;
    const std::size_t k = h.locality();
    if (k >= dlt) {
        throw PreconditionError("theorem 1 requires locality " + std::to_string(k) +
                                " < delta(G) = " + std::to_string(dlt));
    }

    const DenseMatrix ham = sum_to_dense(h, cap);
    const DenseMatrix pi = g.projector(cap);
    Theorem1Certificate cert;
    cert.delta_value = dlt;
    cert.hamiltonian_locality = k;
    cert.e_norm = ham.norm();
    cert.trace_value = real_trace_product(pi, ham);
    cert.trace_tolerance = 1e-9 * std::max(1.0, cert.e_norm);
    cert.trace_ok = std::abs(cert.trace_value) <= cert.trace_tolerance;

    // Codespace basis from the projector's unit eigenvectors, then the top
    // eigenvector of H restricted to the codespace: its Rayleigh quotient
    // is at least the (zero) average, so it witnesses non-containment in
    // the negative eigenspace.
    Eigen::SelfAdjointEigenSolver<DenseMatrix> pi_solver(pi);
    const auto q = static_cast<Eigen::Index>(g.codespace_dim());
    const Eigen::Index dim = pi.rows();
    Eigen::MatrixXcd basis(dim, q);
    Eigen::Index col = 0;
    for (Eigen::Index i = 0; i < dim && col < q; ++i) {
        if (pi_solver.eigenvalues()(i) > 0.5) {
            basis.col(col++) = pi_solver.eigenvectors().col(i);
        }
    }
    if (col != q) {
        throw InternalConsistencyError("projector rank does not match codespace dimension");
    }
    const DenseMatrix restricted = basis.adjoint() * ham * basis;
    Eigen::SelfAdjointEigenSolver<DenseMatrix> r_solver(restricted);
    cert.witness_expectation = r_solver.eigenvalues()(q - 1);
    cert.witness = basis * r_solver.eigenvectors().col(q - 1);
    cert.witness_ok = cert.witness_expectation >= -kBoundSlackTol;
    return cert;
}

Theorem2Certificate check_theorem2(const StabilizerGroup& g, std::size_t nu, const BitVector& b,
                                   const PauliSum& h, std::size_t cap) {
    require_same_system(g, h);
    if (!h.is_traceless()) {
        throw PreconditionError("theorem 2 requires a traceless Hamiltonian");
    }
    if (h.locality() > nu) {
        throw PreconditionError("theorem 2 requires a nu-local Hamiltonian (locality " +
                                std::to_string(h.locality()) + " > nu = " + std::to_string(nu) +
                                ")");
    }
    const StabilizerGroup::ExtensionBasis basis = g.extension_basis(nu);
    if (basis.s == basis.t) {
        throw PreconditionError("theorem 2 requires nu < eta(G); the nu-local elements already "
                                "generate the group");
    }
    const StabilizerGroup gb = g.extend(nu, b);

    const DenseMatrix ham = sum_to_dense(h, cap);
    Theorem2Certificate cert;
    cert.trace_g = real_trace_product(g.projector(cap), ham);
    cert.trace_gb = real_trace_product(gb.projector(cap), ham);
    cert.difference = std::abs(cert.trace_g - cert.trace_gb);
    cert.tolerance = 1e-9 * std::max(1.0, ham.norm());
    cert.ok = cert.difference <= cert.tolerance;
    for (const auto& [coeff, op] : h.terms()) {
        if (coeff == 0.0) {
            continue;
        }
        const Membership m = g.membership(op).result;
        if (m == Membership::Neither) {
            ++cert.case2_terms;
        } else {
            ++cert.case1_terms;
        }
    }
    return cert;
}

SpanCertificate check_corollary3_span(const StabilizerGroup& g, std::size_t nu,
                                      std::size_t max_extension_bits, std::size_t cap) {
    const StabilizerGroup::ExtensionBasis basis = g.extension_basis(nu);
    const std::size_t bits = basis.t - basis.s;
    if (bits > max_extension_bits) {
        throw ResourceError("corollary 3 span check needs 2^" + std::to_string(bits) +
                            " extensions, above the budget");
    }
    const auto dim = std::uint64_t{1} << g.num_qubits();
    DenseMatrix acc =
        DenseMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    const std::uint64_t count = std::uint64_t{1} << bits;
    for (std::uint64_t pattern = 0; pattern < count; ++pattern) {
        BitVector b(bits);
        for (std::size_t i = 0; i < bits; ++i) {
            b.set(i, (pattern >> i) & 1u);
        }
        acc += g.extend(nu, b).projector(cap);
    }
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(acc);
    const double top = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
    const double tol = 1e-8 * top;
    SpanCertificate cert;
    cert.num_extensions = static_cast<std::size_t>(count);
    cert.full_dim = static_cast<std::size_t>(dim);
    cert.s = basis.s;
    cert.t = basis.t;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        if (solver.eigenvalues()(i) > tol) {
            ++cert.accumulated_rank;
        }
    }
    cert.spans = cert.accumulated_rank == cert.full_dim;
    return cert;
}

GapPinchCertificate check_gap_pinch(const StabilizerGroup& g, std::size_t nu, const PauliSum& h,
                                    std::size_t cap) {
    require_same_system(g, h);
    if (!h.is_traceless()) {
        throw PreconditionError("gap pinching requires a traceless Hamiltonian");
    }
    if (h.locality() > nu) {
        throw PreconditionError("gap pinching requires a nu-local Hamiltonian (locality " +
                                std::to_string(h.locality()) + " > nu = " + std::to_string(nu) +
                                ")");
    }
    const StabilizerGroup g_nu = g.subgroup_nu(nu);
    if (g_nu.num_generators() == g.num_generators()) {
        throw PreconditionError("gap pinching requires nu < eta(G); the nu-local elements "
                                "already generate the group");
    }

    GapPinchCertificate cert;
    cert.q = g.codespace_dim();
    cert.r = g_nu.codespace_dim();

    const SpectralReport spect = diagonalize(h, cap);
    if (spect.ground_dim != cert.q) {
        throw PreconditionError("gap pinching requires a ground eigenspace of dimension exactly " +
                                std::to_string(cert.q) + ", found " +
                                std::to_string(spect.ground_dim));
    }
    const auto qi = static_cast<Eigen::Index>(cert.q);
    if (spect.eigenvalues(qi) - spect.eigenvalues(qi - 1) <= 2 * spect.tolerance) {
        throw PreconditionError("gap pinching precondition is ambiguous: the spectral gap above "
                                "level q is within the classification tolerance");
    }

    cert.e_norm = spect.e_norm;
    cert.ground_energy = spect.eigenvalues(0);
    cert.gap = spect.gap_above(cert.q);
    cert.partial_sum = 0.0;
    for (std::uint64_t i = 0; i < cert.r; ++i) {
        cert.partial_sum += spect.eigenvalues(static_cast<Eigen::Index>(i));
    }

    const DenseMatrix diff = g.projector(cap) - spect.ground_projector(cert.q);
    const double lhs = diff.norm();
    const double r_d = static_cast<double>(cert.r);
    const double q_d = static_cast<double>(cert.q);
    const double theorem_rhs =
        (q_d / cert.e_norm) * (cert.partial_sum / r_d - cert.ground_energy);
    const double corollary_rhs =
        q_d * ((r_d - q_d) / r_d) * cert.gap / (cert.e_norm * cert.e_norm);
    cert.theorem_bound = evaluate_bound(lhs, theorem_rhs);
    cert.corollary_bound = evaluate_bound(lhs, corollary_rhs);
    return cert;
}

TraceIdentityCertificate trace_identity(const StabilizerGroup& g, std::size_t nu,
                                        const PauliSum& h, std::size_t cap) {
    require_same_system(g, h);
    if (h.locality() > nu) {
        throw PreconditionError("trace identity requires a nu-local Hamiltonian");
    }
    const StabilizerGroup g_nu = g.subgroup_nu(nu);
    const DenseMatrix ham = sum_to_dense(h, cap);
    const double q_d = static_cast<double>(g.codespace_dim());
    const double r_d = static_cast<double>(g_nu.codespace_dim());
    TraceIdentityCertificate cert;
    cert.lhs = real_trace_product(g.projector(cap), ham);
    cert.rhs = (q_d / r_d) * real_trace_product(g_nu.projector(cap), ham);
    cert.difference = std::abs(cert.lhs - cert.rhs);
    cert.ok = cert.difference <= 1e-9;
    return cert;
}

} // namespace stabloc
