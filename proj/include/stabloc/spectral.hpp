#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "stabloc/dense.hpp"
#include "stabloc/pauli.hpp"
#include "stabloc/stabilizer.hpp"

namespace stabloc {

/// Slack below which an inequality counts as violated.
inline constexpr double kBoundSlackTol = 1e-9;

/// Full dense Hermitian eigendecomposition of a Pauli sum, with the derived
/// quantities every certificate needs. The classification tolerance is
/// 1e-8 * max(1, ||E||_2).
struct SpectralReport {
    Eigen::VectorXd eigenvalues; // ascending, with multiplicity
    Eigen::MatrixXcd eigenvectors;
    double e_norm = 0.0; // Trace(H^2)^{1/2} = Frobenius norm of H
    double tolerance = 0.0;
    std::size_t ground_dim = 0; // multiplicity of E_0 within tolerance

    /// E_q - E_0.
    double gap_above(std::size_t q) const;

    /// Projector onto the span of the first `dim` eigenvectors.
    DenseMatrix ground_projector(std::size_t dim) const;

    DenseMatrix projector_negative() const;
    DenseMatrix projector_zero() const;
    DenseMatrix projector_positive() const;
};

SpectralReport diagonalize(const PauliSum& h, std::size_t cap = kDenseQubitCap);

/// Traceless sum containing every pattern of weight 1..k, coefficients
/// uniform in [-1, 1], drawn in a fixed enumeration order so the result is
/// reproducible per seed. Requires 1 <= k <= n.
PauliSum random_local_hamiltonian(std::size_t n, std::size_t k, std::uint64_t seed);

/// One evaluated inequality: satisfied iff slack = lhs - rhs >= -1e-9.
struct BoundEvaluation {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool satisfied = false;
};

BoundEvaluation evaluate_bound(double lhs, double rhs);

/// Certificate that a traceless H with locality below delta(G) has
/// Trace(Pi_G H) = 0 and that the codespace is not inside the strictly
/// negative eigenspace of H (witnessed by an explicit codespace vector).
struct Theorem1Certificate {
    double trace_value = 0.0;
    double trace_tolerance = 0.0;
    bool trace_ok = false;
    double witness_expectation = 0.0;
    Eigen::VectorXcd witness;
    bool witness_ok = false;
    double e_norm = 0.0;
    std::size_t hamiltonian_locality = 0;
    std::size_t delta_value = 0;

    bool ok() const { return trace_ok && witness_ok; }
};

Theorem1Certificate check_theorem1(const StabilizerGroup& g, const PauliSum& h,
                                   std::size_t cap = kDenseQubitCap);

/// Certificate that a nu-local traceless H cannot distinguish G from the
/// sign-flipped extension G(b): Trace(Pi_G H) = Trace(Pi_G(b) H).
struct Theorem2Certificate {
    double trace_g = 0.0;
    double trace_gb = 0.0;
    double difference = 0.0;
    double tolerance = 0.0;
    bool ok = false;
    // Diagnostics: terms of H with +-sigma in G (case 1) vs neither (case 2).
    std::size_t case1_terms = 0;
    std::size_t case2_terms = 0;
};

Theorem2Certificate check_theorem2(const StabilizerGroup& g, std::size_t nu, const BitVector& b,
                                   const PauliSum& h, std::size_t cap = kDenseQubitCap);

/// Accumulates the codespace projectors of every extension G(b). When the
/// union spans the full space, no nu-local Hamiltonian can have C(G) as its
/// exact ground eigenspace.
struct SpanCertificate {
    std::size_t num_extensions = 0;
    std::size_t accumulated_rank = 0;
    std::size_t full_dim = 0;
    bool spans = false;
    std::size_t s = 0;
    std::size_t t = 0;
};

SpanCertificate check_corollary3_span(const StabilizerGroup& g, std::size_t nu,
                                      std::size_t max_extension_bits = 16,
                                      std::size_t cap = kDenseQubitCap);

/// Both gap-pinching inequalities for a hypothesis-satisfying instance:
/// the trace-norm bound and its spectral-gap corollary. The "trace norm"
/// here is the norm induced by Trace(H1 H2^dagger), i.e. the Frobenius
/// norm, matching the definition the bounds are stated with.
struct GapPinchCertificate {
    BoundEvaluation theorem_bound;
    BoundEvaluation corollary_bound;
    std::uint64_t q = 0;
    std::uint64_t r = 0;
    double e_norm = 0.0;
    double ground_energy = 0.0;
    double partial_sum = 0.0; // E_0 + ... + E_{r-1}
    double gap = 0.0;         // E_q - E_0

    bool ok() const { return theorem_bound.satisfied && corollary_bound.satisfied; }
};

GapPinchCertificate check_gap_pinch(const StabilizerGroup& g, std::size_t nu, const PauliSum& h,
                                    std::size_t cap = kDenseQubitCap);

/// Proof-step identity Trace(Pi_G H) = (q/r) Trace(Pi_{G_nu} H) for
/// nu-local H, certified within 1e-9.
struct TraceIdentityCertificate {
    double lhs = 0.0;
    double rhs = 0.0;
    double difference = 0.0;
    bool ok = false;
};

TraceIdentityCertificate trace_identity(const StabilizerGroup& g, std::size_t nu, const PauliSum& h,
                                        std::size_t cap = kDenseQubitCap);

} // namespace stabloc
