#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stabloc/bit_matrix.hpp"
#include "stabloc/errors.hpp"

namespace stabloc {

/// Phase-exact n-qubit Pauli tensor. The stored operator is
///
///     i^phase * prod_k X^{x_k} Z^{z_k}
///
/// with the X factor to the left of the Z factor on every qubit and qubit 0
/// the leftmost tensor factor. The operator represents a signed Hermitian
/// tensor (+sigma or -sigma) exactly when phase and the number of Y
/// positions (x_k = z_k = 1) agree mod 2; products of anticommuting
/// operators leave that set, which is why the phase is tracked mod 4.
class PauliOperator {
  public:
    PauliOperator() = default;

    /// Identity on n qubits.
    static PauliOperator identity(std::size_t n);

    /// From explicit bit vectors; phase mod 4 as described above.
    static PauliOperator from_bits(BitVector x, BitVector z, int phase);

    /// From a label like "+XIZ" or "-IYZ". The sign may be omitted (+).
    static PauliOperator from_string(const std::string& label);

    /// Single nonidentity factor `letter` in {'X','Y','Z'} on qubit q.
    static PauliOperator single(std::size_t n, std::size_t q, char letter);

    /// From a 2n-bit check row (x half then z half) and a sign in {+1,-1}.
    static PauliOperator from_check_row(const BitVector& row, int sign);

    std::size_t num_qubits() const { return x_.size(); }
    const BitVector& x_bits() const { return x_; }
    const BitVector& z_bits() const { return z_; }
    int phase() const { return phase_; }

    /// Count of qubits with x_k = z_k = 1.
    std::size_t y_count() const;

    /// True when the operator equals +sigma or -sigma for a Hermitian
    /// Pauli tensor sigma.
    bool is_hermitian() const;

    /// +1 or -1; requires is_hermitian().
    int sign() const;

    /// The +sigma form of this operator (phase = y_count mod 4).
    PauliOperator canonical() const;

    PauliOperator negated() const;

    /// wt: number of nonidentity tensor factors. wt(identity) = wt(-1) = 0.
    std::size_t weight() const;

    /// 0-based qubit positions with a nonidentity factor.
    std::vector<std::size_t> support() const;

    bool is_identity_pattern() const { return x_.is_zero() && z_.is_zero(); }

    /// The 2n-bit symplectic row (x | z).
    BitVector check_row() const;

    bool commutes_with(const PauliOperator& other) const;

    PauliOperator multiplied_by(const PauliOperator& other) const;

    bool operator==(const PauliOperator& other) const = default;

    /// Sign prefix followed by n letters from {I,X,Y,Z}. Hermitian
    /// operators render as "+XIZ" / "-IYZ"; operators off the Hermitian
    /// set carry an "+i" / "-i" prefix. Parsed back by from_string.
    std::string to_string() const;

  private:
    BitVector x_;
    BitVector z_;
    int phase_ = 0;
};

/// Real linear combination of Hermitian Pauli tensors in canonical combined
/// form: one entry per (x, z) pattern, signs folded into the coefficients.
class PauliSum {
  public:
    PauliSum() = default;
    explicit PauliSum(std::size_t n) : n_(n) {}

    std::size_t num_qubits() const { return n_; }

    /// Adds coeff * op. op must be Hermitian-representable; its sign is
    /// folded into the coefficient and patterns are combined.
    void add_term(double coeff, const PauliOperator& op);

    /// Terms in a fixed deterministic order; coefficients may be zero if a
    /// cancellation occurred.
    std::vector<std::pair<double, PauliOperator>> terms() const;

    std::size_t num_terms() const { return terms_.size(); }

    /// max wt over terms with nonzero coefficient; 0 for the empty sum.
    std::size_t locality() const;

    /// True iff the identity pattern is absent or has zero coefficient.
    bool is_traceless() const;

    double identity_coefficient() const;

  private:
    std::size_t n_ = 0;
    // Keyed by the packed (x | z) words so iteration order is reproducible.
    std::map<std::vector<std::uint64_t>, double> terms_;
};

} // namespace stabloc
