#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "stabloc/bit_matrix.hpp"
#include "stabloc/dense.hpp"
#include "stabloc/pauli.hpp"

namespace stabloc {

enum class Membership { InGroup, NegationInGroup, Neither };

struct MembershipCertificate {
    Membership result = Membership::Neither;
    /// Combination over the minimal generators with combination^T A = row(p)
    /// when result is not Neither.
    BitVector combination;
};

/// Stabilizer group held as a signed check matrix over a minimal generating
/// set. Construction goes through validate(), which enforces pairwise
/// commutation and -1 not in the group; instances are immutable afterwards.
///
/// A group containing both sigma and -sigma has the zero projector and no
/// codespace; validate() rejects such input with the witnessing combination
/// instead of constructing it.
class StabilizerGroup {
  public:
    /// Trivial group on zero qubits; mostly useful as a placeholder before
    /// assignment.
    StabilizerGroup() = default;

    /// Validates and reduces a generating set. Redundant generators (those
    /// already in the span of earlier ones) are dropped and recorded;
    /// the survivors keep their input order.
    ///
    /// Throws ValidationError naming the offending pair when two generators
    /// anticommute, or carrying the witnessing combination when the span
    /// contains -identity.
    static StabilizerGroup validate(const std::vector<PauliOperator>& gens, std::size_t n_hint = 0);

    /// Builds generators from check-matrix rows and a per-row sign (+1/-1),
    /// then validates.
    static StabilizerGroup from_check_matrix(const BitMatrix& a, const std::vector<int>& signs);

    std::size_t num_qubits() const { return n_; }
    std::size_t num_generators() const { return generators_.size(); }

    /// |G| = 2^m for the minimal generating set.
    std::uint64_t group_order() const { return std::uint64_t{1} << generators_.size(); }

    /// q = 2^{n-m}.
    std::uint64_t codespace_dim() const { return std::uint64_t{1} << (n_ - generators_.size()); }

    const std::vector<PauliOperator>& generators() const { return generators_; }
    const BitMatrix& check_matrix() const { return a_; }
    std::vector<int> signs() const;

    /// Input indices dropped by the rank reduction in validate().
    const std::vector<std::size_t>& removed_inputs() const { return removed_; }

    /// Sign-exact product of the minimal generators selected by `combo`,
    /// multiplied in ascending index order.
    PauliOperator element_from_combination(const BitVector& combo) const;

    /// Decides p in G / -p in G / neither by solving over the check matrix
    /// and reconstructing the exact sign from the certificate product.
    MembershipCertificate membership(const PauliOperator& p) const;

    /// Visits all 2^m elements exactly once, sign-exact, in Gray-code order
    /// (one generator multiplication per step).
    void for_each_element(const std::function<void(const PauliOperator&)>& fn,
                          std::size_t max_generators = 24) const;

    std::vector<PauliOperator> elements(std::size_t max_generators = 24) const;

    /// G_nu: the subgroup generated by elements of weight <= nu, with its
    /// own minimal generating set of nu-local elements.
    StabilizerGroup subgroup_nu(std::size_t nu) const;

    /// Ordered generating set used by extend(): a minimal nu-local set
    /// (ascending weight, ties by lexicographic check row) completed to a
    /// minimal generating set of G by the group's generators in input order.
    struct ExtensionBasis {
        std::vector<PauliOperator> ordered;
        std::size_t s = 0; // count of nu-local generators
        std::size_t t = 0; // total count (= num_generators())
    };

    ExtensionBasis extension_basis(std::size_t nu) const;

    /// G(b): generator j > s multiplied by (-1)^{b_j}. b indexes the t-s
    /// completion generators of extension_basis(nu).
    StabilizerGroup extend(std::size_t nu, const BitVector& b) const;

    /// Pi_G = (1/|G|) sum_{g in G} g, densely.
    DenseMatrix projector(std::size_t cap = kDenseQubitCap) const;

  private:
    std::size_t n_ = 0;
    std::vector<PauliOperator> generators_;
    BitMatrix a_;
    std::vector<std::size_t> removed_;
};

} // namespace stabloc
