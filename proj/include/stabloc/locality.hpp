#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stabloc/bit_matrix.hpp"
#include "stabloc/pauli.hpp"
#include "stabloc/stabilizer.hpp"

namespace stabloc {

enum class MetricKind { Delta, Eta };
enum class MetricMethod { Algorithm, Oracle };

struct LocalityOptions {
    /// Abort with BudgetError once this many support subsets have been
    /// examined. Both searches are exponential when the answer grows with n.
    std::uint64_t max_subsets = std::uint64_t{1} << 26;
};

struct LocalityReport {
    MetricKind kind = MetricKind::Delta;
    std::size_t value = 0;
    MetricMethod method = MetricMethod::Algorithm;
    std::uint64_t subsets_examined = 0;

    /// delta: one group element of minimal weight.
    /// eta: a generating set whose members all have weight <= value.
    std::vector<PauliOperator> witness;

    /// delta only: the qubit subset (0-based) where the rank drop fired.
    std::vector<std::size_t> witness_subset;
};

/// delta by the subset rank-drop criterion on a signed check matrix.
///
/// This is a purely linear-algebraic computation: it needs neither
/// commutativity nor -1-freeness, and computes the minimum weight of a
/// nonzero vector in the row space (which equals min{wt(g) | g in G, g != 1}
/// for a validated stabilizer group). Witness signs come from multiplying
/// the indicated generators in ascending row order.
LocalityReport delta_of_check_matrix(const BitMatrix& a, const std::vector<int>& signs,
                                     const LocalityOptions& options = {});

/// Brute-force delta: enumerates all 2^m row combinations in Gray-code
/// order and takes the minimum weight over nonzero patterns.
LocalityReport delta_oracle_of_check_matrix(const BitMatrix& a, const std::vector<int>& signs,
                                            std::size_t max_rows = 24);

/// eta by left-null accumulation: for ascending k, the rows N_S * A (with
/// N_S spanning the left null space of A_S) encode the subgroup supported
/// inside S; eta is the first k at which those rows span the row space.
LocalityReport eta_of_check_matrix(const BitMatrix& a, const std::vector<int>& signs,
                                   const LocalityOptions& options = {});

/// Brute-force eta: enumerates the row space, buckets by weight, and
/// accumulates rank in ascending weight order until the span is full.
LocalityReport eta_oracle_of_check_matrix(const BitMatrix& a, const std::vector<int>& signs,
                                          std::size_t max_rows = 24);

LocalityReport delta(const StabilizerGroup& g, const LocalityOptions& options = {});
LocalityReport delta_oracle(const StabilizerGroup& g, std::size_t max_generators = 24);
LocalityReport eta(const StabilizerGroup& g, const LocalityOptions& options = {});
LocalityReport eta_oracle(const StabilizerGroup& g, std::size_t max_generators = 24);

/// Result of the XZ-split decision. `reordering` lists original generator
/// indices with pure-X generators first, pure-Z second, mixed last; it is a
/// block-diagonalizing reorder exactly when every generator is pure.
struct CssSplit {
    bool is_split = false;
    StabilizerGroup gx;
    StabilizerGroup gz;
    std::vector<std::size_t> reordering;
};

/// Decides whether G = G_X * G_Z relative to a computed generating set and
/// returns G_X = G with pure-X elements, G_Z likewise.
CssSplit css_split(const StabilizerGroup& g);

/// Component metrics for an XZ-split group, with the two structure
/// identities delta = min(delta_X, delta_Z) and eta = max(eta_X, eta_Z)
/// asserted against the full-group algorithms before returning.
struct CssLocalityReport {
    std::optional<std::size_t> delta_x;
    std::optional<std::size_t> delta_z;
    std::optional<std::size_t> eta_x;
    std::optional<std::size_t> eta_z;
    std::size_t delta = 0;
    std::size_t eta = 0;
};

CssLocalityReport css_locality(const StabilizerGroup& g, const LocalityOptions& options = {});

} // namespace stabloc
