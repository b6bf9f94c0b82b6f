#pragma once

#include <Eigen/Dense>

#include "stabloc/pauli.hpp"

namespace stabloc {

/// Dense-representation size cap: matrices are 2^n x 2^n, so anything past
/// this is rejected with a ResourceError rather than exhausting memory.
inline constexpr std::size_t kDenseQubitCap = 12;

using DenseMatrix = Eigen::MatrixXcd;

/// 2^n x 2^n matrix of the operator via its monomial structure (one nonzero
/// entry per column). Qubit 0 is the leftmost tensor factor, i.e. the most
/// significant bit of the basis index.
DenseMatrix to_dense(const PauliOperator& op, std::size_t cap = kDenseQubitCap);

/// Dense Hermitian matrix of a real combination of Pauli tensors.
DenseMatrix sum_to_dense(const PauliSum& sum, std::size_t cap = kDenseQubitCap);

/// Inverse of sum_to_dense: coefficients t_J = Trace(M sigma_J) / 2^n.
/// M must be Hermitian within `hermitian_tol` entrywise; coefficients are
/// checked real to the same tolerance and near-zero ones are dropped.
PauliSum pauli_decompose(const DenseMatrix& m, double hermitian_tol = 1e-10,
                         std::size_t cap = kDenseQubitCap);

} // namespace stabloc
