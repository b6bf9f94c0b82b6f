#include "stabloc/dense.hpp"

#include <bit>
#include <complex>

namespace stabloc {

namespace {

constexpr std::complex<double> kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw ResourceError("dense representation needs " + std::to_string(n) +
                            " qubits, above the cap of " + std::to_string(cap));
    }
}

// Bit mask over basis indices; qubit 0 maps to the most significant bit.
std::uint64_t index_mask(const BitVector& bits) {
    const std::size_t n = bits.size();
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (bits.get(k)) {
            mask |= std::uint64_t{1} << (n - 1 - k);
        }
    }
    return mask;
}

// Trace(M * sigma) where sigma = i^phase prod X^x Z^z, using the single
// nonzero entry sigma[j^x, j] = i^phase (-1)^{<z,j>}.
std::complex<double> trace_with_pauli(const DenseMatrix& m, std::uint64_t xm, std::uint64_t zm,
                                      int phase) {
    const auto dim = static_cast<std::uint64_t>(m.rows());
    std::complex<double> acc = 0;
    for (std::uint64_t j = 0; j < dim; ++j) {
        const double sign = (std::popcount(zm & j) & 1) ? -1.0 : 1.0;
        acc += m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j ^ xm)) * sign;
    }
    return acc * kPhases[phase & 3];
}

std::size_t qubits_from_dim(Eigen::Index dim) {
    if (dim <= 0 || (dim & (dim - 1)) != 0) {
        throw ValidationError("matrix dimension must be a power of two");
    }
    return static_cast<std::size_t>(std::countr_zero(static_cast<std::uint64_t>(dim)));
}

} // namespace

DenseMatrix to_dense(const PauliOperator& op, std::size_t cap) {
    const std::size_t n = op.num_qubits();
    check_cap(n, cap);
    const auto dim = std::uint64_t{1} << n;
    const std::uint64_t xm = index_mask(op.x_bits());
    const std::uint64_t zm = index_mask(op.z_bits());
    const std::complex<double> scale = kPhases[op.phase() & 3];
    DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t j = 0; j < dim; ++j) {
        const double sign = (std::popcount(zm & j) & 1) ? -1.0 : 1.0;
        m(static_cast<Eigen::Index>(j ^ xm), static_cast<Eigen::Index>(j)) = scale * sign;
    }
    return m;
}

DenseMatrix sum_to_dense(const PauliSum& sum, std::size_t cap) {
    const std::size_t n = sum.num_qubits();
    check_cap(n, cap);
    const auto dim = std::uint64_t{1} << n;
    DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto& [coeff, op] : sum.terms()) {
        if (coeff == 0.0) {
            continue;
        }
        const std::uint64_t xm = index_mask(op.x_bits());
        const std::uint64_t zm = index_mask(op.z_bits());
        const std::complex<double> scale = coeff * kPhases[op.phase() & 3];
        for (std::uint64_t j = 0; j < dim; ++j) {
            const double sign = (std::popcount(zm & j) & 1) ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(j ^ xm), static_cast<Eigen::Index>(j)) += scale * sign;
        }
    }
    return m;
}

PauliSum pauli_decompose(const DenseMatrix& m, double hermitian_tol, std::size_t cap) {
    if (m.rows() != m.cols()) {
        throw ValidationError("pauli_decompose: matrix must be square");
    }
    const std::size_t n = qubits_from_dim(m.rows());
    check_cap(n, cap);
    const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > hermitian_tol) {
        throw ValidationError("pauli_decompose: matrix is not Hermitian (max deviation " +
                              std::to_string(herm_dev) + ")");
    }
    const auto dim = std::uint64_t{1} << n;
    const double norm = 1.0 / static_cast<double>(dim);
    PauliSum sum(n);
    for (std::uint64_t xi = 0; xi < dim; ++xi) {
        for (std::uint64_t zi = 0; zi < dim; ++zi) {
            BitVector x(n);
            BitVector z(n);
            for (std::size_t k = 0; k < n; ++k) {
                x.set(k, (xi >> (n - 1 - k)) & 1u);
                z.set(k, (zi >> (n - 1 - k)) & 1u);
            }
            const int y = static_cast<int>([&] {
                std::size_t c = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    c += x.get(k) && z.get(k);
                }
                return c;
            }());
            const std::complex<double> tr = trace_with_pauli(m, xi, zi, y);
            const std::complex<double> coeff = tr * norm;
            if (std::abs(coeff.imag()) > hermitian_tol) {
                throw ValidationError("pauli_decompose: coefficient has imaginary part " +
                                      std::to_string(coeff.imag()));
            }
            if (std::abs(coeff.real()) > 1e-13) {
                sum.add_term(coeff.real(), PauliOperator::from_bits(x, z, y));
            }
        }
    }
    return sum;
}

} // namespace stabloc
