#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stabloc/errors.hpp"

namespace stabloc {

/// Fixed-length vector over GF(2), bit-packed into 64-bit words.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t length);

    /// Parse from a string of '0'/'1' characters.
    static BitVector from_string(const std::string& bits);

    std::size_t size() const { return length_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);

    /// In-place XOR with another vector of the same length.
    void xor_with(const BitVector& other);

    /// Number of set bits.
    std::size_t popcount() const;

    /// Parity of the AND with another vector (GF(2) inner product).
    bool dot(const BitVector& other) const;

    bool is_zero() const;
    bool operator==(const BitVector& other) const = default;

    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    friend class BitMatrix;
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Result of a row-space membership query: when `member` is true,
/// `combination` satisfies combination^T * M = v over GF(2).
struct RowSpaceCertificate {
    bool member = false;
    BitVector combination;
};

/// Dense matrix over GF(2) with row-major bit packing. All pivoting and
/// reduction is deterministic: pivots are chosen in ascending column order
/// and rows of reduced forms are ordered pivot-ascending.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    /// Build from rows given as '0'/'1' strings, all the same length.
    static BitMatrix from_rows(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    void append_row(const BitVector& v);

    void xor_row_into(std::size_t src, std::size_t dst);

    BitMatrix transposed() const;

    /// Matrix product over GF(2); cols() must equal other.rows().
    BitMatrix multiplied_by(const BitMatrix& other) const;

    /// GF(2) row rank by Gaussian elimination.
    std::size_t rank() const;

    /// Reduced row echelon form. Zero rows are dropped; the remaining rows
    /// are ordered by ascending pivot column, so the result is canonical
    /// for the row space.
    BitMatrix rref() const;

    /// Basis for the left null space: returns N with N * (*this) = 0 and
    /// rank(N) = rows() - rank(). N is in canonical reduced form.
    BitMatrix left_null_basis() const;

    /// Row-space membership with certificate. v must have cols() entries.
    RowSpaceCertificate in_row_space(const BitVector& v) const;

    /// Check-matrix column zeroing: for a matrix with 2n columns split as
    /// (X half | Z half), zero columns j and j+n for every qubit j in S.
    /// Qubit indices are 0-based and must be < n = cols()/2.
    BitMatrix zero_qubit_columns(const std::set<std::size_t>& qubits) const;

    bool operator==(const BitMatrix& other) const = default;

  private:
    std::size_t words_per_row() const { return (cols_ + 63) / 64; }
    std::uint64_t* row_data(std::size_t r) { return data_.data() + r * words_per_row(); }
    const std::uint64_t* row_data(std::size_t r) const { return data_.data() + r * words_per_row(); }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint64_t> data_;
};

} // namespace stabloc
