#include "stabloc/bit_matrix.hpp"

#include <algorithm>
#include <bit>

namespace stabloc {

namespace {

void check_index(std::size_t i, std::size_t bound, const char* what) {
    if (i >= bound) {
        throw DimensionError(std::string(what) + " index " + std::to_string(i) +
                             " out of range [0, " + std::to_string(bound) + ")");
    }
}

} // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

BitVector BitVector::from_string(const std::string& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw ParseError("bit string may contain only '0'/'1', got '" + std::string(1, bits[i]) + "'");
        }
    }
    return v;
}

bool BitVector::get(std::size_t i) const {
    check_index(i, length_, "bit");
    return (words_[i / 64] >> (i % 64)) & 1u;
}

void BitVector::set(std::size_t i, bool value) {
    check_index(i, length_, "bit");
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
        words_[i / 64] |= mask;
    } else {
        words_[i / 64] &= ~mask;
    }
}

void BitVector::xor_with(const BitVector& other) {
    if (other.length_ != length_) {
        throw DimensionError("xor_with: length mismatch (" + std::to_string(length_) + " vs " +
                             std::to_string(other.length_) + ")");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
}

std::size_t BitVector::popcount() const {
    std::size_t count = 0;
    for (std::uint64_t w : words_) {
        count += static_cast<std::size_t>(std::popcount(w));
    }
    return count;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.length_ != length_) {
        throw DimensionError("dot: length mismatch");
    }
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * ((cols + 63) / 64), 0) {}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        m.set_row(r, BitVector::from_string(rows[r]));
    }
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    check_index(r, rows_, "row");
    check_index(c, cols_, "column");
    return (row_data(r)[c / 64] >> (c % 64)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    check_index(r, rows_, "row");
    check_index(c, cols_, "column");
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    if (value) {
        row_data(r)[c / 64] |= mask;
    } else {
        row_data(r)[c / 64] &= ~mask;
    }
}

BitVector BitMatrix::row(std::size_t r) const {
    check_index(r, rows_, "row");
    BitVector v(cols_);
    std::copy(row_data(r), row_data(r) + words_per_row(), v.words_.begin());
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    check_index(r, rows_, "row");
    if (v.size() != cols_) {
        throw DimensionError("set_row: vector length " + std::to_string(v.size()) +
                             " does not match column count " + std::to_string(cols_));
    }
    std::copy(v.words_.begin(), v.words_.end(), row_data(r));
}

void BitMatrix::append_row(const BitVector& v) {
    if (rows_ == 0 && cols_ == 0) {
        cols_ = v.size();
    }
    if (v.size() != cols_) {
        throw DimensionError("append_row: vector length mismatch");
    }
    data_.resize((rows_ + 1) * words_per_row(), 0);
    ++rows_;
    set_row(rows_ - 1, v);
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    check_index(src, rows_, "row");
    check_index(dst, rows_, "row");
    const std::uint64_t* s = row_data(src);
    std::uint64_t* d = row_data(dst);
    for (std::size_t w = 0; w < words_per_row(); ++w) {
        d[w] ^= s[w];
    }
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::multiplied_by(const BitMatrix& other) const {
    if (cols_ != other.rows_) {
        throw DimensionError("multiplied_by: inner dimensions differ (" + std::to_string(cols_) +
                             " vs " + std::to_string(other.rows_) + ")");
    }
    BitMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        BitVector acc(other.cols_);
        for (std::size_t k = 0; k < cols_; ++k) {
            if (get(r, k)) {
                acc.xor_with(other.row(k));
            }
        }
        out.set_row(r, acc);
    }
    return out;
}

std::size_t BitMatrix::rank() const {
    BitMatrix work = *this;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && !work.get(pivot, c)) {
            ++pivot;
        }
        if (pivot == rows_) {
            continue;
        }
        if (pivot != rank) {
            for (std::size_t w = 0; w < words_per_row(); ++w) {
                std::swap(work.row_data(pivot)[w], work.row_data(rank)[w]);
            }
        }
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            if (work.get(r, c)) {
                work.xor_row_into(rank, r);
            }
        }
        ++rank;
    }
    return rank;
}

BitMatrix BitMatrix::rref() const {
    BitMatrix work = *this;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && !work.get(pivot, c)) {
            ++pivot;
        }
        if (pivot == rows_) {
            continue;
        }
        if (pivot != rank) {
            for (std::size_t w = 0; w < words_per_row(); ++w) {
                std::swap(work.row_data(pivot)[w], work.row_data(rank)[w]);
            }
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != rank && work.get(r, c)) {
                work.xor_row_into(rank, r);
            }
        }
        pivot_cols.push_back(c);
        ++rank;
    }
    BitMatrix out(rank, cols_);
    for (std::size_t r = 0; r < rank; ++r) {
        out.set_row(r, work.row(r));
    }
    return out;
}

BitMatrix BitMatrix::left_null_basis() const {
    // Row-reduce [M | I]; rows whose M-part vanishes carry the null
    // combinations in the identity part.
    BitMatrix aug(rows_, cols_ + rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                aug.set(r, c, true);
            }
        }
        aug.set(r, cols_ + r, true);
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && !aug.get(pivot, c)) {
            ++pivot;
        }
        if (pivot == rows_) {
            continue;
        }
        if (pivot != rank) {
            BitVector tmp = aug.row(pivot);
            aug.set_row(pivot, aug.row(rank));
            aug.set_row(rank, tmp);
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != rank && aug.get(r, c)) {
                aug.xor_row_into(rank, r);
            }
        }
        ++rank;
    }
    BitMatrix null_rows(rows_ - rank, rows_);
    for (std::size_t r = rank; r < rows_; ++r) {
        for (std::size_t c = 0; c < rows_; ++c) {
            null_rows.set(r - rank, c, aug.get(r, cols_ + c));
        }
    }
    return null_rows.rref();
}

RowSpaceCertificate BitMatrix::in_row_space(const BitVector& v) const {
    if (v.size() != cols_) {
        throw DimensionError("in_row_space: vector length " + std::to_string(v.size()) +
                             " does not match column count " + std::to_string(cols_));
    }
    // Eliminate M while tracking each reduced row's combination of
    // original rows, then reduce v against the pivots.
    BitMatrix work = *this;
    std::vector<BitVector> combo(rows_, BitVector(rows_));
    for (std::size_t r = 0; r < rows_; ++r) {
        combo[r].set(r, true);
    }
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && !work.get(pivot, c)) {
            ++pivot;
        }
        if (pivot == rows_) {
            continue;
        }
        if (pivot != rank) {
            BitVector tmp = work.row(pivot);
            work.set_row(pivot, work.row(rank));
            work.set_row(rank, tmp);
            std::swap(combo[pivot], combo[rank]);
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != rank && work.get(r, c)) {
                work.xor_row_into(rank, r);
                combo[r].xor_with(combo[rank]);
            }
        }
        pivots.emplace_back(rank, c);
        ++rank;
    }
    BitVector residual = v;
    BitVector u(rows_);
    for (const auto& [prow, pcol] : pivots) {
        if (residual.get(pcol)) {
            residual.xor_with(work.row(prow));
            u.xor_with(combo[prow]);
        }
    }
    if (!residual.is_zero()) {
        return RowSpaceCertificate{false, BitVector(rows_)};
    }
    return RowSpaceCertificate{true, u};
}

BitMatrix BitMatrix::zero_qubit_columns(const std::set<std::size_t>& qubits) const {
    if (cols_ % 2 != 0) {
        throw DimensionError("zero_qubit_columns: column count must be even (X|Z halves)");
    }
    const std::size_t n = cols_ / 2;
    BitMatrix out = *this;
    for (std::size_t q : qubits) {
        if (q >= n) {
            throw DimensionError("zero_qubit_columns: qubit index " + std::to_string(q) +
                                 " out of range [0, " + std::to_string(n) + ")");
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            out.set(r, q, false);
            out.set(r, q + n, false);
        }
    }
    return out;
}

} // namespace stabloc
