#include "stabloc/pauli.hpp"

#include <bit>

namespace stabloc {

namespace {

std::size_t and_popcount(const BitVector& a, const BitVector& b) {
    std::size_t count = 0;
    for (std::size_t w = 0; w < a.words().size(); ++w) {
        count += static_cast<std::size_t>(std::popcount(a.words()[w] & b.words()[w]));
    }
    return count;
}

} // namespace

PauliOperator PauliOperator::identity(std::size_t n) {
    return from_bits(BitVector(n), BitVector(n), 0);
}

PauliOperator PauliOperator::from_bits(BitVector x, BitVector z, int phase) {
    if (x.size() != z.size()) {
        throw DimensionError("PauliOperator: x and z lengths differ");
    }
    PauliOperator op;
    op.x_ = std::move(x);
    op.z_ = std::move(z);
    op.phase_ = ((phase % 4) + 4) % 4;
    return op;
}

PauliOperator PauliOperator::from_string(const std::string& label) {
    if (label.empty()) {
        throw ParseError("empty Pauli label");
    }
    std::size_t start = 0;
    int phase = 0;
    if (label[0] == '+' || label[0] == '-') {
        start = 1;
        if (label[0] == '-') {
            phase = 2;
        }
        if (start < label.size() && label[start] == 'i') {
            phase += 1;
            start += 1;
        }
    }
    const std::size_t n = label.size() - start;
    if (n == 0) {
        throw ParseError("Pauli label has a sign but no letters");
    }
    BitVector x(n);
    BitVector z(n);
    for (std::size_t k = 0; k < n; ++k) {
        switch (label[start + k]) {
            case 'I':
                break;
            case 'X':
                x.set(k, true);
                break;
            case 'Y':
                x.set(k, true);
                z.set(k, true);
                phase += 1;
                break;
            case 'Z':
                z.set(k, true);
                break;
            default:
                throw ParseError("invalid Pauli letter '" + std::string(1, label[start + k]) +
                                 "' (expected I, X, Y, or Z)");
        }
    }
    return from_bits(std::move(x), std::move(z), phase);
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t q, char letter) {
    if (q >= n) {
        throw DimensionError("PauliOperator::single: qubit index out of range");
    }
    BitVector x(n);
    BitVector z(n);
    int phase = 0;
    switch (letter) {
        case 'X':
            x.set(q, true);
            break;
        case 'Y':
            x.set(q, true);
            z.set(q, true);
            phase = 1;
            break;
        case 'Z':
            z.set(q, true);
            break;
        default:
            throw ParseError("invalid Pauli letter");
    }
    return from_bits(std::move(x), std::move(z), phase);
}

PauliOperator PauliOperator::from_check_row(const BitVector& row, int sign) {
    if (row.size() % 2 != 0) {
        throw DimensionError("check row must have even length");
    }
    if (sign != 1 && sign != -1) {
        throw ValidationError("sign must be +1 or -1");
    }
    const std::size_t n = row.size() / 2;
    BitVector x(n);
    BitVector z(n);
    for (std::size_t k = 0; k < n; ++k) {
        x.set(k, row.get(k));
        z.set(k, row.get(k + n));
    }
    const int y = static_cast<int>(and_popcount(x, z));
    return from_bits(std::move(x), std::move(z), y + (sign == -1 ? 2 : 0));
}

std::size_t PauliOperator::y_count() const {
    return and_popcount(x_, z_);
}

bool PauliOperator::is_hermitian() const {
    return ((phase_ - static_cast<int>(y_count())) % 2 + 2) % 2 == 0;
}

int PauliOperator::sign() const {
    if (!is_hermitian()) {
        throw ValidationError("operator is not a signed Hermitian Pauli tensor");
    }
    const int rel = ((phase_ - static_cast<int>(y_count())) % 4 + 4) % 4;
    return rel == 0 ? 1 : -1;
}

PauliOperator PauliOperator::canonical() const {
    return from_bits(x_, z_, static_cast<int>(y_count()));
}

PauliOperator PauliOperator::negated() const {
    return from_bits(x_, z_, phase_ + 2);
}

std::size_t PauliOperator::weight() const {
    std::size_t count = 0;
    for (std::size_t w = 0; w < x_.words().size(); ++w) {
        count += static_cast<std::size_t>(std::popcount(x_.words()[w] | z_.words()[w]));
    }
    return count;
}

std::vector<std::size_t> PauliOperator::support() const {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < num_qubits(); ++k) {
        if (x_.get(k) || z_.get(k)) {
            s.push_back(k);
        }
    }
    return s;
}

BitVector PauliOperator::check_row() const {
    const std::size_t n = num_qubits();
    BitVector row(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        row.set(k, x_.get(k));
        row.set(k + n, z_.get(k));
    }
    return row;
}

bool PauliOperator::commutes_with(const PauliOperator& other) const {
    if (other.num_qubits() != num_qubits()) {
        throw DimensionError("commutes_with: qubit counts differ");
    }
    const std::size_t cross = and_popcount(x_, other.z_) + and_popcount(z_, other.x_);
    return cross % 2 == 0;
}

PauliOperator PauliOperator::multiplied_by(const PauliOperator& other) const {
    if (other.num_qubits() != num_qubits()) {
        throw DimensionError("multiplied_by: qubit counts differ");
    }
    // Moving other's X factors left past this operator's Z factors picks up
    // one (-1) per overlapping position.
    const int phase = phase_ + other.phase_ + 2 * static_cast<int>(and_popcount(z_, other.x_));
    BitVector x = x_;
    x.xor_with(other.x_);
    BitVector z = z_;
    z.xor_with(other.z_);
    return from_bits(std::move(x), std::move(z), phase);
}

std::string PauliOperator::to_string() const {
    static const char* kPrefixes[4] = {"+", "+i", "-", "-i"};
    const int rel = ((phase_ - static_cast<int>(y_count())) % 4 + 4) % 4;
    std::string s = kPrefixes[rel];
    for (std::size_t k = 0; k < num_qubits(); ++k) {
        const bool x = x_.get(k);
        const bool z = z_.get(k);
        s += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return s;
}

void PauliSum::add_term(double coeff, const PauliOperator& op) {
    if (op.num_qubits() != n_) {
        throw DimensionError("PauliSum::add_term: qubit count mismatch");
    }
    const double folded = coeff * op.sign();
    terms_[op.check_row().words()] += folded;
}

std::vector<std::pair<double, PauliOperator>> PauliSum::terms() const {
    std::vector<std::pair<double, PauliOperator>> out;
    out.reserve(terms_.size());
    for (const auto& [key, coeff] : terms_) {
        BitVector row(2 * n_);
        for (std::size_t w = 0; w < key.size(); ++w) {
            for (std::size_t b = 0; b < 64 && w * 64 + b < 2 * n_; ++b) {
                if ((key[w] >> b) & 1u) {
                    row.set(w * 64 + b, true);
                }
            }
        }
        out.emplace_back(coeff, PauliOperator::from_check_row(row, 1));
    }
    return out;
}

std::size_t PauliSum::locality() const {
    std::size_t k = 0;
    for (const auto& [coeff, op] : terms()) {
        if (coeff != 0.0) {
            k = std::max(k, op.weight());
        }
    }
    return k;
}

bool PauliSum::is_traceless() const {
    return identity_coefficient() == 0.0;
}

double PauliSum::identity_coefficient() const {
    const auto it = terms_.find(std::vector<std::uint64_t>((2 * n_ + 63) / 64, 0));
    return it == terms_.end() ? 0.0 : it->second;
}

} // namespace stabloc
