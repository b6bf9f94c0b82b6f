#include "stabloc/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace stabloc {

namespace {

struct PivotRow {
    std::size_t col;
    BitVector row;
    PauliOperator op;      // sign-exact product matching `row`
    BitVector input_combo; // over the input generator list
};

std::size_t leading_bit(const BitVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.get(i)) {
            return i;
        }
    }
    return v.size();
}

std::string combo_to_indices(const BitVector& combo) {
    std::string s;
    for (std::size_t i = 0; i < combo.size(); ++i) {
        if (combo.get(i)) {
            if (!s.empty()) {
                s += ", ";
            }
            s += std::to_string(i + 1);
        }
    }
    return s;
}

// Enumerates size-k subsets of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& subset, std::size_t n) {
    const std::size_t k = subset.size();
    if (k == 0) {
        return false;
    }
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

} // namespace

StabilizerGroup StabilizerGroup::validate(const std::vector<PauliOperator>& gens, std::size_t n_hint) {
    StabilizerGroup g;
    g.n_ = gens.empty() ? n_hint : gens.front().num_qubits();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].num_qubits() != g.n_) {
            throw DimensionError("generator " + std::to_string(i + 1) + " acts on " +
                                 std::to_string(gens[i].num_qubits()) + " qubits, expected " +
                                 std::to_string(g.n_));
        }
        if (!gens[i].is_hermitian()) {
            throw ValidationError("generator " + std::to_string(i + 1) +
                                  " is not a signed Hermitian Pauli tensor");
        }
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (!gens[i].commutes_with(gens[j])) {
                throw ValidationError("generators " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) + " anticommute");
            }
        }
    }

    std::vector<PivotRow> pivots;
    g.a_ = BitMatrix(0, 2 * g.n_);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        BitVector row = gens[i].check_row();
        PauliOperator op = gens[i];
        BitVector combo(gens.size());
        combo.set(i, true);
        for (const PivotRow& p : pivots) {
            if (row.get(p.col)) {
                row.xor_with(p.row);
                op = op.multiplied_by(p.op);
                combo.xor_with(p.input_combo);
            }
        }
        if (row.is_zero()) {
            if (op.sign() == -1) {
                throw ValidationError("trivial codespace: generators {" + combo_to_indices(combo) +
                                      "} multiply to -identity");
            }
            g.removed_.push_back(i);
            continue;
        }
        pivots.push_back(PivotRow{leading_bit(row), row, op, combo});
        std::sort(pivots.begin(), pivots.end(),
                  [](const PivotRow& a, const PivotRow& b) { return a.col < b.col; });
        g.generators_.push_back(gens[i]);
        g.a_.append_row(gens[i].check_row());
    }
    return g;
}

StabilizerGroup StabilizerGroup::from_check_matrix(const BitMatrix& a, const std::vector<int>& signs) {
    if (a.cols() % 2 != 0) {
        throw DimensionError("check matrix must have 2n columns");
    }
    if (signs.size() != a.rows()) {
        throw DimensionError("sign count does not match row count");
    }
    std::vector<PauliOperator> gens;
    gens.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        gens.push_back(PauliOperator::from_check_row(a.row(r), signs[r]));
    }
    return validate(gens, a.cols() / 2);
}

std::vector<int> StabilizerGroup::signs() const {
    std::vector<int> s;
    s.reserve(generators_.size());
    for (const auto& g : generators_) {
        s.push_back(g.sign());
    }
    return s;
}

PauliOperator StabilizerGroup::element_from_combination(const BitVector& combo) const {
    if (combo.size() != generators_.size()) {
        throw DimensionError("combination length does not match generator count");
    }
    PauliOperator prod = PauliOperator::identity(n_);
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (combo.get(i)) {
            prod = prod.multiplied_by(generators_[i]);
        }
    }
    return prod;
}

MembershipCertificate StabilizerGroup::membership(const PauliOperator& p) const {
    if (p.num_qubits() != n_) {
        throw DimensionError("membership: qubit count mismatch");
    }
    if (!p.is_hermitian()) {
        throw ValidationError("membership: operator is not a signed Hermitian Pauli tensor");
    }
    const RowSpaceCertificate cert = a_.in_row_space(p.check_row());
    if (!cert.member) {
        return MembershipCertificate{Membership::Neither, BitVector(generators_.size())};
    }
    const PauliOperator prod = element_from_combination(cert.combination);
    const Membership res =
        prod.sign() == p.sign() ? Membership::InGroup : Membership::NegationInGroup;
    return MembershipCertificate{res, cert.combination};
}

void StabilizerGroup::for_each_element(const std::function<void(const PauliOperator&)>& fn,
                                       std::size_t max_generators) const {
    const std::size_t m = generators_.size();
    if (m > max_generators) {
        throw ResourceError("enumeration of 2^" + std::to_string(m) +
                            " elements exceeds the cap of 2^" + std::to_string(max_generators));
    }
    PauliOperator current = PauliOperator::identity(n_);
    fn(current);
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t t = 1; t < total; ++t) {
        const auto flip = static_cast<std::size_t>(std::countr_zero(t));
        current = current.multiplied_by(generators_[flip]);
        fn(current);
    }
}

std::vector<PauliOperator> StabilizerGroup::elements(std::size_t max_generators) const {
    std::vector<PauliOperator> out;
    out.reserve(static_cast<std::size_t>(group_order()));
    for_each_element([&](const PauliOperator& g) { out.push_back(g); }, max_generators);
    return out;
}

StabilizerGroup StabilizerGroup::subgroup_nu(std::size_t nu) const {
    if (nu > n_) {
        throw DimensionError("subgroup_nu: nu must be at most the qubit count");
    }
    // G_nu = <union over |S| = nu of G_S>: every weight<=nu element is
    // supported in some size-nu set, and every G_S element has weight<=nu.
    std::vector<PauliOperator> found;
    std::vector<BitVector> reduced_rows;
    auto try_add = [&](const BitVector& row) {
        BitVector r = row;
        for (const BitVector& p : reduced_rows) {
            if (r.get(leading_bit(p))) {
                r.xor_with(p);
            }
        }
        if (r.is_zero()) {
            return;
        }
        // Keep reduced_rows ordered by leading bit for the single-pass reduce.
        reduced_rows.push_back(r);
        std::sort(reduced_rows.begin(), reduced_rows.end(), [](const BitVector& a, const BitVector& b) {
            return leading_bit(a) < leading_bit(b);
        });
        const RowSpaceCertificate cert = a_.in_row_space(row);
        found.push_back(element_from_combination(cert.combination));
    };

    if (nu == 0 || generators_.empty()) {
        return validate({}, n_);
    }
    std::vector<std::size_t> subset(nu);
    for (std::size_t i = 0; i < nu; ++i) {
        subset[i] = i;
    }
    do {
        const std::set<std::size_t> s(subset.begin(), subset.end());
        const BitMatrix a_s = a_.zero_qubit_columns(s);
        const BitMatrix n_s = a_s.left_null_basis();
        const BitMatrix b_s = n_s.multiplied_by(a_);
        for (std::size_t r = 0; r < b_s.rows(); ++r) {
            try_add(b_s.row(r));
        }
        if (found.size() == generators_.size()) {
            break; // already spans all of G
        }
    } while (next_combination(subset, n_));
    return validate(found, n_);
}

StabilizerGroup::ExtensionBasis StabilizerGroup::extension_basis(std::size_t nu) const {
    const StabilizerGroup g_nu = subgroup_nu(nu);
    std::vector<PauliOperator> ordered = g_nu.generators();
    std::sort(ordered.begin(), ordered.end(), [](const PauliOperator& a, const PauliOperator& b) {
        if (a.weight() != b.weight()) {
            return a.weight() < b.weight();
        }
        return a.check_row().to_string() < b.check_row().to_string();
    });
    const std::size_t s = ordered.size();

    BitMatrix span(0, 2 * n_);
    for (const auto& op : ordered) {
        span.append_row(op.check_row());
    }
    for (const auto& gen : generators_) {
        if (!span.in_row_space(gen.check_row()).member) {
            ordered.push_back(gen);
            span.append_row(gen.check_row());
        }
    }
    return ExtensionBasis{std::move(ordered), s, generators_.size()};
}

StabilizerGroup StabilizerGroup::extend(std::size_t nu, const BitVector& b) const {
    const ExtensionBasis basis = extension_basis(nu);
    if (b.size() != basis.t - basis.s) {
        throw DimensionError("extend: flip vector has length " + std::to_string(b.size()) +
                             ", expected t - s = " + std::to_string(basis.t - basis.s));
    }
    std::vector<PauliOperator> gens = basis.ordered;
    for (std::size_t j = basis.s; j < basis.t; ++j) {
        if (b.get(j - basis.s)) {
            gens[j] = gens[j].negated();
        }
    }
    return validate(gens, n_);
}

DenseMatrix StabilizerGroup::projector(std::size_t cap) const {
    if (n_ > cap) {
        throw ResourceError("projector needs " + std::to_string(n_) +
                            " qubits, above the cap of " + std::to_string(cap));
    }
    PauliSum accum(n_);
    for_each_element([&](const PauliOperator& g) { accum.add_term(1.0, g); });
    DenseMatrix pi = sum_to_dense(accum, cap);
    pi /= static_cast<double>(group_order());
    return pi;
}

} // namespace stabloc
