#include "stabloc/locality.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "stabloc/errors.hpp"

namespace stabloc {

namespace {

std::size_t leading_bit(const BitVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.get(i)) {
            return i;
        }
    }
    return v.size();
}

// Pauli weight of a 2n-bit (x | z) row.
std::size_t row_weight(const BitVector& row) {
    const std::size_t n = row.size() / 2;
    std::size_t w = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (row.get(k) || row.get(k + n)) {
            ++w;
        }
    }
    return w;
}

BitVector combine_rows(const BitMatrix& a, const BitVector& combo) {
    BitVector out(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        if (combo.get(r)) {
            out.xor_with(a.row(r));
        }
    }
    return out;
}

// Sign-exact product of the generators selected by combo, ascending order.
PauliOperator product_for_combo(const BitMatrix& a, const std::vector<int>& signs,
                                const BitVector& combo) {
    PauliOperator prod = PauliOperator::identity(a.cols() / 2);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        if (combo.get(r)) {
            prod = prod.multiplied_by(PauliOperator::from_check_row(a.row(r), signs[r]));
        }
    }
    return prod;
}

void check_signed_matrix(const BitMatrix& a, const std::vector<int>& signs) {
    if (a.cols() % 2 != 0) {
        throw DimensionError("check matrix must have 2n columns");
    }
    if (signs.size() != a.rows()) {
        throw DimensionError("sign count does not match row count");
    }
}

// Incremental GF(2) echelon span; rows are kept ordered by leading bit.
class RowSpan {
  public:
    // Returns true when `row` was independent of the current span.
    bool add(const BitVector& row) {
        BitVector r = reduce(row);
        if (r.is_zero()) {
            return false;
        }
        rows_.push_back(std::move(r));
        std::sort(rows_.begin(), rows_.end(), [](const BitVector& a, const BitVector& b) {
            return leading_bit(a) < leading_bit(b);
        });
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

  private:
    BitVector reduce(const BitVector& row) const {
        BitVector r = row;
        for (const BitVector& p : rows_) {
            if (r.get(leading_bit(p))) {
                r.xor_with(p);
            }
        }
        return r;
    }

    std::vector<BitVector> rows_;
};

// Enumerates size-k subsets of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& subset, std::size_t n) {
    const std::size_t k = subset.size();
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

LocalityReport delta_of_check_matrix(const BitMatrix& a, const std::vector<int>& signs,
                                     const LocalityOptions& options) {
    check_signed_matrix(a, signs);
    const std::size_t n = a.cols() / 2;
    const std::size_t full_rank = a.rank();
    if (full_rank == 0) {
        throw PreconditionError("delta is undefined for the trivial group");
    }
    std::uint64_t examined = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> subset(k);
        for (std::size_t i = 0; i < k; ++i) {
            subset[i] = i;
        }
        do {
            if (examined >= options.max_subsets) {
                throw BudgetError("delta: subset budget exhausted; delta >= " + std::to_string(k),
                                  static_cast<int>(k), examined);
            }
            ++examined;
            const std::set<std::size_t> s(subset.begin(), subset.end());
            const BitMatrix a_s = a.zero_qubit_columns(s);
            if (a_s.rank() < full_rank) {
                // Some left-null vector of A_S is not one of A; its row
                // combination is the minimal-weight element.
                const BitMatrix n_s = a_s.left_null_basis();
                for (std::size_t r = 0; r < n_s.rows(); ++r) {
                    const BitVector v = n_s.row(r);
                    if (!combine_rows(a, v).is_zero()) {
                        LocalityReport report;
                        report.kind = MetricKind::Delta;
                        report.value = k;
                        report.method = MetricMethod::Algorithm;
                        report.subsets_examined = examined;
                        report.witness = {product_for_combo(a, signs, v)};
                        report.witness_subset = subset;
                        return report;
                    }
                }
                throw InternalConsistencyError("delta: rank drop without a witnessing null vector");
            }
        } while (next_combination(subset, n));
    }
    throw InternalConsistencyError("delta: no rank drop up to k = n despite nonzero rank");
}

LocalityReport delta_oracle_of_check_matrix(const BitMatrix& a, const std::vector<int>& signs,
                                            std::size_t max_rows) {
    check_signed_matrix(a, signs);
    const std::size_t m = a.rows();
    if (a.rank() == 0) {
        throw PreconditionError("delta is undefined for the trivial group");
    }
    if (m > max_rows) {
        throw ResourceError("delta oracle would enumerate 2^" + std::to_string(m) + " products");
    }
    BitVector current(a.cols());
    std::size_t best = a.cols();
    std::uint64_t best_step = 0;
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t t = 1; t < total; ++t) {
        current.xor_with(a.row(static_cast<std::size_t>(std::countr_zero(t))));
        if (!current.is_zero()) {
            const std::size_t w = row_weight(current);
            if (w < best) {
                best = w;
                best_step = t;
            }
        }
    }
    BitVector combo(m);
    const std::uint64_t gray = best_step ^ (best_step >> 1);
    for (std::size_t r = 0; r < m; ++r) {
        combo.set(r, (gray >> r) & 1u);
    }
    LocalityReport report;
    report.kind = MetricKind::Delta;
    report.value = best;
    report.method = MetricMethod::Oracle;
    report.subsets_examined = total - 1;
    report.witness = {product_for_combo(a, signs, combo)};
    return report;
}

LocalityReport eta_of_check_matrix(const BitMatrix& a, const std::vector<int>& signs,
                                   const LocalityOptions& options) {
    check_signed_matrix(a, signs);
    const std::size_t n = a.cols() / 2;
    const std::size_t full_rank = a.rank();
    if (full_rank == 0) {
        throw PreconditionError("eta is undefined for the trivial group");
    }
    std::uint64_t examined = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        RowSpan a_k;
        std::vector<BitVector> kept;
        std::vector<std::size_t> subset(k);
        for (std::size_t i = 0; i < k; ++i) {
            subset[i] = i;
        }
        do {
            if (examined >= options.max_subsets) {
                throw BudgetError("eta: subset budget exhausted; eta >= " + std::to_string(k),
                                  static_cast<int>(k), examined);
            }
            ++examined;
            const std::set<std::size_t> s(subset.begin(), subset.end());
            const BitMatrix a_s = a.zero_qubit_columns(s);
            const BitMatrix n_s = a_s.left_null_basis();
            const BitMatrix b_s = n_s.multiplied_by(a);
            for (std::size_t r = 0; r < b_s.rows(); ++r) {
                if (a_k.add(b_s.row(r))) {
                    kept.push_back(b_s.row(r));
                }
            }
            if (a_k.rank() == full_rank) {
                LocalityReport report;
                report.kind = MetricKind::Eta;
                report.value = k;
                report.method = MetricMethod::Algorithm;
                report.subsets_examined = examined;
                for (const BitVector& row : kept) {
                    const RowSpaceCertificate cert = a.in_row_space(row);
                    report.witness.push_back(product_for_combo(a, signs, cert.combination));
                }
                return report;
            }
        } while (next_combination(subset, n));
    }
    throw InternalConsistencyError("eta: span never reached full rank");
}

LocalityReport eta_oracle_of_check_matrix(const BitMatrix& a, const std::vector<int>& signs,
                                          std::size_t max_rows) {
    check_signed_matrix(a, signs);
    const std::size_t m = a.rows();
    const std::size_t n = a.cols() / 2;
    const std::size_t full_rank = a.rank();
    if (full_rank == 0) {
        throw PreconditionError("eta is undefined for the trivial group");
    }
    if (m > max_rows) {
        throw ResourceError("eta oracle would enumerate 2^" + std::to_string(m) + " elements");
    }
    std::vector<std::vector<BitVector>> by_weight(n + 1);
    BitVector current(a.cols());
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t t = 1; t < total; ++t) {
        current.xor_with(a.row(static_cast<std::size_t>(std::countr_zero(t))));
        if (!current.is_zero()) {
            by_weight[row_weight(current)].push_back(current);
        }
    }
    RowSpan span;
    std::vector<BitVector> kept;
    for (std::size_t w = 1; w <= n; ++w) {
        for (const BitVector& row : by_weight[w]) {
            if (span.add(row)) {
                kept.push_back(row);
            }
        }
        if (span.rank() == full_rank) {
            LocalityReport report;
            report.kind = MetricKind::Eta;
            report.value = w;
            report.method = MetricMethod::Oracle;
            report.subsets_examined = total - 1;
            for (const BitVector& row : kept) {
                const RowSpaceCertificate cert = a.in_row_space(row);
                report.witness.push_back(product_for_combo(a, signs, cert.combination));
            }
            return report;
        }
    }
    throw InternalConsistencyError("eta oracle: span never reached full rank");
}

LocalityReport delta(const StabilizerGroup& g, const LocalityOptions& options) {
    return delta_of_check_matrix(g.check_matrix(), g.signs(), options);
}

LocalityReport delta_oracle(const StabilizerGroup& g, std::size_t max_generators) {
    return delta_oracle_of_check_matrix(g.check_matrix(), g.signs(), max_generators);
}

LocalityReport eta(const StabilizerGroup& g, const LocalityOptions& options) {
    return eta_of_check_matrix(g.check_matrix(), g.signs(), options);
}

LocalityReport eta_oracle(const StabilizerGroup& g, std::size_t max_generators) {
    return eta_oracle_of_check_matrix(g.check_matrix(), g.signs(), max_generators);
}

CssSplit css_split(const StabilizerGroup& g) {
    const BitMatrix& a = g.check_matrix();
    const std::size_t m = a.rows();
    const std::size_t n = g.num_qubits();

    BitMatrix ax(m, n);
    BitMatrix az(m, n);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            ax.set(r, c, a.get(r, c));
            az.set(r, c, a.get(r, c + n));
        }
    }

    // v^T A is pure-X exactly when v kills the Z block, and vice versa.
    auto members_of = [&](const BitMatrix& killed_block) {
        const BitMatrix null_basis = killed_block.left_null_basis();
        const BitMatrix rows = null_basis.multiplied_by(a);
        std::vector<PauliOperator> gens;
        RowSpan span;
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            if (span.add(rows.row(r))) {
                const RowSpaceCertificate cert = a.in_row_space(rows.row(r));
                gens.push_back(g.element_from_combination(cert.combination));
            }
        }
        return gens;
    };

    CssSplit split;
    const std::vector<PauliOperator> gens_x = members_of(az);
    const std::vector<PauliOperator> gens_z = members_of(ax);
    split.gx = StabilizerGroup::validate(gens_x, n);
    split.gz = StabilizerGroup::validate(gens_z, n);
    // G_X and G_Z intersect trivially, so G = G_X G_Z iff the ranks add up.
    split.is_split =
        split.gx.num_generators() + split.gz.num_generators() == g.num_generators();

    std::vector<std::size_t> pure_x, pure_z, mixed;
    for (std::size_t r = 0; r < m; ++r) {
        const bool has_x = !g.generators()[r].x_bits().is_zero();
        const bool has_z = !g.generators()[r].z_bits().is_zero();
        if (!has_z) {
            pure_x.push_back(r);
        } else if (!has_x) {
            pure_z.push_back(r);
        } else {
            mixed.push_back(r);
        }
    }
    split.reordering = pure_x;
    split.reordering.insert(split.reordering.end(), pure_z.begin(), pure_z.end());
    split.reordering.insert(split.reordering.end(), mixed.begin(), mixed.end());
    return split;
}

CssLocalityReport css_locality(const StabilizerGroup& g, const LocalityOptions& options) {
    const CssSplit split = css_split(g);
    if (!split.is_split) {
        throw PreconditionError("css_locality requires an XZ-split group");
    }
    CssLocalityReport report;
    if (split.gx.num_generators() > 0) {
        report.delta_x = delta(split.gx, options).value;
        report.eta_x = eta(split.gx, options).value;
    }
    if (split.gz.num_generators() > 0) {
        report.delta_z = delta(split.gz, options).value;
        report.eta_z = eta(split.gz, options).value;
    }
    report.delta = delta(g, options).value;
    report.eta = eta(g, options).value;

    std::size_t min_sides = g.num_qubits() + 1;
    std::size_t max_sides = 0;
    for (const auto& side : {report.delta_x, report.delta_z}) {
        if (side) {
            min_sides = std::min(min_sides, *side);
        }
    }
    for (const auto& side : {report.eta_x, report.eta_z}) {
        if (side) {
            max_sides = std::max(max_sides, *side);
        }
    }
    if (report.delta != min_sides) {
        throw InternalConsistencyError("css_locality: delta != min(delta_X, delta_Z)");
    }
    if (report.eta != max_sides) {
        throw InternalConsistencyError("css_locality: eta != max(eta_X, eta_Z)");
    }
    return report;
}

} // namespace stabloc
