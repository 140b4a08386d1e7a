#include "tipforge/cycles.hpp"

#include <stdexcept>

namespace tipforge {

SignPattern::SignPattern(int n, std::vector<int> signs) : n_(n), signs_(std::move(signs)) {
    if (n < 1) throw DimensionMismatch("sign pattern order must be positive");
    if (static_cast<int>(signs_.size()) != n * n)
        throw DimensionMismatch("sign pattern of order " + std::to_string(n) + " needs " +
                                std::to_string(n * n) + " entries, got " + std::to_string(signs_.size()));
    for (int s : signs_)
        if (s < -1 || s > 1) throw std::invalid_argument("sign entries must be -1, 0 or +1");
}

SignPattern SignPattern::canonical(int n) {
    if (n < 1) throw DimensionMismatch("sign pattern order must be positive");
    std::vector<int> s(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s[i * n + j] = j > i ? 1 : -1;
    return {n, std::move(s)};
}

SignPattern SignPattern::transposed() const {
    std::vector<int> s(signs_.size());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s[j * n_ + i] = (*this)(i, j);
    return {n_, std::move(s)};
}

SignPattern SignPattern::hollowed() const {
    std::vector<int> s = signs_;
    for (int i = 0; i < n_; ++i) s[i * n_ + i] = 0;
    return {n_, std::move(s)};
}

SignPattern SignPattern::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw DimensionMismatch("relabeling has wrong length");
    std::vector<int> s(signs_.size());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s[i * n_ + j] = (*this)(perm[i], perm[j]);
    return {n_, std::move(s)};
}

std::string SignPattern::to_string() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
        if (i > 0) out += ';';
        for (int j = 0; j < n_; ++j) {
            const int s = (*this)(i, j);
            out += s < 0 ? '-' : (s > 0 ? '+' : '0');
        }
    }
    return out;
}

namespace detail {

void require_enumerable(const SignPattern& p, int coeff) {
    if (coeff < 0 || coeff > p.n())
        throw std::invalid_argument("coefficient index " + std::to_string(coeff) + " outside 0.." +
                                    std::to_string(p.n()));
    if (p.n() > kMaxEnumerationOrder)
        throw BudgetExceeded("term enumeration supports order <= " + std::to_string(kMaxEnumerationOrder) +
                             ", got " + std::to_string(p.n()));
}

}  // namespace detail

std::vector<CycleTerm> coefficient_terms(const SignPattern& p, int coeff) {
    detail::require_enumerable(p, coeff);
    std::vector<CycleTerm> out;
    detail::enumerate_terms(p, coeff, [&](const std::vector<int>& support, const std::vector<int>& images,
                                          int sign, int fixed) {
        CycleTerm t{support, images, sign, fixed, {}};
        t.elements.reserve(support.size());
        for (std::size_t k = 0; k < support.size(); ++k) t.elements.push_back({support[k], images[k]});
        out.push_back(std::move(t));
    });
    return out;
}

namespace {

void require_table_range(int n_max) {
    if (n_max > kMaxEnumerationOrder)
        throw BudgetExceeded("sensitivity tables support n_max <= " + std::to_string(kMaxEnumerationOrder) +
                             ", got " + std::to_string(n_max));
    if (n_max < 2) throw std::invalid_argument("sensitivity tables need n_max >= 2");
}

}  // namespace

SensitivityTable sensitivity_table(int n_max) {
    require_table_range(n_max);
    SensitivityTable table{n_max, {}};
    for (int n = 2; n <= n_max; ++n) {
        const SignPattern p = SignPattern::canonical(n);
        std::vector<SensitivityCell> row(n + 1);
        for (int c = 0; c <= n; ++c)
            detail::enumerate_terms(p, c, [&](const auto&, const auto&, int sign, int) {
                ++row[c].total;
                if (sign < 0) ++row[c].tipping;
            });
        table.rows.push_back(std::move(row));
    }
    return table;
}

SensitivityTable sigma_sensitivity_table(int n_max) {
    require_table_range(n_max);
    SensitivityTable table{n_max, {}};
    for (int n = 2; n <= n_max; ++n) {
        const SignPattern p = SignPattern::canonical(n);
        std::vector<SensitivityCell> row(n + 1);
        detail::enumerate_terms(p, 0, [&](const auto&, const auto&, int sign, int fixed) {
            ++row[fixed].total;
            if (sign < 0) ++row[fixed].tipping;
        });
        table.rows.push_back(std::move(row));
    }
    return table;
}

WeightedCycleSet weight_matrices(const SignPattern& p, int coeff, std::optional<int> sigma_power) {
    detail::require_enumerable(p, coeff);
    const int n = p.n();
    WeightedCycleSet w{IntMatrix::Zero(n, n), IntMatrix::Zero(n, n), IntMatrix::Zero(n, n), 0, 0};
    detail::enumerate_terms(p, coeff, [&](const std::vector<int>& support, const std::vector<int>& images,
                                          int sign, int fixed) {
        if (sigma_power && fixed != *sigma_power) return;
        IntMatrix& target = sign > 0 ? w.w_plus : w.w_minus;
        (sign > 0 ? w.positive_terms : w.negative_terms) += 1;
        for (std::size_t k = 0; k < support.size(); ++k) target(support[k], images[k]) += 1;
    });
    w.diff = w.w_plus - w.w_minus;
    return w;
}

}  // namespace tipforge
