#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "errors.hpp"

namespace tipforge {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Square grid of signs in {-1, 0, +1}.
class SignPattern {
public:
    SignPattern() = default;
    /// Row-major signs; throws DimensionMismatch / std::invalid_argument on bad input.
    SignPattern(int n, std::vector<int> signs);

    /// -1 on and below the diagonal, +1 above it.
    static SignPattern canonical(int n);

    int n() const noexcept { return n_; }
    int operator()(int row, int col) const { return signs_[row * n_ + col]; }
    const std::vector<int>& signs() const noexcept { return signs_; }

    SignPattern transposed() const;
    /// Same pattern with a zero diagonal.
    SignPattern hollowed() const;
    /// Simultaneous row/column relabeling: result(i, j) = (*this)(perm[i], perm[j]).
    SignPattern relabeled(const std::vector<int>& perm) const;

    /// Rows joined by ';' using '-', '0', '+'.
    std::string to_string() const;

    bool operator==(const SignPattern&) const = default;
    auto operator<=>(const SignPattern&) const = default;

private:
    int n_ = 0;
    std::vector<int> signs_;
};

struct Position {
    int row;
    int col;

    bool operator==(const Position&) const = default;
};

/// One signed permutation term of a characteristic-polynomial coefficient.
struct CycleTerm {
    std::vector<int> support;  ///< ascending indices
    std::vector<int> perm;     ///< perm[k] is the image of support[k]
    int sign = 1;              ///< sign of the term in the monic det(xI - A) coefficient
    int sigma_power = 0;       ///< fixed points, i.e. diagonal entries used
    std::vector<Position> elements;

    bool operator==(const CycleTerm&) const = default;
};

/// Largest order for which exhaustive term enumeration is allowed.
inline constexpr int kMaxEnumerationOrder = 9;

namespace detail {

/// Calls visit(support, images, sign, fixed_points) for every nonvanishing
/// permutation term of the x^coeff coefficient of det(xI - A). `images[k]` is
/// the column used by row support[k].
template <typename Visit>
void enumerate_terms(const SignPattern& p, int coeff, Visit&& visit) {
    const int n = p.n();
    const int k = n - coeff;
    if (k == 0) {
        visit(std::vector<int>{}, std::vector<int>{}, 1, 0);
        return;
    }
    std::vector<int> support(k), images(k), slot(n, -1);
    std::vector<char> used(n, 0);
    const int minor_sign = (k % 2 == 0) ? 1 : -1;

    auto finish = [&](int entry_sign) {
        // Parity from the cycle count: a permutation of k items with c cycles
        // has parity (-1)^(k - c).
        std::vector<char> seen(k, 0);
        int cycles = 0, fixed = 0;
        for (int s = 0; s < k; ++s) {
            if (images[s] == support[s]) ++fixed;
            if (seen[s]) continue;
            ++cycles;
            for (int t = s; !seen[t]; t = slot[images[t]]) seen[t] = 1;
        }
        const int parity = ((k - cycles) % 2 == 0) ? 1 : -1;
        visit(support, images, minor_sign * parity * entry_sign, fixed);
    };

    auto assign = [&](auto&& self, int row, int entry_sign) -> void {
        if (row == k) {
            finish(entry_sign);
            return;
        }
        const int r = support[row];
        for (int t = 0; t < k; ++t) {
            const int c = support[t];
            if (used[c]) continue;
            const int s = p(r, c);
            if (s == 0) continue;
            used[c] = 1;
            images[row] = c;
            self(self, row + 1, entry_sign * s);
            used[c] = 0;
        }
    };

    // Subsets in lexicographic order of their sorted index lists.
    for (int i = 0; i < k; ++i) support[i] = i;
    while (true) {
        for (int i = 0; i < k; ++i) slot[support[i]] = i;
        assign(assign, 0, 1);
        for (int i = 0; i < k; ++i) slot[support[i]] = -1;
        int i = k - 1;
        while (i >= 0 && support[i] == n - k + i) --i;
        if (i < 0) break;
        ++support[i];
        for (int j = i + 1; j < k; ++j) support[j] = support[j - 1] + 1;
    }
}

void require_enumerable(const SignPattern& p, int coeff);

}  // namespace detail

/// Every nonvanishing signed term of the x^coeff coefficient of det(xI - A)
/// for a matrix with sign pattern p and unit magnitudes.
std::vector<CycleTerm> coefficient_terms(const SignPattern& p, int coeff);

struct SensitivityCell {
    std::int64_t tipping = 0;  ///< negative terms
    std::int64_t total = 0;

    bool operator==(const SensitivityCell&) const = default;
};

/// rows[n - 2][c] is the cell for order n and index c (coefficient a_c, or
/// sigma power s_c), c = 0..n.
struct SensitivityTable {
    int n_max = 0;
    std::vector<std::vector<SensitivityCell>> rows;

    const SensitivityCell& cell(int n, int index) const { return rows.at(n - 2).at(index); }
    bool operator==(const SensitivityTable&) const = default;
};

/// Tipping/total counts per coefficient for the canonical patterns of orders 2..n_max.
SensitivityTable sensitivity_table(int n_max);

/// Tipping/total counts of the constant coefficient r_0 of the diagonally
/// forced canonical patterns, split by power of sigma.
SensitivityTable sigma_sensitivity_table(int n_max);

/// Per-position counts of positive and negative terms.
struct WeightedCycleSet {
    IntMatrix w_plus;
    IntMatrix w_minus;
    IntMatrix diff;
    std::int64_t positive_terms = 0;
    std::int64_t negative_terms = 0;

    bool operator==(const WeightedCycleSet&) const = default;
};

/// Weight matrices of the x^coeff terms; with `sigma_power` set only terms
/// using exactly that many diagonal entries are counted.
WeightedCycleSet weight_matrices(const SignPattern& p, int coeff,
                                 std::optional<int> sigma_power = std::nullopt);

}  // namespace tipforge
