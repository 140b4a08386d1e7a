#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "eigensolver.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "spectrum.hpp"

namespace tipforge {

/// Univariate real polynomial with dense ascending coefficients; coeffs()[k]
/// multiplies t^k. The zero polynomial is the single coefficient 0, otherwise
/// the last coefficient is nonzero.
template <typename Scalar>
class RealPoly {
public:
    RealPoly() : coeffs_{Scalar(0)} {}
    RealPoly(Scalar constant) : coeffs_{constant} {}  // NOLINT: scalars promote naturally
    RealPoly(std::initializer_list<Scalar> ascending) : coeffs_(ascending) { trim(); }
    explicit RealPoly(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { trim(); }

    /// t^power scaled by c.
    static RealPoly monomial(int power, Scalar c = Scalar(1)) {
        std::vector<Scalar> v(power + 1, Scalar(0));
        v[power] = c;
        return RealPoly(std::move(v));
    }

    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    Scalar operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
    int degree() const noexcept { return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == Scalar(0); }
    Scalar leading() const noexcept { return coeffs_.back(); }

    Scalar norm_inf() const {
        Scalar m = 0;
        for (const Scalar& c : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

    /// Horner evaluation; works for real or complex arguments.
    template <typename T>
    T operator()(const T& t) const {
        T acc = T(coeffs_.back());
        for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * t + T(*it);
        return acc;
    }

    RealPoly& operator+=(const RealPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    RealPoly& operator-=(const RealPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    RealPoly& operator*=(Scalar c) {
        for (Scalar& x : coeffs_) x *= c;
        trim();
        return *this;
    }
    RealPoly& operator/=(Scalar c) {
        for (Scalar& x : coeffs_) x /= c;
        trim();
        return *this;
    }

    friend RealPoly operator+(RealPoly a, const RealPoly& b) { return a += b; }
    friend RealPoly operator-(RealPoly a, const RealPoly& b) { return a -= b; }
    friend RealPoly operator-(RealPoly a) { return a *= Scalar(-1); }
    friend RealPoly operator*(RealPoly a, Scalar c) { return a *= c; }
    friend RealPoly operator*(Scalar c, RealPoly a) { return a *= c; }
    friend RealPoly operator/(RealPoly a, Scalar c) { return a /= c; }
    friend RealPoly operator*(const RealPoly& a, const RealPoly& b) {
        if (a.is_zero() || b.is_zero()) return RealPoly();
        std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RealPoly(std::move(out));
    }
    RealPoly& operator*=(const RealPoly& o) { return *this = *this * o; }

    bool operator==(const RealPoly&) const = default;

private:
    void trim() {
        while (coeffs_.size() > 1 && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
        if (coeffs_.empty()) coeffs_.push_back(Scalar(0));
    }

    std::vector<Scalar> coeffs_;
};

/// Companion matrix of the monic normalization of p (degree >= 1): ones on the
/// subdiagonal, -c_k / c_d in the last column.
template <typename Scalar>
DenseMatrix<Scalar> companion(const RealPoly<Scalar>& p) {
    const int d = p.degree();
    DenseMatrix<Scalar> c = DenseMatrix<Scalar>::Zero(d, d);
    for (int i = 1; i < d; ++i) c(i, i - 1) = Scalar(1);
    for (int k = 0; k < d; ++k) c(k, d - 1) = -p[k] / p.leading();
    return c;
}

namespace detail {

/// A few Newton steps on each root, accepted only while |p| strictly drops.
template <typename Scalar>
std::complex<Scalar> polish_root(const RealPoly<Scalar>& p, const RealPoly<Scalar>& dp,
                                 std::complex<Scalar> z) {
    using C = std::complex<Scalar>;
    Scalar best = std::abs(p(z));
    for (int step = 0; step < 8 && best > 0; ++step) {
        const C d = dp(z);
        if (d == C(0)) break;
        const C next = z - p(z) / d;
        const Scalar r = std::abs(p(next));
        if (!(r < best)) break;
        z = next;
        best = r;
    }
    return z;
}

template <typename Scalar>
RealPoly<Scalar> derivative(const RealPoly<Scalar>& p) {
    if (p.degree() <= 0) return RealPoly<Scalar>();
    std::vector<Scalar> d(p.degree());
    for (int k = 1; k <= p.degree(); ++k) d[k - 1] = Scalar(k) * p[k];
    return RealPoly<Scalar>(std::move(d));
}

}  // namespace detail

/// All complex roots of p (degree >= 1) as eigenvalues of its companion
/// matrix, each refined by guarded Newton steps. Exact zero low-order
/// coefficients are returned as exact zero roots.
template <typename Scalar>
ComplexSpectrum<Scalar> all_roots(const RealPoly<Scalar>& p, int iteration_factor = 30) {
    if (p.is_zero()) throw ZeroPolynomial();
    std::vector<std::complex<Scalar>> roots;
    int low = 0;
    while (p[low] == Scalar(0)) ++low;
    roots.assign(low, std::complex<Scalar>(0, 0));
    std::vector<Scalar> rest(p.coeffs().begin() + low, p.coeffs().end());
    RealPoly<Scalar> q(std::move(rest));
    if (q.degree() >= 1) {
        const auto dq = detail::derivative(q);
        for (const auto& z : eigenvalues(companion(q), iteration_factor)) {
            auto refined = detail::polish_root(q, dq, z);
            if (z.imag() == Scalar(0)) refined = {refined.real(), Scalar(0)};
            roots.push_back(refined);
        }
    }
    return ComplexSpectrum<Scalar>(std::move(roots));
}

template <typename Scalar>
struct RealRoot {
    Scalar root;
    int multiplicity;

    bool operator==(const RealRoot&) const = default;
};

/// Real roots of p in ascending order with multiplicities. Roots within
/// `cluster_tol * max(1, |r|)` of each other are merged first; a cluster is
/// real when its centroid passes the real-classification threshold, so a
/// multiple real root split into a conjugate pair by rounding is still found.
template <typename Scalar>
std::vector<RealRoot<Scalar>> real_roots(const RealPoly<Scalar>& p, Scalar cluster_tol = Scalar(1e-6),
                                         Scalar real_tol = Scalar(1e-8), int iteration_factor = 30) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (p.degree() == 0) return {};
    const auto roots = all_roots(p, iteration_factor);

    std::vector<std::vector<std::complex<Scalar>>> clusters;
    for (const auto& z : roots) {
        bool placed = false;
        for (auto& c : clusters) {
            for (const auto& member : c) {
                if (std::abs(member - z) <= cluster_tol * std::max(Scalar(1), std::abs(z))) {
                    c.push_back(z);
                    placed = true;
                    break;
                }
            }
            if (placed) break;
        }
        if (!placed) clusters.push_back({z});
    }

    std::vector<RealRoot<Scalar>> out;
    for (const auto& c : clusters) {
        std::complex<Scalar> centroid(0, 0);
        for (const auto& z : c) centroid += z;
        centroid /= Scalar(c.size());
        if (is_real(centroid, real_tol)) out.push_back({centroid.real(), static_cast<int>(c.size())});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
    return out;
}

}  // namespace tipforge
