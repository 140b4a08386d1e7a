#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <utility>
#include <vector>

namespace tipforge {

/// True when lambda passes the real-eigenvalue threshold
/// |Im lambda| <= tol * max(1, |lambda|).
template <typename Scalar>
bool is_real(const std::complex<Scalar>& lambda, Scalar tol = Scalar(1e-8)) {
    using std::abs;
    return abs(lambda.imag()) <= tol * std::max(Scalar(1), abs(lambda));
}

/// Eigenvalue multiset kept in a canonical order: descending real part, then
/// descending |imag|, then positive imaginary part first.
template <typename Scalar>
class ComplexSpectrum {
public:
    using value_type = std::complex<Scalar>;

    ComplexSpectrum() = default;
    explicit ComplexSpectrum(std::vector<value_type> values) : values_(std::move(values)) {
        std::sort(values_.begin(), values_.end(), order);
    }

    const std::vector<value_type>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    const value_type& operator[](std::size_t i) const { return values_[i]; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    bool operator==(const ComplexSpectrum&) const = default;

    static bool order(const value_type& a, const value_type& b) {
        using std::abs;
        if (a.real() != b.real()) return a.real() > b.real();
        if (abs(a.imag()) != abs(b.imag())) return abs(a.imag()) > abs(b.imag());
        return a.imag() > b.imag();
    }

private:
    std::vector<value_type> values_;
};

template <typename Scalar>
struct MaxRealPart {
    Scalar value;
    std::complex<Scalar> witness;

    bool operator==(const MaxRealPart&) const = default;
};

/// Largest real part and an eigenvalue attaining it. Among eigenvalues whose
/// real parts tie (within a few ulps of the scale), the one with the smallest
/// |imag| wins, then the one with non-negative imag.
template <typename Scalar>
MaxRealPart<Scalar> max_real_part(const ComplexSpectrum<Scalar>& s) {
    using std::abs;
    Scalar best = s[0].real();
    for (const auto& v : s) best = std::max(best, v.real());
    const Scalar tie = Scalar(64) * std::numeric_limits<Scalar>::epsilon() *
                       std::max(Scalar(1), abs(best));
    std::complex<Scalar> witness = s[0];
    bool found = false;
    for (const auto& v : s) {
        if (best - v.real() > tie) continue;
        if (!found || abs(v.imag()) < abs(witness.imag()) ||
            (abs(v.imag()) == abs(witness.imag()) && v.imag() > witness.imag())) {
            witness = v;
            found = true;
        }
    }
    return {witness.real(), witness};
}

}  // namespace tipforge
