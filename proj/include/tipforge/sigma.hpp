#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"
#include "spectrum.hpp"
#include "tolerances.hpp"

namespace tipforge {

using Poly = RealPoly<double>;
using Spectrum = ComplexSpectrum<double>;

/// Coefficients c_0..c_n of det(xI - A) by the Faddeev-LeVerrier recurrence
///   M_k = A M_{k-1} + c_{n-k+1} I,   c_{n-k} = -tr(A M_k) / k,
/// over any commutative ring that supports +, *, and division by an integer.
/// `entries` is row-major n*n; `zero`/`one` are the ring identities.
template <typename Ring>
std::vector<Ring> faddeev_leverrier(const std::vector<Ring>& entries, int n, const Ring& zero,
                                    const Ring& one) {
    std::vector<Ring> c(n + 1, zero);
    c[n] = one;
    std::vector<Ring> m(n * n, zero);
    std::vector<Ring> am(n * n, zero);
    for (int k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I, reusing am = A M_{k-1} from the previous step.
        for (int i = 0; i < n * n; ++i) m[i] = am[i];
        for (int i = 0; i < n; ++i) m[i * n + i] = m[i * n + i] + c[n - k + 1];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Ring acc = zero;
                for (int l = 0; l < n; ++l) acc = acc + entries[i * n + l] * m[l * n + j];
                am[i * n + j] = acc;
            }
        Ring trace = zero;
        for (int i = 0; i < n; ++i) trace = trace + am[i * n + i];
        c[n - k] = (zero - trace) / static_cast<double>(k);
    }
    return c;
}

/// Monic characteristic polynomial det(xI - M).
Poly charpoly(const Matrix& m);

/// Characteristic polynomial of the diagonally forced matrix A_sigma with
/// every x^i coefficient kept as a polynomial p_i(sigma) of degree <= n - i.
struct SigmaCharPoly {
    int n = 0;
    std::vector<Poly> grid;  ///< grid[i] = p_i(sigma), i = 0..n; grid[n] == 1

    /// Characteristic polynomial in x at a fixed sigma.
    Poly at(double sigma) const;

    bool operator==(const SigmaCharPoly&) const = default;
};

SigmaCharPoly sigma_charpoly(const Matrix& a);

/// Real roots of the sigma-coefficients p_0..p_{n-1}.
struct OmegaSet {
    std::vector<std::vector<RealRoot<double>>> per_coefficient;  ///< index i = coefficient of x^i
    std::vector<bool> identically_zero;  ///< p_i == 0 contributes nothing
    std::vector<double> all;             ///< one entry per distinct root per coefficient, ascending
    std::optional<double> maximum;

    bool operator==(const OmegaSet&) const = default;
};

OmegaSet omega(const SigmaCharPoly& scp, const Tolerances& tol = {});

struct ScalingRoute {
    Spectrum spectrum;  ///< spectrum of the hollow-scaled matrix
    std::complex<double> lambda_max;

    bool operator==(const ScalingRoute&) const = default;
};

/// Spectrum of hollow_scale(M) and its maximal-real-part eigenvalue. Every
/// real eigenvalue is a sigma at which M_sigma is singular.
ScalingRoute scaling_route(const Matrix& m, const Tolerances& tol = {});

struct R0Equivalence {
    double factor;    ///< det(|D_M|)
    double residual;  ///< max_k |r_0[k] - factor * charpoly(hollow)[k]| / max(1, |r_0|_inf)
    Poly r0;
    Poly hollow_charpoly;

    bool operator==(const R0Equivalence&) const = default;
};

/// Checks that the sigma-constant coefficient r_0 of the forced characteristic
/// polynomial is det(|D_M|) times the characteristic polynomial of the
/// hollow-scaled matrix.
R0Equivalence verify_r0_equivalence(const Matrix& m);

struct CycleContribution {
    int power;
    double coefficient;
    double contribution;

    bool operator==(const CycleContribution&) const = default;
};

struct DominantCycleBreakdown {
    std::vector<CycleContribution> terms;  ///< sorted by |contribution| descending, then power descending
    double total = 0;

    bool operator==(const DominantCycleBreakdown&) const = default;
};

/// Per-power split of r_0(sigma*) = sum_j s_{0,j} sigma*^j.
DominantCycleBreakdown dominant_cycles(const Matrix& m, double sigma_star);

/// Signs (-1, 0, +1) of p_0(sigma) .. p_n(sigma); zero when
/// |p_i(sigma)| <= sign_zero * |p_i|_inf.
std::vector<int> sign_profile(const Matrix& a, double sigma, const Tolerances& tol = {});

enum class Verdict { SigmaStable, DegenerateComplexBranch, DegeneratePositiveResidual, NotApplicable };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct SigmaReport {
    int n = 0;
    SigmaCharPoly grid;
    OmegaSet omega;
    std::optional<double> sigma_star_omega;
    std::optional<double> sigma_star_scaling;  ///< present only when lambda_max of the hollow matrix is real
    Spectrum scaling_spectrum;
    std::complex<double> scaling_lambda_max;
    std::optional<double> lambda_max_at_star;    ///< Re lambda_max(M_{sigma*})
    std::optional<double> lambda_max_past_star;  ///< Re lambda_max(M_{sigma* + probe})
    Verdict verdict = Verdict::NotApplicable;
    DominantCycleBreakdown dominant_cycles;
    double r0_factor = 0;
    double r0_residual = 0;
    std::optional<double> route_gap;  ///< |sigma_star_omega - sigma_star_scaling|

    bool operator==(const SigmaReport&) const = default;
};

/// Both tipping-point routes, the stability probe at sigma*, and the verdict.
SigmaReport stabilize(const Matrix& m, const Tolerances& tol = {});

}  // namespace tipforge
