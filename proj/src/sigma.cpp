#include "tipforge/sigma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tipforge/eigensolver.hpp"

namespace tipforge {

Poly charpoly(const Matrix& m) {
    require_square_finite(m);
    const int n = static_cast<int>(m.rows());
    std::vector<double> entries(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) entries[i * n + j] = m(i, j);
    return Poly(faddeev_leverrier(entries, n, 0.0, 1.0));
}

Poly SigmaCharPoly::at(double sigma) const {
    std::vector<double> c(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) c[i] = grid[i](sigma);
    return Poly(std::move(c));
}

SigmaCharPoly sigma_charpoly(const Matrix& a) {
    require_square_finite(a);
    const int n = static_cast<int>(a.rows());
    std::vector<Poly> entries(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) entries[i * n + j] = i == j ? Poly::monomial(1, a(i, j)) : Poly(a(i, j));
    return {n, faddeev_leverrier(entries, n, Poly(), Poly(1.0))};
}

OmegaSet omega(const SigmaCharPoly& scp, const Tolerances& tol) {
    OmegaSet out;
    out.per_coefficient.resize(scp.n);
    out.identically_zero.assign(scp.n, false);
    for (int i = 0; i < scp.n; ++i) {
        const Poly& p = scp.grid[i];
        if (p.is_zero()) {
            out.identically_zero[i] = true;
            continue;
        }
        out.per_coefficient[i] =
            real_roots(p, tol.root_cluster, tol.real_classification, tol.qr_iteration_factor);
        for (const auto& r : out.per_coefficient[i]) out.all.push_back(r.root);
    }
    std::sort(out.all.begin(), out.all.end());
    if (!out.all.empty()) out.maximum = out.all.back();
    return out;
}

ScalingRoute scaling_route(const Matrix& m, const Tolerances& tol) {
    const Matrix hollow = hollow_scale(m);
    ScalingRoute out{eigenvalues(hollow, tol.qr_iteration_factor), {}};
    out.lambda_max = max_real_part(out.spectrum).witness;
    return out;
}

R0Equivalence verify_r0_equivalence(const Matrix& m) {
    require_square_finite(m);
    require_negative_diagonal(m);
    R0Equivalence out;
    out.factor = 1;
    for (Eigen::Index i = 0; i < m.rows(); ++i) out.factor *= -m(i, i);
    out.r0 = sigma_charpoly(m).grid[0];
    out.hollow_charpoly = charpoly(hollow_scale(m));
    const std::size_t len = std::max(out.r0.coeffs().size(), out.hollow_charpoly.coeffs().size());
    double worst = 0;
    for (std::size_t k = 0; k < len; ++k)
        worst = std::max(worst, std::abs(out.r0[k] - out.factor * out.hollow_charpoly[k]));
    out.residual = worst / std::max(1.0, out.r0.norm_inf());
    return out;
}

DominantCycleBreakdown dominant_cycles(const Matrix& m, double sigma_star) {
    if (!std::isfinite(sigma_star)) throw std::invalid_argument("sigma* must be finite");
    const Poly r0 = sigma_charpoly(m).grid[0];
    DominantCycleBreakdown out;
    for (int j = 0; j <= r0.degree(); ++j) {
        if (r0[j] == 0) continue;
        out.terms.push_back({j, r0[j], r0[j] * std::pow(sigma_star, j)});
    }
    std::stable_sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) {
        if (std::abs(a.contribution) != std::abs(b.contribution))
            return std::abs(a.contribution) > std::abs(b.contribution);
        return a.power > b.power;
    });
    for (const auto& t : out.terms) out.total += t.contribution;
    return out;
}

std::vector<int> sign_profile(const Matrix& a, double sigma, const Tolerances& tol) {
    const SigmaCharPoly scp = sigma_charpoly(a);
    std::vector<int> out;
    out.reserve(scp.grid.size());
    for (const Poly& p : scp.grid) {
        const double v = p(sigma);
        if (std::abs(v) <= tol.sign_zero * p.norm_inf())
            out.push_back(0);
        else
            out.push_back(v > 0 ? 1 : -1);
    }
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::SigmaStable: return "SigmaStable";
        case Verdict::DegenerateComplexBranch: return "DegenerateComplexBranch";
        case Verdict::DegeneratePositiveResidual: return "DegeneratePositiveResidual";
        case Verdict::NotApplicable: return "NotApplicable";
    }
    return "NotApplicable";
}

Verdict verdict_from_string(const std::string& s) {
    for (Verdict v : {Verdict::SigmaStable, Verdict::DegenerateComplexBranch,
                      Verdict::DegeneratePositiveResidual, Verdict::NotApplicable})
        if (to_string(v) == s) return v;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

SigmaReport stabilize(const Matrix& m, const Tolerances& tol) {
    require_square_finite(m);
    require_negative_diagonal(m);
    SigmaReport r;
    r.n = static_cast<int>(m.rows());
    r.grid = sigma_charpoly(m);
    r.omega = omega(r.grid, tol);
    r.sigma_star_omega = r.omega.maximum;

    const ScalingRoute scaling = scaling_route(m, tol);
    r.scaling_spectrum = scaling.spectrum;
    r.scaling_lambda_max = scaling.lambda_max;
    const bool scaling_real = is_real(scaling.lambda_max, tol.real_classification);
    if (scaling_real) r.sigma_star_scaling = scaling.lambda_max.real();
    if (r.sigma_star_omega && r.sigma_star_scaling)
        r.route_gap = std::abs(*r.sigma_star_omega - *r.sigma_star_scaling);

    const R0Equivalence eq = verify_r0_equivalence(m);
    r.r0_factor = eq.factor;
    r.r0_residual = eq.residual;

    if (r.sigma_star_omega) {
        const double star = *r.sigma_star_omega;
        auto lambda_max_at = [&](double sigma) {
            return max_real_part(eigenvalues(diagonal_force(m, sigma), tol.qr_iteration_factor)).value;
        };
        r.lambda_max_at_star = lambda_max_at(star);
        r.lambda_max_past_star = lambda_max_at(star + tol.stability_probe);
    }

    if (r.lambda_max_at_star && std::abs(*r.lambda_max_at_star) <= tol.zero_eigenvalue &&
        *r.lambda_max_past_star < 0) {
        r.verdict = Verdict::SigmaStable;
        r.dominant_cycles = dominant_cycles(m, *r.sigma_star_omega);
    } else if (!scaling_real) {
        r.verdict = Verdict::DegenerateComplexBranch;
    } else if (r.lambda_max_at_star && *r.lambda_max_at_star > tol.zero_eigenvalue) {
        r.verdict = Verdict::DegeneratePositiveResidual;
    } else {
        r.verdict = Verdict::NotApplicable;
    }
    return r;
}

}  // namespace tipforge
