#include "tipforge/signature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "tipforge/eigensolver.hpp"

namespace tipforge {

std::string to_string(SignatureMode mode) {
    return mode == SignatureMode::Plain ? "plain" : "hollow-scaled";
}

SignatureMode signature_mode_from_string(const std::string& s) {
    if (s == "plain") return SignatureMode::Plain;
    if (s == "hollow-scaled") return SignatureMode::HollowScaled;
    throw std::invalid_argument("unknown signature mode '" + s + "' (expected plain or hollow-scaled)");
}

MatrixPolynomial matrix_polynomial(const SignPattern& p, SignatureMode mode) {
    SignPattern source = p;
    if (mode == SignatureMode::HollowScaled) {
        for (int i = 0; i < p.n(); ++i)
            if (p(i, i) >= 0) throw NonNegativeDiagonal(i, p(i, i));
        source = p.hollowed();
    }
    MatrixPolynomial mp{p.n(), p.n(), {}};
    mp.coefficients.reserve(p.n());
    for (int i = 0; i < p.n(); ++i) mp.coefficients.push_back(weight_matrices(source, i).diff);
    return mp;
}

Matrix block_companion(const MatrixPolynomial& mp) {
    const int n = mp.n;
    const int d = mp.degree;
    Matrix c = Matrix::Zero(n * d, n * d);
    for (int b = 0; b + 1 < d; ++b) c.block(b * n, (b + 1) * n, n, n).setIdentity();
    for (int b = 0; b < d; ++b)
        c.block((d - 1) * n, b * n, n, n) = -mp.coefficients[b].cast<double>();
    return c;
}

CanonicalKey canonical_key(const ComplexSpectrum<double>& s, double quantum) {
    CanonicalKey key{quantum, {}};
    key.values.reserve(s.size());
    for (const auto& z : s)
        key.values.emplace_back(std::llround(z.real() / quantum), std::llround(z.imag() / quantum));
    std::sort(key.values.begin(), key.values.end());
    return key;
}

double key_distance(const CanonicalKey& a, const CanonicalKey& b) {
    if (a.values.size() != b.values.size()) return std::numeric_limits<double>::infinity();
    std::int64_t worst = 0;
    for (std::size_t k = 0; k < a.values.size(); ++k) {
        worst = std::max(worst, std::abs(a.values[k].first - b.values[k].first));
        worst = std::max(worst, std::abs(a.values[k].second - b.values[k].second));
    }
    return static_cast<double>(worst) * a.quantum;
}

SpectralSignature spectral_signature(const SignPattern& p, SignatureMode mode, const Tolerances& tol) {
    SpectralSignature s;
    s.pattern = p;
    s.mode = mode;
    s.polynomial = matrix_polynomial(p, mode);
    s.spectrum = eigenvalues(block_companion(s.polynomial), tol.qr_iteration_factor);
    s.lambda_max = max_real_part(s.spectrum);
    s.key = canonical_key(s.spectrum, tol.canonical_key);
    return s;
}

SignPattern census_pattern(int n, std::int64_t index) {
    std::vector<int> signs(n * n);
    for (int k = n * n - 1; k >= 0; --k) {
        signs[k] = static_cast<int>(index % 3) - 1;
        index /= 3;
    }
    // digit 0 -> -1, 1 -> 0, 2 -> +1
    return {n, std::move(signs)};
}

CensusResult census(int n, const Tolerances& tol, int threads) {
    if (n > kMaxCensusOrder)
        throw BudgetExceeded("census supports n <= " + std::to_string(kMaxCensusOrder) + ", got " +
                             std::to_string(n));
    if (n < 1) throw std::invalid_argument("census order must be positive");
    std::int64_t count = 1;
    for (int k = 0; k < n * n; ++k) count *= 3;

    struct Entry {
        CanonicalKey key;
        double lambda_max = 0;
    };
    std::vector<Entry> entries(count);
    auto work = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            const SpectralSignature s = spectral_signature(census_pattern(n, i), SignatureMode::Plain, tol);
            entries[i] = {s.key, s.lambda_max.value};
        }
    };
    threads = std::max(1, threads);
    if (threads == 1) {
        work(0, count);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        const std::int64_t chunk = (count + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::int64_t begin = std::min(count, t * chunk);
            const std::int64_t end = std::min(count, begin + chunk);
            pool.emplace_back([&, t, begin, end] {
                try {
                    work(begin, end);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    // Merge in pattern-index order so the result never depends on scheduling.
    CensusResult r;
    r.n = n;
    r.pattern_count = count;
    std::map<CanonicalKey, std::size_t> by_key;
    std::map<std::int64_t, std::int64_t> by_max;
    for (std::int64_t i = 0; i < count; ++i) {
        const Entry& e = entries[i];
        auto [it, inserted] = by_key.try_emplace(e.key, r.cospectral_classes.size());
        if (inserted) r.cospectral_classes.push_back({e.key, e.lambda_max, {}});
        r.cospectral_classes[it->second].members.push_back(census_pattern(n, i));
        ++by_max[std::llround(e.lambda_max / tol.canonical_key)];
    }
    std::sort(r.cospectral_classes.begin(), r.cospectral_classes.end(),
              [](const auto& a, const auto& b) { return a.key < b.key; });
    for (const auto& [units, members] : by_max)
        r.comaximal_classes.push_back({static_cast<double>(units) * tol.canonical_key, members});

    const std::int64_t min_units = by_max.begin()->first;
    r.minimum_lambda_max = static_cast<double>(min_units) * tol.canonical_key;
    for (std::int64_t i = 0; i < count; ++i)
        if (std::llround(entries[i].lambda_max / tol.canonical_key) == min_units)
            r.minimum_members.push_back(census_pattern(n, i));

    for (std::size_t a = 0; a < r.cospectral_classes.size(); ++a)
        for (std::size_t b = a + 1; b < r.cospectral_classes.size(); ++b) {
            const double d = key_distance(r.cospectral_classes[a].key, r.cospectral_classes[b].key);
            r.min_key_separation = std::min(r.min_key_separation.value_or(d), d);
        }
    if (n == 2 && r.min_key_separation && *r.min_key_separation <= kCensusSeparationAudit)
        throw AuditFailure("two cospectral classes differ by only " + std::to_string(*r.min_key_separation));
    return r;
}

}  // namespace tipforge
