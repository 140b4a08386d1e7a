#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cycles.hpp"
#include "linalg.hpp"
#include "spectrum.hpp"
#include "tolerances.hpp"

namespace tipforge {

enum class SignatureMode { Plain, HollowScaled };

std::string to_string(SignatureMode mode);
SignatureMode signature_mode_from_string(const std::string& s);

/// Monic matrix polynomial x^d I + A_{d-1} x^{d-1} + ... + A_0; the identity
/// leading block is implicit.
struct MatrixPolynomial {
    int n = 0;       ///< block size
    int degree = 0;  ///< d
    std::vector<IntMatrix> coefficients;  ///< A_0 .. A_{d-1}

    bool operator==(const MatrixPolynomial&) const = default;
};

/// A_i = w_plus - w_minus of the x^i terms, i = 0..n-1. HollowScaled first
/// zeroes the (necessarily negative) diagonal of the pattern.
MatrixPolynomial matrix_polynomial(const SignPattern& p, SignatureMode mode);

/// (n d) x (n d) linearization: identity blocks on the block superdiagonal and
/// -A_0 ... -A_{d-1} along the last block row.
Matrix block_companion(const MatrixPolynomial& mp);

/// Eigenvalues rounded to a fixed quantum, stored as integer multiples of it
/// and sorted; equal keys mean equal spectra up to the quantum.
struct CanonicalKey {
    double quantum = 1e-6;
    std::vector<std::pair<std::int64_t, std::int64_t>> values;

    bool operator==(const CanonicalKey& o) const { return values == o.values; }
    auto operator<=>(const CanonicalKey& o) const { return values <=> o.values; }
};

CanonicalKey canonical_key(const ComplexSpectrum<double>& s, double quantum);

/// max over aligned entries of the key difference, in value units; infinity
/// when sizes differ.
double key_distance(const CanonicalKey& a, const CanonicalKey& b);

struct SpectralSignature {
    SignPattern pattern;
    SignatureMode mode = SignatureMode::Plain;
    MatrixPolynomial polynomial;
    ComplexSpectrum<double> spectrum;
    MaxRealPart<double> lambda_max{0, {}};
    CanonicalKey key;

    bool operator==(const SpectralSignature&) const = default;
};

SpectralSignature spectral_signature(const SignPattern& p, SignatureMode mode, const Tolerances& tol = {});

struct CospectralClass {
    CanonicalKey key;
    double lambda_max = 0;
    std::vector<SignPattern> members;

    bool operator==(const CospectralClass&) const = default;
};

struct ComaximalClass {
    double lambda_max = 0;  ///< rounded to the key quantum
    std::int64_t member_count = 0;

    bool operator==(const ComaximalClass&) const = default;
};

struct CensusResult {
    int n = 0;
    std::int64_t pattern_count = 0;
    std::vector<CospectralClass> cospectral_classes;  ///< ordered by key
    std::vector<ComaximalClass> comaximal_classes;    ///< ascending lambda_max
    double minimum_lambda_max = 0;
    std::vector<SignPattern> minimum_members;
    std::optional<double> min_key_separation;  ///< smallest key_distance between distinct classes

    bool operator==(const CensusResult&) const = default;
};

/// Largest order for which an exhaustive census runs.
inline constexpr int kMaxCensusOrder = 3;

/// Separation below which two distinct cospectral classes at n = 2 are
/// treated as a grouping failure.
inline constexpr double kCensusSeparationAudit = 1e-3;

/// Plain-mode signatures of all 3^(n^2) sign patterns grouped into cospectral
/// and comaximal classes. Output is independent of `threads`.
CensusResult census(int n, const Tolerances& tol = {}, int threads = 1);

/// The i-th sign pattern of order n in census order (base-3 digits over
/// row-major entries, digit 0 -> '-', 1 -> '0', 2 -> '+').
SignPattern census_pattern(int n, std::int64_t index);

}  // namespace tipforge
