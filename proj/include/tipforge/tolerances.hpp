#pragma once

namespace tipforge {

/// Every numeric threshold used by the analyses, in one place. Defaults are
/// the values the test and acceptance suites pin.
struct Tolerances {
    /// An eigenvalue is real when |Im| <= real_classification * max(1, |lambda|).
    double real_classification = 1e-8;
    /// Roots closer than root_cluster * max(1, |root|) are merged into one
    /// root with multiplicity.
    double root_cluster = 1e-6;
    /// |Re lambda_max(M_sigma*)| below this counts as an exact zero crossing.
    double zero_eigenvalue = 1e-6;
    /// Offset past sigma* at which strict stability is probed.
    double stability_probe = 0.01;
    /// Relative magnitude below which a coefficient value has sign 0.
    double sign_zero = 1e-12;
    /// Rounding quantum of spectral-signature canonical keys.
    double canonical_key = 1e-6;
    /// QR sweeps allowed per eigenvalue are qr_iteration_factor * n.
    int qr_iteration_factor = 30;

    bool operator==(const Tolerances&) const = default;
};

}  // namespace tipforge
