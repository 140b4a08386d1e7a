#pragma once

#include <string>

#include "spectrum.hpp"

namespace tipforge {

/// Complex-plane scatter of a spectrum as a standalone SVG 1.1 document:
/// real/imaginary axes, a dashed unit-circle guide, and one
/// `<circle class="marker">` per eigenvalue.
std::string spectrum_svg(const ComplexSpectrum<double>& spectrum, const std::string& title);

/// RFC 4180 CSV with header `re,im`, one row per eigenvalue.
std::string spectrum_csv(const ComplexSpectrum<double>& spectrum);

}  // namespace tipforge
