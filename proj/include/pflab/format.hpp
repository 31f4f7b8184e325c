#pragma once

#include <complex>
#include <string>

namespace pflab {

/// Fixed-precision decimal rendering used in every report, e.g. "3.1415926535897931e+00".
std::string format_real(double v);
/// "[re, im]"
std::string format_complex(std::complex<double> z);

}  // namespace pflab
