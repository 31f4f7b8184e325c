#include "pflab/format.hpp"

#include <cmath>
#include <cstdio>

namespace pflab {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0) v = 0;  // drop the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  return "[" + format_real(z.real()) + ", " + format_real(z.imag()) + "]";
}

}  // namespace pflab
