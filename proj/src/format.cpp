#include "entwitness/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace entwitness {

double round_significant(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.15g", x);
  return std::strtod(buffer, nullptr);
}

std::string format_fixed(double x, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", decimals, x);
  return buffer;
}

}  // namespace entwitness
