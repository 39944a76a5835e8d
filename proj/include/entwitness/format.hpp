#pragma once

#include <string>

namespace entwitness {

// x rounded to 15 significant digits, so JSON output does not carry
// last-bit noise.
double round_significant(double x);

// Fixed-point with `decimals` digits, "C" locale.
std::string format_fixed(double x, int decimals);

}  // namespace entwitness
