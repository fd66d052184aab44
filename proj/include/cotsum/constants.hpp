#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cotsum::constants {

// Named high-precision constants: gamma, log_two_pi, zeta2, zeta3, zeta4.
// Values are embedded as 40-significant-digit decimal strings (regenerated
// by scripts/gen_constants.py) and parsed once at startup.

// Constant at working (double) precision. Throws std::invalid_argument for
// an unknown name.
double get(std::string_view name);

// The embedded decimal string, byte-for-byte.
const std::string& digits(std::string_view name);

std::vector<std::string> names();

}  // namespace cotsum::constants
