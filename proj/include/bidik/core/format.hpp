#pragma once

#include <string>

namespace bidik {

/// Shortest decimal text that reads back to the same double ("60", "0.25", "1500000").
std::string format_number(double value);

/// Fixed-point text with the given number of decimals.
std::string format_fixed(double value, int decimals);

}  // namespace bidik
