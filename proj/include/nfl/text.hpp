#pragma once

#include <string>
#include <string_view>

namespace nfl {

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

/// Parses a full string as a double. Throws std::invalid_argument unless the
/// whole input is consumed.
double parse_double(std::string_view text);

}  // namespace nfl
