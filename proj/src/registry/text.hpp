#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bidik::registry {

std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);
std::vector<std::string> split(std::string_view s, char delimiter);

/// Whole-string parses; leading/trailing blanks are ignored.
std::optional<double> parse_double(std::string_view s);
std::optional<int> parse_int(std::string_view s);

}  // namespace bidik::registry
