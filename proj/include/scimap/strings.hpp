#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace scimap {

std::string trim(std::string_view s);
std::string collapse_whitespace(std::string_view s);
std::string lower_ascii(std::string_view s);
std::string upper_ascii(std::string_view s);
bool starts_with(std::string_view s, std::string_view prefix);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Folds common accented Latin characters (UTF-8) to their ASCII base letter.
// Bytes it cannot map are passed through unchanged.
std::string ascii_fold(std::string_view s);

// Locale-independent numeric formatting with a fixed number of decimals.
std::string format_fixed(double v, int decimals);

bool parse_long(std::string_view s, long long& out);

} // namespace scimap
