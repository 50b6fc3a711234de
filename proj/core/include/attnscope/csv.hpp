#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace attnscope::csv {

/// Ten significant digits, "%.10g". Non-finite values print as an empty field.
std::string format_double(double value);
std::string format_double(std::optional<double> value);

/// Splits one CSV line on commas. Quoting is not supported; none of the
/// formats written by this library need it.
std::vector<std::string_view> split(std::string_view line, char sep = ',');

/// Strips a trailing '\r' so CRLF files read like LF files.
std::string_view chomp(std::string_view line);

}  // namespace attnscope::csv
