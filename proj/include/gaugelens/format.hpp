#pragma once

#include <string>

namespace gaugelens {

// 17 significant digits: enough to round-trip any finite double exactly.
std::string format_g17(double value);

// Strict double parse; throws ParseError on trailing garbage or
// non-finite values.
double parse_finite_double(const std::string& text, const std::string& context);

long parse_long(const std::string& text, const std::string& context);

} // namespace gaugelens
