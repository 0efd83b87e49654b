#include "gaugelens/format.hpp"

#include "gaugelens/error.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace gaugelens {

std::string format_g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

double parse_finite_double(const std::string& text, const std::string& context) {
    if (text.empty()) throw ParseError(context + ": empty numeric field");
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size())
        throw ParseError(context + ": invalid number '" + text + "'");
    if (!std::isfinite(v))
        throw ParseError(context + ": non-finite value '" + text + "'");
    return v;
}

long parse_long(const std::string& text, const std::string& context) {
    if (text.empty()) throw ParseError(context + ": empty integer field");
    char* end = nullptr;
    const long v = std::strtol(text.c_str(), &end, 10);
    if (end != text.c_str() + text.size())
        throw ParseError(context + ": invalid integer '" + text + "'");
    return v;
}

} // namespace gaugelens
