#pragma once

#include <charconv>
#include <string>

namespace baton::detail {

// Shortest decimal that parses back to the same double.
inline std::string shortest(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

inline std::string fixed(double v, int precision = 3) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
    std::string out(buf, r.ptr);
    // "-0.000" and "0.000" must render identically.
    if (out.find_first_not_of("-0.") == std::string::npos && out.front() == '-') {
        out.erase(0, 1);
    }
    return out;
}

} // namespace baton::detail
