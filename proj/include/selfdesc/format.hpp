#pragma once

// Text formatting shared by the CLI and the tests: 12 significant digits for
// reals, "num/den" for rationals, and count parsing that accepts "1e8".

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "selfdesc/director.hpp"

namespace selfdesc {

inline std::string fmt_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// Parses a nonnegative integer count, allowing scientific notation when the
/// value is integral ("1e8", "2.5e3").
inline std::uint64_t parse_count(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw ValidationError("empty count");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == 'e' || c == 'E' || c == '.' || c == '+'))
            throw ValidationError("invalid count '" + s + "'");
    }
    if (s.find_first_of("eE.") == std::string::npos) {
        errno = 0;
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
        if (errno != 0 || *end != '\0') throw ValidationError("invalid count '" + s + "'");
        if (v > static_cast<unsigned long long>(INT64_MAX)) throw ValidationError("count exceeds 2^63-1");
        return v;
    }
    char* end = nullptr;
    const long double v = std::strtold(s.c_str(), &end);
    if (*end != '\0' || !std::isfinite(v)) throw ValidationError("invalid count '" + s + "'");
    if (v != std::floor(v)) throw ValidationError("count '" + s + "' is not an integer");
    if (v > static_cast<long double>(INT64_MAX)) throw ValidationError("count exceeds 2^63-1");
    return static_cast<std::uint64_t>(v);
}

/// Comma-separated list of counts.
inline std::vector<std::uint64_t> parse_count_list(std::string_view text) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_count(text.substr(pos, stop - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline std::string word_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter c : w) s.push_back(static_cast<char>('0' + c));
    return s;
}

}  // namespace selfdesc
