#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "klspecht/tableaux.hpp"

namespace klspecht::detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

inline int parse_int(std::string_view s, std::string_view what) {
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("malformed " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return value;
}

inline std::vector<int> parse_int_list(std::string_view s, std::string_view what) {
    std::vector<int> out;
    for (auto piece : split(s, ',')) out.push_back(parse_int(piece, what));
    return out;
}

template <typename Range>
std::string join(const Range& values, std::string_view sep) {
    std::string out;
    bool first = true;
    for (const auto& v : values) {
        if (!first) out += sep;
        out += std::to_string(v);
        first = false;
    }
    return out;
}

}  // namespace klspecht::detail
