// Copyright 2026 The fermap Authors.

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <charconv>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "fermap/error.hpp"

namespace fermap::text {

/// Splits on any run of spaces/tabs.
inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

/// Drops a trailing '\r' and everything from the first '#'.
inline std::string_view strip_line(std::string_view line) {
    if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    return line;
}

/// Iterates lines of a buffer, handing (1-based line number, stripped content) to `fn` for
/// every line that is not blank after stripping.
template <typename Fn> void for_each_line(std::string_view text, Fn &&fn) {
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++lineno;
        auto line = strip_line(text.substr(pos, end - pos));
        if (!split_ws(line).empty()) fn(lineno, line);
        if (end == text.size()) break;
        pos = end + 1;
    }
}

inline std::optional<double> parse_double(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

inline std::optional<std::uint32_t> parse_index(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

/// `<re>` or `<re>,<im>`.
inline std::optional<std::complex<double>> parse_coefficient(std::string_view s) {
    auto comma = s.find(',');
    if (comma == std::string_view::npos) {
        auto re = parse_double(s);
        if (!re) return std::nullopt;
        return std::complex<double>{*re, 0.0};
    }
    auto re = parse_double(s.substr(0, comma));
    auto im = parse_double(s.substr(comma + 1));
    if (!re || !im) return std::nullopt;
    return std::complex<double>{*re, *im};
}

/// Shortest round-trip representation when `decimals` is empty, fixed-point otherwise.
inline std::string format_real(double value, std::optional<int> decimals = std::nullopt) {
    if (value == 0.0) value = 0.0; // folds -0.0
    char buf[64];
    auto res = decimals ? std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, *decimals)
                        : std::to_chars(buf, buf + sizeof buf, value);
    std::string out(buf, res.ptr);
    if (decimals && out.find_first_not_of("-0.") == std::string::npos && out.front() == '-')
        out.erase(0, 1);
    return out;
}

inline std::string format_coefficient(std::complex<double> c, std::optional<int> decimals = std::nullopt) {
    std::string out = format_real(c.real(), decimals);
    if (c.imag() != 0.0) {
        auto im = format_real(c.imag(), decimals);
        if (!decimals || im.find_first_not_of("-0.") != std::string::npos) out += "," + im;
    }
    return out;
}

} // namespace fermap::text
