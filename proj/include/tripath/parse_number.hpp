// Copyright 2026 The tripath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>

#include "tripath/errors.hpp"

namespace tripath {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

inline double parse_decimal(std::string_view s, const std::string &what) {
    double value = 0.0;
    const char *first = s.data();
    const char *last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("cannot parse '" + std::string(s) + "' as " + what);
    }
    return value;
}

} // namespace detail

/**
 * Parses a real number given either as a decimal ("0.25") or as an
 * exact integer fraction ("1/4", sign on the numerator). Fractions are
 * evaluated as one double division, so "1/3" equals the double 1.0/3.0.
 */
inline double parse_real(std::string_view text) {
    const std::string_view s = detail::trim(text);
    if (s.empty()) {
        throw ParseError("empty numeric value");
    }
    const std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        return detail::parse_decimal(s, "a real number");
    }
    const std::string_view num_s = detail::trim(s.substr(0, slash));
    const std::string_view den_s = detail::trim(s.substr(slash + 1));
    if (num_s.empty() || den_s.empty() || den_s.find('/') != std::string_view::npos) {
        throw ParseError("cannot parse '" + std::string(s) + "' as a fraction");
    }
    long long num = 0;
    long long den = 0;
    {
        const auto [ptr, ec] = std::from_chars(num_s.data(), num_s.data() + num_s.size(), num);
        if (ec != std::errc{} || ptr != num_s.data() + num_s.size()) {
            throw ParseError("cannot parse fraction numerator in '" + std::string(s) + "'");
        }
    }
    {
        const auto [ptr, ec] = std::from_chars(den_s.data(), den_s.data() + den_s.size(), den);
        if (ec != std::errc{} || ptr != den_s.data() + den_s.size()) {
            throw ParseError("cannot parse fraction denominator in '" + std::string(s) + "'");
        }
    }
    if (den == 0) {
        throw ParseError("fraction '" + std::string(s) + "' has a zero denominator");
    }
    return static_cast<double>(num) / static_cast<double>(den);
}

} // namespace tripath
