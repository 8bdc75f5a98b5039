/*
 * Copyright 2026 The ssg authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ssg/rational.hpp"

#include <stdexcept>

namespace ssg {

Rational rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational value(num, den);
    value.canonicalize();
    return value;
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    std::string num;
    std::string den = "1";
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        num = std::string(text);
    } else {
        num = std::string(text.substr(0, slash));
        den = std::string(text.substr(slash + 1));
    }
    auto is_integer = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!is_integer(num) || !is_integer(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rational value(n, d);
    value.canonicalize();
    return value;
}

std::string format_rational(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace ssg
