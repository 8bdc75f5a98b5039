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

#ifndef SSG_RATIONAL_HPP
#define SSG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ssg {

/**
 * Exact rational arithmetic with unbounded integers, backed by GMP.
 * All values handled by the solvers are kept in lowest terms with a
 * positive denominator; mpq_class arithmetic preserves that form.
 */
using Rational = mpq_class;

/** Builds the canonical rational num/den. Throws std::invalid_argument if den == 0. */
Rational rational(long num, long den = 1);

/** Parses "num/den" or a bare integer "num". Throws std::invalid_argument on bad syntax. */
Rational parse_rational(std::string_view text);

/** Serializes as "num/den", denominator always present ("1/2", "0/1", "1/1"). */
std::string format_rational(const Rational& value);

}  // namespace ssg

#endif
