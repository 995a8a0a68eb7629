// Copyright 2026 The catprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CATPROB_RATIONAL_HPP
#define CATPROB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace catprob {

// Exact arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

// Parses "p/q", "p" or a terminating decimal such as "0.125".
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational &r);

// n/d in lowest terms. Prefer this over the two-argument mpq_class
// constructor, which leaves the fraction uncanonicalized.
inline Rational make_rational(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline bool in_unit_interval(const Rational &r) { return r >= 0 && r <= 1; }

} // namespace catprob

#endif // CATPROB_RATIONAL_HPP
