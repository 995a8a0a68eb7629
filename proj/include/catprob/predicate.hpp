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

#ifndef CATPROB_PREDICATE_HPP
#define CATPROB_PREDICATE_HPP

#include "catprob/finite_set.hpp"
#include "catprob/kleisli.hpp"
#include "catprob/rational.hpp"

#include <functional>
#include <ostream>
#include <vector>

namespace catprob {

// A fuzzy predicate p in [0,1]^X. Stored totally, zeros included, in the
// carrier's declaration order.
class Predicate {
public:
  // Throws SetMismatch on a size mismatch, InvalidPredicate on a value
  // outside [0,1].
  Predicate(FiniteSet carrier, std::vector<Rational> values);

  static Predicate constant(FiniteSet carrier, const Rational &value);
  static Predicate truth(FiniteSet carrier) { return constant(std::move(carrier), 1); }
  static Predicate falsity(FiniteSet carrier) { return constant(std::move(carrier), 0); }
  static Predicate from_function(FiniteSet carrier,
                                 const std::function<Rational(const Label &)> &p);

  const FiniteSet &carrier() const noexcept { return carrier_; }
  const std::vector<Rational> &values() const noexcept { return values_; }
  const Rational &value(std::size_t i) const { return values_.at(i); }
  const Rational &operator()(const Label &x) const;

  // Equality of functions X -> [0,1]; declaration order is irrelevant.
  friend bool operator==(const Predicate &a, const Predicate &b);

private:
  FiniteSet carrier_;
  std::vector<Rational> values_;
};

std::ostream &operator<<(std::ostream &os, const Predicate &p);

// p (+) q, defined only when p(x) + q(x) <= 1 everywhere. Throws
// UndefinedSum otherwise.
Predicate ovee(const Predicate &p, const Predicate &q);
bool ovee_defined(const Predicate &p, const Predicate &q);

// p^perp(x) = 1 - p(x).
Predicate perp(const Predicate &p);

// (r . p)(x) = r * p(x). Throws ScalarOutOfRange unless r in [0,1].
Predicate scale(const Rational &r, const Predicate &p);

// f^*(q)(x) = sum_y f(x)(y) q(y), the expectation of q along f.
Predicate subst(const KleisliMap &f, const Predicate &q);

// Omega on X + X: 1 on k1-tagged, 0 on k2-tagged elements.
Predicate omega(const FiniteSet &x);

// char_p(x) = p(x)|k1 x> + (1 - p(x))|k2 x>.
KleisliMap char_map(const Predicate &p);

} // namespace catprob

#endif // CATPROB_PREDICATE_HPP
