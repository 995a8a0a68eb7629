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

#include "catprob/predicate.hpp"

#include "catprob/error.hpp"

namespace catprob {

namespace {

void require_same_carrier(const Predicate &p, const Predicate &q) {
  if (!(p.carrier() == q.carrier())) {
    throw Error(ErrorKind::SetMismatch, "predicates on different carriers");
  }
}

} // namespace

Predicate::Predicate(FiniteSet carrier, std::vector<Rational> values)
    : carrier_(std::move(carrier)), values_(std::move(values)) {
  if (values_.size() != carrier_.size()) {
    throw Error(ErrorKind::SetMismatch,
                "predicate has " + std::to_string(values_.size()) +
                    " values for a carrier of size " +
                    std::to_string(carrier_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i].canonicalize();
    if (!in_unit_interval(values_[i])) {
      throw Error(ErrorKind::InvalidPredicate,
                  "value " + to_string(values_[i]) + " at '" +
                      carrier_[i].str() + "' outside [0,1]");
    }
  }
}

Predicate Predicate::constant(FiniteSet carrier, const Rational &value) {
  std::vector<Rational> values(carrier.size(), value);
  return Predicate(std::move(carrier), std::move(values));
}

Predicate
Predicate::from_function(FiniteSet carrier,
                         const std::function<Rational(const Label &)> &p) {
  std::vector<Rational> values;
  values.reserve(carrier.size());
  for (const Label &x : carrier) {
    values.push_back(p(x));
  }
  return Predicate(std::move(carrier), std::move(values));
}

const Rational &Predicate::operator()(const Label &x) const {
  return values_[carrier_.index_of(x)];
}

bool operator==(const Predicate &a, const Predicate &b) {
  if (!(a.carrier_ == b.carrier_)) {
    return false;
  }
  for (std::size_t i = 0; i < a.carrier_.size(); ++i) {
    if (a.values_[i] != b(a.carrier_[i])) {
      return false;
    }
  }
  return true;
}

std::ostream &operator<<(std::ostream &os, const Predicate &p) {
  os << '{';
  for (std::size_t i = 0; i < p.carrier().size(); ++i) {
    os << (i ? ", " : "") << p.carrier()[i] << ": " << to_string(p.value(i));
  }
  return os << '}';
}

bool ovee_defined(const Predicate &p, const Predicate &q) {
  require_same_carrier(p, q);
  for (std::size_t i = 0; i < p.carrier().size(); ++i) {
    if (p.value(i) + q(p.carrier()[i]) > 1) {
      return false;
    }
  }
  return true;
}

Predicate ovee(const Predicate &p, const Predicate &q) {
  require_same_carrier(p, q);
  std::vector<Rational> sum;
  sum.reserve(p.carrier().size());
  for (std::size_t i = 0; i < p.carrier().size(); ++i) {
    Rational s = p.value(i) + q(p.carrier()[i]);
    if (s > 1) {
      throw Error(ErrorKind::UndefinedSum,
                  "p + q = " + to_string(s) + " > 1 at '" +
                      p.carrier()[i].str() + "'");
    }
    sum.push_back(std::move(s));
  }
  return Predicate(p.carrier(), std::move(sum));
}

Predicate perp(const Predicate &p) {
  std::vector<Rational> out;
  out.reserve(p.values().size());
  for (const Rational &v : p.values()) {
    out.push_back(1 - v);
  }
  return Predicate(p.carrier(), std::move(out));
}

Predicate scale(const Rational &r, const Predicate &p) {
  if (!in_unit_interval(r)) {
    throw Error(ErrorKind::ScalarOutOfRange,
                "scalar " + to_string(r) + " outside [0,1]");
  }
  std::vector<Rational> out;
  out.reserve(p.values().size());
  for (const Rational &v : p.values()) {
    out.push_back(r * v);
  }
  return Predicate(p.carrier(), std::move(out));
}

Predicate subst(const KleisliMap &f, const Predicate &q) {
  if (!(f.target() == q.carrier())) {
    throw Error(ErrorKind::SetMismatch,
                "substitution: predicate carrier differs from map target");
  }
  std::vector<Rational> out;
  out.reserve(f.source().size());
  for (const FiniteDistribution &row : f.rows()) {
    Rational e = 0;
    for (const auto &[y, r] : row) {
      e += r * q(y);
    }
    out.push_back(std::move(e));
  }
  return Predicate(f.source(), std::move(out));
}

Predicate omega(const FiniteSet &x) {
  return Predicate::from_function(coproduct(x, x), [](const Label &z) {
    return Rational(z.tag() == 1 ? 1 : 0);
  });
}

KleisliMap char_map(const Predicate &p) {
  const FiniteSet &x = p.carrier();
  std::vector<FiniteDistribution> rows;
  rows.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    rows.push_back(FiniteDistribution::from_weights(
        {{Label::tagged(1, x[i]), p.value(i)},
         {Label::tagged(2, x[i]), 1 - p.value(i)}}));
  }
  return KleisliMap(x, coproduct(x, x), std::move(rows));
}

} // namespace catprob
