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

#ifndef CATPROB_KLEISLI_HPP
#define CATPROB_KLEISLI_HPP

#include "catprob/distribution.hpp"
#include "catprob/finite_set.hpp"

#include <functional>
#include <ostream>
#include <vector>

namespace catprob {

// A morphism X -> Y of the Kleisli category of the distribution monad: one
// distribution over Y per element of X (a stochastic matrix stored by row).
class KleisliMap {
public:
  // Throws SetMismatch if the row count differs from |source|, and
  // LabelNotInSet if a row puts weight outside the target.
  KleisliMap(FiniteSet source, FiniteSet target,
             std::vector<FiniteDistribution> rows);

  static KleisliMap
  from_function(FiniteSet source, FiniteSet target,
                const std::function<FiniteDistribution(const Label &)> &row);
  // eta . fn
  static KleisliMap
  deterministic(FiniteSet source, FiniteSet target,
                const std::function<Label(const Label &)> &fn);
  static KleisliMap identity(const FiniteSet &set);

  const FiniteSet &source() const noexcept { return source_; }
  const FiniteSet &target() const noexcept { return target_; }
  const std::vector<FiniteDistribution> &rows() const noexcept { return rows_; }
  const FiniteDistribution &row(std::size_t i) const { return rows_.at(i); }
  const FiniteDistribution &operator()(const Label &x) const;

  friend bool operator==(const KleisliMap &a, const KleisliMap &b);

private:
  FiniteSet source_;
  FiniteSet target_;
  std::vector<FiniteDistribution> rows_;
};

std::ostream &operator<<(std::ostream &os, const KleisliMap &f);

// g (.) f = mu . D(g) . f. Throws SetMismatch unless f.target == g.source.
KleisliMap compose(const KleisliMap &g, const KleisliMap &f);

// gr(f)(x) = sum_i r_i |(x, y_i)> for f(x) = sum_i r_i |y_i>.
KleisliMap graph(const KleisliMap &f);
// Inverse of graph on maps g: X -> X (x) Y with pi_1 (.) g = id. Throws
// NotAGraph otherwise.
KleisliMap ungraph(const KleisliMap &g);

// Projections pi_i : X1 (x) X2 -> Xi, i in {1, 2}.
KleisliMap projection(const FiniteSet &tensor_set, int i);
// Coprojections k_i : Xi -> X1 + X2.
KleisliMap coprojection(const FiniteSet &x1, const FiniteSet &x2, int i);

// pi_i (.) f for f : X -> Y1 (x) Y2. Throws NotATensor when the target
// is not a full tensor of two sets.
KleisliMap marginal(const KleisliMap &f, int i);

// f + g : X1 + X2 -> Y1 + Y2.
KleisliMap coproduct_map(const KleisliMap &f, const KleisliMap &g);

// d1 (x) d2 as a distribution over pairs.
FiniteDistribution product(const FiniteDistribution &d1,
                           const FiniteDistribution &d2);

} // namespace catprob

#endif // CATPROB_KLEISLI_HPP
