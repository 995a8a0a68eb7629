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

#include "catprob/worked_examples.hpp"

namespace catprob::examples {

HairModel hair_model() {
  FiniteSet one = FiniteSet::singleton();
  FiniteSet g{"M", "W"};
  KleisliMap prior(one, g,
                   {FiniteDistribution::from_weights(
                       {{"M", make_rational(2, 3)}, {"W", make_rational(1, 3)}})});
  Predicate hair(g, {make_rational(3, 10), make_rational(8, 10)});
  Predicate lifted = Predicate::from_function(
      tensor(one, g), [&](const Label &xy) { return hair(xy.second()); });
  return HairModel{std::move(prior), std::move(hair), std::move(lifted)};
}

CountryModel country_model() {
  FiniteSet c{"A", "B"};
  FiniteSet g{"M", "W"};
  KleisliMap genders(
      c, g,
      {FiniteDistribution::from_weights(
           {{"M", make_rational(9, 20)}, {"W", make_rational(11, 20)}}),
       FiniteDistribution::from_weights(
           {{"M", make_rational(1, 2)}, {"W", make_rational(1, 2)}})});
  // tensor(c, g) order: (A,M), (A,W), (B,M), (B,W)
  Predicate hair(tensor(c, g), {make_rational(1, 10), make_rational(8, 10),
                                make_rational(2, 10), make_rational(9, 10)});
  return CountryModel{std::move(genders), std::move(hair)};
}

} // namespace catprob::examples
