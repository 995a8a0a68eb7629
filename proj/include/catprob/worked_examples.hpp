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

#ifndef CATPROB_WORKED_EXAMPLES_HPP
#define CATPROB_WORKED_EXAMPLES_HPP

#include "catprob/kleisli.hpp"
#include "catprob/predicate.hpp"

namespace catprob::examples {

// Genders G = {M, W} with prior 2/3|M> + 1/3|W>, and long hair with
// likelihood 3/10 for M and 8/10 for W.
struct HairModel {
  KleisliMap prior;          // 1 -> G
  Predicate long_hair;       // on G
  Predicate long_hair_joint; // on 1 (x) G, the same predicate lifted
};

// Countries C = {A, B} with per-country gender distributions and a long
// hair predicate on C (x) G.
struct CountryModel {
  KleisliMap genders;  // C -> G
  Predicate long_hair; // on C (x) G
};

HairModel hair_model();
CountryModel country_model();

} // namespace catprob::examples

#endif // CATPROB_WORKED_EXAMPLES_HPP
