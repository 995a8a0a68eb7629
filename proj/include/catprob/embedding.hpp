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

#ifndef CATPROB_EMBEDDING_HPP
#define CATPROB_EMBEDDING_HPP

#include "catprob/cstar.hpp"
#include "catprob/kleisli.hpp"
#include "catprob/predicate.hpp"

namespace catprob {

// Finite sets as commutative algebras C^X = [1, ..., 1], one coordinate per
// element in set order. Tensor sets line up with tensor shapes because both
// are ordered first-factor-major.
cstar::Shape commutative_shape(const FiniteSet &x);

// f : X -> D(Y) as the PU map C^Y -> C^X, (f b)(x) = sum_y f(x)(y) b(y).
cstar::PUMapd to_pumap(const KleisliMap &f);

// p as an effect on C^X, with coordinates read in the order of `order`
// (which must equal p's carrier as a set).
cstar::Effectd to_effect(const Predicate &p, const FiniteSet &order);
inline cstar::Effectd to_effect(const Predicate &p) { return to_effect(p, p.carrier()); }

// d as the state b |-> sum_x d(x) b(x) on C^X.
cstar::Stated to_state(const FiniteDistribution &d, const FiniteSet &x);

} // namespace catprob

#endif // CATPROB_EMBEDDING_HPP
