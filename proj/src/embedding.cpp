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

#include "catprob/embedding.hpp"

namespace catprob {

cstar::Shape commutative_shape(const FiniteSet &x) {
  return cstar::Shape(std::vector<cstar::Index>(x.size(), 1));
}

cstar::PUMapd to_pumap(const KleisliMap &f) {
  cstar::MatrixX<double> m = cstar::MatrixX<double>::Zero(
      static_cast<cstar::Index>(f.source().size()), static_cast<cstar::Index>(f.target().size()));
  for (std::size_t i = 0; i < f.source().size(); ++i) {
    for (const auto &[y, w] : f.row(i)) {
      m(static_cast<cstar::Index>(i), static_cast<cstar::Index>(f.target().index_of(y))) = w.get_d();
    }
  }
  return cstar::PUMapd(commutative_shape(f.target()), commutative_shape(f.source()), std::move(m));
}

cstar::Effectd to_effect(const Predicate &p, const FiniteSet &order) {
  if (!(order == p.carrier())) {
    throw Error(ErrorKind::SetMismatch, "coordinate order differs from the predicate carrier");
  }
  const cstar::Shape s = commutative_shape(order);
  cstar::Elementd e = cstar::Elementd::zero(s);
  for (std::size_t i = 0; i < order.size(); ++i) {
    e.block(static_cast<cstar::Index>(i))(0, 0) = p(order[i]).get_d();
  }
  return cstar::Effectd(std::move(e));
}

cstar::Stated to_state(const FiniteDistribution &d, const FiniteSet &x) {
  cstar::MatrixX<double> m = cstar::MatrixX<double>::Zero(1, static_cast<cstar::Index>(x.size()));
  for (const auto &[l, w] : d) {
    m(0, static_cast<cstar::Index>(x.index_of(l))) = w.get_d();
  }
  return cstar::Stated(commutative_shape(x), cstar::scalars(), std::move(m));
}

} // namespace catprob
