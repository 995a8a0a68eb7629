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

#ifndef CATPROB_CSTAR_EFFECT_HPP
#define CATPROB_CSTAR_EFFECT_HPP

#include "catprob/cstar/functional_calculus.hpp"

namespace catprob::cstar {

// An element e with 0 <= e <= 1.
template <typename Real> class Effect {
public:
  // Throws InvalidEffect unless e is Hermitian and its spectrum lies in
  // [-tol, 1 + tol].
  explicit Effect(Element<Real> e, const Tolerances &tol = {})
      : element_(std::move(e)) {
    if (!element_.is_hermitian(Real(tol.hermitian))) {
      throw Error(ErrorKind::InvalidEffect, "effect is not Hermitian");
    }
    auto eig = spectrum(element_);
    if (eig.front() < -Real(tol.positive) || eig.back() > 1 + Real(tol.positive)) {
      throw Error(ErrorKind::InvalidEffect,
                  "effect spectrum [" + std::to_string(static_cast<double>(eig.front())) +
                      ", " + std::to_string(static_cast<double>(eig.back())) +
                      "] leaves [0,1]");
    }
  }

  const Element<Real> &element() const noexcept { return element_; }
  const Shape &shape() const noexcept { return element_.shape(); }

  // e^perp = 1 - e
  Effect complement() const {
    return Effect(Element<Real>::identity(shape()) - element_);
  }

  bool is_projection(Real tol) const {
    return distance(element_ * element_, element_) <= tol;
  }

private:
  Element<Real> element_;
};

using Effectd = Effect<double>;

// Omega = (1, 0) on A (+) A.
template <typename Real = double> Effect<Real> omega(const Shape &a) {
  return Effect<Real>(pair(Element<Real>::identity(a), Element<Real>::zero(a)));
}

} // namespace catprob::cstar

#endif // CATPROB_CSTAR_EFFECT_HPP
