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

#ifndef CATPROB_QUANTUM_CONDITIONAL_HPP
#define CATPROB_QUANTUM_CONDITIONAL_HPP

#include "catprob/cstar.hpp"

#include <algorithm>
#include <complex>
#include <cstdint>
#include <utility>

namespace catprob::quantum {

using cstar::Effect;
using cstar::Element;
using cstar::Index;
using cstar::PUMap;
using cstar::Shape;
using cstar::State;
using cstar::Tolerances;

// Fill-in of the triangle for f : B -> Z(A) and an effect e on A (x) B:
//
//   char_marginal o (cond_true x cond_false) = joint    (maps B x B -> A)
template <typename Real> struct QConditioningResult {
  Shape algebra;
  PUMap<Real> cond_true;
  PUMap<Real> cond_false;
  // gr(f)(e)
  Effect<Real> marginal_effect;
  PUMap<Real> joint;
  double residual = 0;
};

using QConditioningResultd = QConditioningResult<double>;

namespace detail {

template <typename Real>
void require_center_map(const Shape &a, const PUMap<Real> &f, const Effect<Real> &e) {
  cstar::require_same_shape(f.target(), cstar::center_shape(a), "conditioned map target");
  cstar::require_same_shape(e.shape(), cstar::tensor(a, f.source()), "effect");
}

// b |-> x b x as a map on shape(x).
template <typename Real> PUMap<Real> sandwich(const Element<Real> &x) {
  return PUMap<Real>::from_function(x.shape(), x.shape(),
                                    [&](const Element<Real> &b) { return x * b * x; });
}

} // namespace detail

// f ^ e : B (+) B -> A, (b1, b2) |-> gr(f)(char_e(1 (x) b1, 1 (x) b2)).
template <typename Real>
PUMap<Real> joint_q(const Shape &a, const PUMap<Real> &f, const Effect<Real> &e,
                    const Tolerances &tol = {}) {
  detail::require_center_map(a, f, e);
  const Shape &b = f.source();
  const auto k2 = cstar::coproj_tensor<Real>(2, a, b);
  const auto gr = cstar::graph_cstar(a, f);
  const auto ch = cstar::char_effect(e, tol);
  const Shape ab = e.shape();
  auto legs = PUMap<Real>::from_function(
      cstar::direct_sum(b, b), cstar::direct_sum(ab, ab), [&](const Element<Real> &x) {
        return cstar::pair(k2(cstar::project(x, b, b, 1)), k2(cstar::project(x, b, b, 2)));
      });
  return compose(gr, compose(ch, legs));
}

// Largest block operator norm of char_m(cond_true(b1), cond_false(b2)) -
// joint(b1, b2) over every matrix unit of B (+) B and `probes` random
// Hermitian pairs drawn from seed.
template <typename Real>
double verify_triangle_q(const QConditioningResult<Real> &r, int probes, std::uint64_t seed,
                         const Tolerances &tol = {}) {
  const Shape &b = r.cond_true.source();
  const Shape bb = cstar::direct_sum(b, b);
  const auto ch = cstar::char_effect(r.marginal_effect, tol);
  auto defect = [&](const Element<Real> &x) {
    Element<Real> left = ch(cstar::pair(r.cond_true(cstar::project(x, b, b, 1)),
                                        r.cond_false(cstar::project(x, b, b, 2))));
    return static_cast<double>(cstar::distance(left, r.joint(x)));
  };
  double worst = 0;
  for (Index k = 0; k < bb.dimension(); ++k) {
    worst = std::max(worst, defect(Element<Real>::basis(bb, k)));
  }
  cstar::Rng rng(seed);
  for (int p = 0; p < probes; ++p) {
    worst = std::max(worst, defect(cstar::random_hermitian<Real>(rng, bb)));
  }
  return worst;
}

// f|e(b) = m^{-1/2} (f ^ e)(b, 0) m^{-1/2} and
// f|e^perp(b) = (1-m)^{-1/2} (f ^ e)(0, b) (1-m)^{-1/2}, with m = gr(f)(e).
// Throws MarginalNotInvertible when m or 1-m has an eigenvalue at most
// tol.invertible.
template <typename Real>
QConditioningResult<Real> condition_param(const Shape &a, const PUMap<Real> &f,
                                          const Effect<Real> &e, int probes = 16,
                                          std::uint64_t seed = 0, const Tolerances &tol = {}) {
  detail::require_center_map(a, f, e);
  const Shape &b = f.source();
  const auto gr = cstar::graph_cstar(a, f);
  const Element<Real> m = gr(e.element());
  Effect<Real> marginal(m, tol);

  auto inv_sqrt = [&](const Element<Real> &x, const char *which) {
    try {
      return cstar::inv_sqrt_pos(x, tol);
    } catch (const Error &err) {
      throw Error(ErrorKind::MarginalNotInvertible,
                  std::string("marginal gr(f)(") + which + ") is not invertible: " + err.what());
    }
  };
  const Element<Real> s = inv_sqrt(m, "e");
  const Element<Real> t = inv_sqrt(marginal.complement().element(), "e-perp");

  PUMap<Real> joint = joint_q(a, f, e, tol);
  const Shape bb = cstar::direct_sum(b, b);
  const auto first = PUMap<Real>::from_function(b, bb, [&](const Element<Real> &y) {
    return cstar::pair(y, Element<Real>::zero(b));
  });
  const auto second = PUMap<Real>::from_function(b, bb, [&](const Element<Real> &y) {
    return cstar::pair(Element<Real>::zero(b), y);
  });
  PUMap<Real> ct = compose(detail::sandwich(s), compose(joint, first));
  PUMap<Real> cf = compose(detail::sandwich(t), compose(joint, second));

  QConditioningResult<Real> r{a, std::move(ct), std::move(cf), std::move(marginal),
                              std::move(joint), 0};
  r.residual = verify_triangle_q(r, probes, seed, tol);
  return r;
}

// Conditional states f|e(b) = f(sqrt(e) b sqrt(e)) / f(e) and
// f|e^perp(b) = f(sqrt(1-e) b sqrt(1-e)) / f(1-e). Throws DegenerateEffect
// when f(e) is within tol.invertible of 0 or 1.
template <typename Real>
std::pair<State<Real>, State<Real>> condition_state(const State<Real> &f, const Effect<Real> &e,
                                                    const Tolerances &tol = {}) {
  cstar::require_same_shape(e.shape(), f.source(), "effect");
  const Real p = std::real(cstar::evaluate(f, e.element()));
  if (p <= Real(tol.invertible) || p >= 1 - Real(tol.invertible)) {
    throw Error(ErrorKind::DegenerateEffect,
                "f(e) = " + std::to_string(static_cast<double>(p)) + " leaves no conditional");
  }
  auto conditional = [&](const Element<Real> &x, Real norm) {
    State<Real> g = compose(f, detail::sandwich(cstar::sqrt_pos(x, tol)));
    return State<Real>(g.source(), g.target(), g.matrix() / std::complex<Real>(norm));
  };
  return {conditional(e.element(), p), conditional(e.complement().element(), 1 - p)};
}

// tr(rho a b a) / tr(rho a) for a projection a.
template <typename Real>
std::complex<Real> bub_oracle(const Element<Real> &rho, const Effect<Real> &a,
                              const Element<Real> &b, const Tolerances &tol = {}) {
  if (!a.is_projection(Real(tol.hermitian))) {
    throw Error(ErrorKind::NotAProjection, "Bub's formula needs a projection");
  }
  auto trace = [](const Element<Real> &x) {
    std::complex<Real> s = 0;
    for (const auto &blk : x.blocks()) {
      s += blk.trace();
    }
    return s;
  };
  const Real p = std::real(trace(rho * a.element()));
  if (p <= Real(tol.invertible) || p >= 1 - Real(tol.invertible)) {
    throw Error(ErrorKind::DegenerateEffect,
                "tr(rho a) = " + std::to_string(static_cast<double>(p)) + " leaves no conditional");
  }
  return trace(rho * a.element() * b * a.element()) / p;
}

} // namespace catprob::quantum

#endif // CATPROB_QUANTUM_CONDITIONAL_HPP
