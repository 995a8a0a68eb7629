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

#ifndef CATPROB_CSTAR_STRUCTURE_HPP
#define CATPROB_CSTAR_STRUCTURE_HPP

#include "catprob/cstar/effect.hpp"
#include "catprob/cstar/functional_calculus.hpp"
#include "catprob/cstar/pu_map.hpp"

namespace catprob::cstar {

// kappa_1(a) = a (x) 1 : A -> A (x) B, kappa_2(b) = 1 (x) b : B -> A (x) B.
template <typename Real = double>
PUMap<Real> coproj_tensor(int i, const Shape &a, const Shape &b) {
  const Shape ab = tensor(a, b);
  if (i == 1) {
    const auto one = Element<Real>::identity(b);
    return PUMap<Real>::from_function(a, ab, [&](const Element<Real> &x) { return tensor(x, one); });
  }
  if (i == 2) {
    const auto one = Element<Real>::identity(a);
    return PUMap<Real>::from_function(b, ab, [&](const Element<Real> &y) { return tensor(one, y); });
  }
  throw Error(ErrorKind::ShapeMismatch, "tensor coprojection index must be 1 or 2");
}

template <typename Real> struct Center {
  Shape shape;
  // Z(A) -> A, z |-> (z_1 I, ..., z_k I)
  PUMap<Real> embedding;
  // A -> Z(A), a |-> (tr(a_1)/n_1, ..., tr(a_k)/n_k). A left inverse of the
  // embedding; used to read center-valued maps back out.
  PUMap<Real> expectation;
};

template <typename Real = double> Center<Real> center(const Shape &a) {
  const Shape z = center_shape(a);
  auto embed = PUMap<Real>::from_function(z, a, [&](const Element<Real> &x) {
    Element<Real> out = Element<Real>::zero(a);
    for (Index i = 0; i < a.block_count(); ++i) {
      out.block(i).diagonal().setConstant(x.block(i)(0, 0));
    }
    return out;
  });
  auto expect = PUMap<Real>::from_function(a, z, [&](const Element<Real> &x) {
    Element<Real> out = Element<Real>::zero(z);
    for (Index i = 0; i < a.block_count(); ++i) {
      out.block(i)(0, 0) = x.block(i).trace() / Real(a.block_dim(i));
    }
    return out;
  });
  return {z, std::move(embed), std::move(expect)};
}

// mu : A (x) Z(A) -> A, a (x) z |-> a z. Block (i, j) of the tensor is
// a_i z_j, and only the diagonal pairs i = j survive.
template <typename Real = double> PUMap<Real> mu_mult(const Shape &a) {
  const Shape az = tensor(a, center_shape(a));
  const Index k = a.block_count();
  return PUMap<Real>::from_function(az, a, [&](const Element<Real> &x) {
    Element<Real> out = Element<Real>::zero(a);
    for (Index i = 0; i < k; ++i) {
      out.block(i) = x.block(i * k + i);
    }
    return out;
  });
}

namespace detail {

// f (x) g on matrix units: block (i, j) of A (x) B has entry
// (p m + q, r m + s) = E_pr (x) E_qs with m the size of block j of B.
template <typename Real>
PUMap<Real> tensor_maps(const PUMap<Real> &f, const PUMap<Real> &g) {
  const Shape &a = f.source();
  const Shape &b = g.source();
  const Shape src = tensor(a, b);
  const Shape dst = tensor(f.target(), g.target());
  MatrixX<Real> m(dst.dimension(), src.dimension());
  Index col = 0;
  for (Index i = 0; i < a.block_count(); ++i) {
    for (Index j = 0; j < b.block_count(); ++j) {
      const Index n = a.block_dim(i), mj = b.block_dim(j);
      // column-major inside the block: column index outer, row index inner
      for (Index c = 0; c < n * mj; ++c) {
        for (Index r = 0; r < n * mj; ++r, ++col) {
          const Index p = r / mj, q = r % mj, rr = c / mj, s = c % mj;
          auto ua = Element<Real>::zero(a);
          ua.block(i)(p, rr) = 1;
          auto ub = Element<Real>::zero(b);
          ub.block(j)(q, s) = 1;
          m.col(col) = tensor(f(ua), g(ub)).vectorize();
        }
      }
    }
  }
  return PUMap<Real>(src, dst, std::move(m));
}

} // namespace detail

// gr(f) = mu o (id_A (x) f) for f : B -> Z(A); gr(f)(a (x) b) = a f(b).
template <typename Real>
PUMap<Real> graph_cstar(const Shape &a, const PUMap<Real> &f) {
  if (!(f.target() == center_shape(a))) {
    throw Error(ErrorKind::ShapeMismatch, "graph needs a map into the center " +
                                              center_shape(a).str() + ", got " +
                                              f.target().str());
  }
  return compose(mu_mult<Real>(a), detail::tensor_maps(PUMap<Real>::identity(a), f));
}

// Inverse of graph_cstar: from g : A (x) B -> A with g o kappa_1 = id,
// recover f = g o kappa_2 as a map into Z(A). Throws NotAGraph if g is not
// a retraction of kappa_1 or g o kappa_2 leaves the center.
template <typename Real>
PUMap<Real> ungraph_cstar(const Shape &a, const Shape &b, const PUMap<Real> &g,
                          Real tol = Real(1e-9)) {
  require_same_shape(g.source(), tensor(a, b), "ungraph source");
  require_same_shape(g.target(), a, "ungraph target");
  const auto left = compose(g, coproj_tensor<Real>(1, a, b));
  Real defect = (left.matrix() - MatrixX<Real>::Identity(a.dimension(), a.dimension())).norm();
  if (defect > tol) {
    throw Error(ErrorKind::NotAGraph, "map is not a left inverse of kappa_1 (defect " +
                                          std::to_string(static_cast<double>(defect)) + ")");
  }
  const auto h = compose(g, coproj_tensor<Real>(2, a, b));
  const Center<Real> z = center<Real>(a);
  const auto f = compose(z.expectation, h);
  defect = (compose(z.embedding, f).matrix() - h.matrix()).norm();
  if (defect > tol) {
    throw Error(ErrorKind::NotAGraph, "g o kappa_2 is not center-valued (defect " +
                                          std::to_string(static_cast<double>(defect)) + ")");
  }
  return f;
}

// char_e : A (+) A -> A, (a, a') |-> sqrt(e) a sqrt(e) + sqrt(1-e) a' sqrt(1-e).
template <typename Real>
PUMap<Real> char_effect(const Effect<Real> &e, const Tolerances &tol = {}) {
  const Shape &a = e.shape();
  const Element<Real> s = sqrt_pos(e.element(), tol);
  const Element<Real> t = sqrt_pos(e.complement().element(), tol);
  return PUMap<Real>::from_function(direct_sum(a, a), a, [&](const Element<Real> &x) {
    return s * project(x, a, a, 1) * s + t * project(x, a, a, 2) * t;
  });
}

} // namespace catprob::cstar

#endif // CATPROB_CSTAR_STRUCTURE_HPP
