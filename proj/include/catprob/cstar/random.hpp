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

#ifndef CATPROB_CSTAR_RANDOM_HPP
#define CATPROB_CSTAR_RANDOM_HPP

#include "catprob/cstar/element.hpp"

#include <Eigen/QR>

#include <random>

namespace catprob::cstar {

using Rng = std::mt19937_64;

// Entries with independent standard normal real and imaginary parts.
template <typename Real> MatrixX<Real> random_matrix(Rng &rng, Index rows, Index cols) {
  std::normal_distribution<Real> normal(0, 1);
  MatrixX<Real> m(rows, cols);
  for (Index c = 0; c < cols; ++c) {
    for (Index r = 0; r < rows; ++r) {
      m(r, c) = std::complex<Real>(normal(rng), normal(rng));
    }
  }
  return m;
}

template <typename Real> Element<Real> random_element(Rng &rng, const Shape &shape) {
  std::vector<MatrixX<Real>> b;
  for (Index n : shape.blocks()) {
    b.push_back(random_matrix<Real>(rng, n, n));
  }
  return Element<Real>(shape, std::move(b));
}

template <typename Real> Element<Real> random_hermitian(Rng &rng, const Shape &shape) {
  Element<Real> g = random_element<Real>(rng, shape);
  return Real(0.5) * (g + g.adjoint());
}

// b*b for a random b.
template <typename Real> Element<Real> random_positive(Rng &rng, const Shape &shape) {
  Element<Real> b = random_element<Real>(rng, shape);
  return b.adjoint() * b;
}

// Haar-distributed unitary via QR with the phase of R's diagonal removed.
template <typename Real> MatrixX<Real> random_unitary(Rng &rng, Index n) {
  Eigen::HouseholderQR<MatrixX<Real>> qr(random_matrix<Real>(rng, n, n));
  MatrixX<Real> q = qr.householderQ();
  MatrixX<Real> r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Index k = 0; k < n; ++k) {
    Real mag = std::abs(r(k, k));
    if (mag > 0) {
      q.col(k) *= r(k, k) / mag;
    }
  }
  return q;
}

// Positive, trace one over all blocks together.
template <typename Real> Element<Real> random_density(Rng &rng, const Shape &shape) {
  Element<Real> p = random_positive<Real>(rng, shape);
  std::complex<Real> trace = 0;
  for (const auto &m : p.blocks()) {
    trace += m.trace();
  }
  return (Real(1) / trace.real()) * p;
}

// Orthogonal projection of the given rank in M_n, randomly rotated.
template <typename Real> MatrixX<Real> random_projection(Rng &rng, Index n, Index rank) {
  MatrixX<Real> u = random_unitary<Real>(rng, n);
  return u.leftCols(rank) * u.leftCols(rank).adjoint();
}

// Effect with spectrum inside [lo, hi].
template <typename Real>
Element<Real> random_effect_element(Rng &rng, const Shape &shape, Real lo = Real(0.05),
                                    Real hi = Real(0.95)) {
  Element<Real> p = random_positive<Real>(rng, shape);
  Real n = p.norm();
  return lo * Element<Real>::identity(shape) + ((hi - lo) / n) * p;
}

} // namespace catprob::cstar

#endif // CATPROB_CSTAR_RANDOM_HPP
