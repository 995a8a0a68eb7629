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

#ifndef CATPROB_CSTAR_FUNCTIONAL_CALCULUS_HPP
#define CATPROB_CSTAR_FUNCTIONAL_CALCULUS_HPP

#include "catprob/cstar/element.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace catprob::cstar {

// Numerical tolerances used throughout the quantum engine.
struct Tolerances {
  double hermitian = 1e-9;
  double positive = 1e-9;
  // Relative accuracy expected of functional calculus.
  double functional_calculus = 1e-10;
  // Smallest eigenvalue still treated as invertible.
  double invertible = 1e-9;
  double unital = 1e-10;
  double triangle = 1e-8;
};

// Eigenvalues of every block of a Hermitian element, ascending.
template <typename Real> std::vector<Real> spectrum(const Element<Real> &a) {
  std::vector<Real> out;
  for (const auto &m : a.blocks()) {
    Eigen::SelfAdjointEigenSolver<MatrixX<Real>> es(m, Eigen::EigenvaluesOnly);
    for (Index k = 0; k < es.eigenvalues().size(); ++k) {
      out.push_back(es.eigenvalues()(k));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Real> Real min_eigenvalue(const Element<Real> &a) {
  Real lo = std::numeric_limits<Real>::infinity();
  for (const auto &m : a.blocks()) {
    Eigen::SelfAdjointEigenSolver<MatrixX<Real>> es(m, Eigen::EigenvaluesOnly);
    lo = std::min(lo, es.eigenvalues()(0));
  }
  return lo;
}

template <typename Real> Real max_eigenvalue(const Element<Real> &a) {
  Real hi = -std::numeric_limits<Real>::infinity();
  for (const auto &m : a.blocks()) {
    Eigen::SelfAdjointEigenSolver<MatrixX<Real>> es(m, Eigen::EigenvaluesOnly);
    hi = std::max(hi, es.eigenvalues()(es.eigenvalues().size() - 1));
  }
  return hi;
}

// a = b*b for some b: Hermitian within tol and spectrum >= -tol.
template <typename Real> bool is_positive(const Element<Real> &a, Real tol) {
  return a.is_hermitian(tol) && min_eigenvalue(a) >= -tol;
}

// f(a) for Hermitian a through the eigendecomposition of each block. Only
// the Hermitian part of a is used.
template <typename Real, typename F>
Element<Real> apply_function(const Element<Real> &a, F &&f) {
  using Matrix = MatrixX<Real>;
  std::vector<Matrix> out;
  for (const Matrix &m : a.blocks()) {
    Matrix h = (m + m.adjoint()) / Real(2);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1> mapped(es.eigenvalues().size());
    for (Index k = 0; k < mapped.size(); ++k) {
      mapped(k) = std::complex<Real>(f(es.eigenvalues()(k)));
    }
    out.push_back(es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().adjoint());
  }
  return Element<Real>(a.shape(), std::move(out));
}

// Positive square root. Eigenvalues in (-tol, 0) are clamped to 0, and so
// are positive ones at rounding level: sqrt would lift 1e-17 to 3e-9, which
// wrecks sqrt(p) = p for projections. Throws NotPositive for non-positive
// input.
template <typename Real>
Element<Real> sqrt_pos(const Element<Real> &a, const Tolerances &tol = {}) {
  if (!a.is_hermitian(Real(tol.hermitian)) || min_eigenvalue(a) < -Real(tol.positive)) {
    throw Error(ErrorKind::NotPositive, "square root of a non-positive element");
  }
  Index n = *std::max_element(a.shape().blocks().begin(), a.shape().blocks().end());
  Real floor = Real(8 * n) * std::numeric_limits<Real>::epsilon() * (1 + a.norm());
  return apply_function(a, [floor](Real x) { return x <= floor ? Real(0) : std::sqrt(x); });
}

// a^{-1/2}. Throws NotPositive, or NotInvertible when the smallest
// eigenvalue is at most tol.invertible.
template <typename Real>
Element<Real> inv_sqrt_pos(const Element<Real> &a, const Tolerances &tol = {}) {
  if (!a.is_hermitian(Real(tol.hermitian)) || min_eigenvalue(a) < -Real(tol.positive)) {
    throw Error(ErrorKind::NotPositive, "inverse square root of a non-positive element");
  }
  Real lo = min_eigenvalue(a);
  if (lo <= Real(tol.invertible)) {
    throw Error(ErrorKind::NotInvertible,
                "smallest eigenvalue " + std::to_string(static_cast<double>(lo)) +
                    " is not above the invertibility threshold");
  }
  return apply_function(a, [](Real x) { return Real(1) / std::sqrt(x); });
}

} // namespace catprob::cstar

#endif // CATPROB_CSTAR_FUNCTIONAL_CALCULUS_HPP
