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

#ifndef CATPROB_CSTAR_PU_MAP_HPP
#define CATPROB_CSTAR_PU_MAP_HPP

#include "catprob/cstar/effect.hpp"
#include "catprob/cstar/random.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace catprob::cstar {

// A linear map between algebras, stored as the complex matrix acting on
// vectorized elements (see kVectorization). Intended for positive unital
// maps; positivity is not certified on construction, use pu_validate.
template <typename Real> class PUMap {
public:
  using Matrix = MatrixX<Real>;

  PUMap(Shape source, Shape target, Matrix matrix)
      : source_(std::move(source)), target_(std::move(target)),
        matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.dimension() || matrix_.cols() != source_.dimension()) {
      throw Error(ErrorKind::ShapeMismatch,
                  "map matrix is " + std::to_string(matrix_.rows()) + "x" +
                      std::to_string(matrix_.cols()) + " for " + source_.str() +
                      " -> " + target_.str());
    }
  }

  // The linear map agreeing with fn on every matrix unit of the source.
  template <typename F>
  static PUMap from_function(const Shape &source, const Shape &target, F &&fn) {
    Matrix m(target.dimension(), source.dimension());
    for (Index k = 0; k < source.dimension(); ++k) {
      Element<Real> image = fn(Element<Real>::basis(source, k));
      require_same_shape(image.shape(), target, "map image");
      m.col(k) = image.vectorize();
    }
    return PUMap(source, target, std::move(m));
  }

  static PUMap identity(const Shape &shape) {
    return PUMap(shape, shape, Matrix::Identity(shape.dimension(), shape.dimension()));
  }

  const Shape &source() const noexcept { return source_; }
  const Shape &target() const noexcept { return target_; }
  const Matrix &matrix() const noexcept { return matrix_; }

  Element<Real> operator()(const Element<Real> &a) const {
    require_same_shape(a.shape(), source_, "map argument");
    return Element<Real>::from_vector(target_, matrix_ * a.vectorize());
  }

private:
  Shape source_;
  Shape target_;
  Matrix matrix_;
};

using PUMapd = PUMap<double>;

// A state is a PU map into the scalars C = [1].
template <typename Real> using State = PUMap<Real>;
using Stated = State<double>;

template <typename Real> bool is_state(const PUMap<Real> &f) {
  return f.target() == scalars();
}

// g o f
template <typename Real> PUMap<Real> compose(const PUMap<Real> &g, const PUMap<Real> &f) {
  require_same_shape(f.target(), g.source(), "composition");
  return PUMap<Real>(f.source(), g.target(), g.matrix() * f.matrix());
}

// Scalar value f(a) of a state.
template <typename Real>
std::complex<Real> evaluate(const State<Real> &f, const Element<Real> &a) {
  require_same_shape(f.target(), scalars(), "state evaluation");
  return f(a).block(0)(0, 0);
}

// The state a |-> sum_i tr(rho_i a_i).
template <typename Real> State<Real> density_state(const Element<Real> &rho) {
  MatrixX<Real> row(1, rho.shape().dimension());
  for (Index i = 0; i < rho.shape().block_count(); ++i) {
    MatrixX<Real> t = rho.block(i).transpose();
    row.block(0, rho.shape().offset(i), 1, t.size()) =
        Eigen::Map<const MatrixX<Real>>(t.data(), 1, t.size());
  }
  return State<Real>(rho.shape(), scalars(), std::move(row));
}

// Inverse of density_state: the unique rho with f = tr(rho .).
template <typename Real> Element<Real> density_of(const State<Real> &f) {
  require_same_shape(f.target(), scalars(), "density of a state");
  VectorX<Real> coeffs = f.matrix().row(0).transpose();
  Element<Real> t = Element<Real>::from_vector(f.source(), coeffs);
  std::vector<MatrixX<Real>> blocks;
  for (const auto &b : t.blocks()) {
    blocks.push_back(b.transpose());
  }
  return Element<Real>(f.source(), std::move(blocks));
}

struct ValidationReport {
  double unital_defect = 0;
  // Smallest eigenvalue seen among the images of sampled b*b, each
  // normalized by ||b*b||. Negative means a positivity witness was found.
  double worst_min_eigenvalue = std::numeric_limits<double>::infinity();
  // Largest ||f(h)|| / ||h|| over sampled Hermitian h.
  double worst_norm_ratio = 0;
  int samples = 0;
  bool unital = false;
  bool positive = false;
  bool contractive = false;

  bool passed() const { return unital && positive && contractive; }
};

// Randomized check that m is positive and unital: m(1) = 1, m(b*b) >= 0 on
// sampled b, and ||m(h)|| <= ||h|| on sampled Hermitian h. The generator is
// seeded from seed only, so reports are reproducible.
template <typename Real>
ValidationReport pu_validate(const PUMap<Real> &m, int samples, std::uint64_t seed,
                             const Tolerances &tol = {}) {
  ValidationReport r;
  r.samples = samples;
  r.unital_defect = static_cast<double>(
      distance(m(Element<Real>::identity(m.source())), Element<Real>::identity(m.target())));
  r.unital = r.unital_defect <= tol.unital;

  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    Element<Real> p = random_positive<Real>(rng, m.source());
    Element<Real> image = m(p);
    Real lo = image.is_hermitian(Real(tol.hermitian))
                  ? min_eigenvalue(image) / p.norm()
                  : -std::numeric_limits<Real>::infinity();
    r.worst_min_eigenvalue = std::min(r.worst_min_eigenvalue, static_cast<double>(lo));

    Element<Real> h = random_hermitian<Real>(rng, m.source());
    r.worst_norm_ratio =
        std::max(r.worst_norm_ratio, static_cast<double>(m(h).norm() / h.norm()));
  }
  r.positive = r.worst_min_eigenvalue >= -tol.positive;
  r.contractive = r.worst_norm_ratio <= 1 + tol.unital;
  return r;
}

} // namespace catprob::cstar

#endif // CATPROB_CSTAR_PU_MAP_HPP
