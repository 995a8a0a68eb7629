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

#ifndef CATPROB_CSTAR_ELEMENT_HPP
#define CATPROB_CSTAR_ELEMENT_HPP

#include "catprob/cstar/shape.hpp"

#include <Eigen/Dense>

#include <complex>
#include <ostream>
#include <vector>

namespace catprob::cstar {

template <typename Real>
using MatrixX = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using VectorX = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

// An element of a block-diagonal algebra: one complex n_i x n_i matrix per
// block.
template <typename Real> class Element {
public:
  using RealScalar = Real;
  using Scalar = std::complex<Real>;
  using Matrix = MatrixX<Real>;
  using Vector = VectorX<Real>;

  Element(Shape shape, std::vector<Matrix> blocks)
      : shape_(std::move(shape)), blocks_(std::move(blocks)) {
    if (static_cast<Index>(blocks_.size()) != shape_.block_count()) {
      throw Error(ErrorKind::ShapeMismatch, "wrong number of blocks for " + shape_.str());
    }
    for (Index i = 0; i < shape_.block_count(); ++i) {
      const Matrix &b = blocks_[static_cast<std::size_t>(i)];
      if (b.rows() != shape_.block_dim(i) || b.cols() != shape_.block_dim(i)) {
        throw Error(ErrorKind::ShapeMismatch,
                    "block " + std::to_string(i) + " has the wrong size for " +
                        shape_.str());
      }
    }
  }

  static Element zero(const Shape &shape) {
    std::vector<Matrix> b;
    for (Index n : shape.blocks()) {
      b.push_back(Matrix::Zero(n, n));
    }
    return Element(shape, std::move(b));
  }

  static Element identity(const Shape &shape) {
    std::vector<Matrix> b;
    for (Index n : shape.blocks()) {
      b.push_back(Matrix::Identity(n, n));
    }
    return Element(shape, std::move(b));
  }

  // Inverse of vectorize().
  static Element from_vector(const Shape &shape, const Vector &v) {
    if (v.size() != shape.dimension()) {
      throw Error(ErrorKind::ShapeMismatch, "vector length does not match " + shape.str());
    }
    std::vector<Matrix> b;
    for (Index i = 0; i < shape.block_count(); ++i) {
      Index n = shape.block_dim(i);
      b.push_back(Eigen::Map<const Matrix>(v.data() + shape.offset(i), n, n));
    }
    return Element(shape, std::move(b));
  }

  // The k-th vector of the standard basis: a single matrix unit.
  static Element basis(const Shape &shape, Index k) {
    Vector v = Vector::Zero(shape.dimension());
    v(k) = Scalar(1);
    return from_vector(shape, v);
  }

  // Block i carries c * identity, all other blocks are zero.
  static Element block_identity(const Shape &shape, Index i, Scalar c = Scalar(1)) {
    Element e = zero(shape);
    e.blocks_[static_cast<std::size_t>(i)].diagonal().setConstant(c);
    return e;
  }

  const Shape &shape() const noexcept { return shape_; }
  const std::vector<Matrix> &blocks() const noexcept { return blocks_; }
  const Matrix &block(Index i) const { return blocks_.at(static_cast<std::size_t>(i)); }
  Matrix &block(Index i) { return blocks_.at(static_cast<std::size_t>(i)); }

  Vector vectorize() const {
    Vector v(shape_.dimension());
    for (Index i = 0; i < shape_.block_count(); ++i) {
      const Matrix &b = block(i);
      v.segment(shape_.offset(i), b.size()) =
          Eigen::Map<const Vector>(b.data(), b.size());
    }
    return v;
  }

  Element adjoint() const {
    std::vector<Matrix> b;
    for (const Matrix &m : blocks_) {
      b.push_back(m.adjoint());
    }
    return Element(shape_, std::move(b));
  }

  // Largest operator norm over the blocks, which is the C*-norm.
  Real norm() const {
    Real out = 0;
    for (const Matrix &m : blocks_) {
      if (m.size() == 1) {
        out = std::max(out, std::abs(m(0, 0)));
      } else {
        Eigen::JacobiSVD<Matrix> svd(m);
        out = std::max(out, svd.singularValues()(0));
      }
    }
    return out;
  }

  // a = a* entrywise, within tol * (1 + largest entry).
  bool is_hermitian(Real tol) const {
    for (const Matrix &m : blocks_) {
      Real scale = 1 + m.cwiseAbs().maxCoeff();
      if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol * scale) {
        return false;
      }
    }
    return true;
  }

  Element &operator+=(const Element &o) {
    require_same_shape(shape_, o.shape_, "element sum");
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      blocks_[i] += o.blocks_[i];
    }
    return *this;
  }
  Element &operator-=(const Element &o) {
    require_same_shape(shape_, o.shape_, "element difference");
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      blocks_[i] -= o.blocks_[i];
    }
    return *this;
  }
  Element &operator*=(Scalar c) {
    for (Matrix &m : blocks_) {
      m *= c;
    }
    return *this;
  }

  friend Element operator+(Element a, const Element &b) { return a += b; }
  friend Element operator-(Element a, const Element &b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Scalar(-1); }
  friend Element operator*(Scalar c, Element a) { return a *= c; }
  friend Element operator*(Element a, Scalar c) { return a *= c; }

  // Blockwise matrix product.
  friend Element operator*(const Element &a, const Element &b) {
    require_same_shape(a.shape_, b.shape_, "element product");
    std::vector<Matrix> out;
    out.reserve(a.blocks_.size());
    for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
      out.push_back(a.blocks_[i] * b.blocks_[i]);
    }
    return Element(a.shape_, std::move(out));
  }

private:
  Shape shape_;
  std::vector<Matrix> blocks_;
};

using Elementd = Element<double>;

// ||a - b|| in the C*-norm.
template <typename Real> Real distance(const Element<Real> &a, const Element<Real> &b) {
  return (a - b).norm();
}

template <typename Real> Element<Real> commutator(const Element<Real> &a, const Element<Real> &b) {
  return a * b - b * a;
}

// a (x) b on tensor(a.shape(), b.shape()): blockwise Kronecker products
// kron(a_i, b_j) in lexicographic (i, j) order.
template <typename Real>
Element<Real> tensor(const Element<Real> &a, const Element<Real> &b) {
  using Matrix = MatrixX<Real>;
  std::vector<Matrix> out;
  for (const Matrix &x : a.blocks()) {
    for (const Matrix &y : b.blocks()) {
      Matrix k(x.rows() * y.rows(), x.cols() * y.cols());
      for (Index r = 0; r < x.rows(); ++r) {
        for (Index c = 0; c < x.cols(); ++c) {
          k.block(r * y.rows(), c * y.cols(), y.rows(), y.cols()) = x(r, c) * y;
        }
      }
      out.push_back(std::move(k));
    }
  }
  return Element<Real>(tensor(a.shape(), b.shape()), std::move(out));
}

// (a, b) in A (+) B.
template <typename Real>
Element<Real> pair(const Element<Real> &a, const Element<Real> &b) {
  std::vector<MatrixX<Real>> out = a.blocks();
  out.insert(out.end(), b.blocks().begin(), b.blocks().end());
  return Element<Real>(direct_sum(a.shape(), b.shape()), std::move(out));
}

// Component i in {1, 2} of an element of first (+) second.
template <typename Real>
Element<Real> project(const Element<Real> &x, const Shape &first,
                      const Shape &second, int i) {
  require_same_shape(x.shape(), direct_sum(first, second), "projection");
  const Shape &target = i == 1 ? first : second;
  Index skip = i == 1 ? 0 : first.block_count();
  std::vector<MatrixX<Real>> out;
  for (Index k = 0; k < target.block_count(); ++k) {
    out.push_back(x.block(skip + k));
  }
  return Element<Real>(target, std::move(out));
}

template <typename Real>
std::ostream &operator<<(std::ostream &os, const Element<Real> &a) {
  os << a.shape() << '\n';
  for (Index i = 0; i < a.shape().block_count(); ++i) {
    os << "block " << i << ":\n" << a.block(i) << '\n';
  }
  return os;
}

} // namespace catprob::cstar

#endif // CATPROB_CSTAR_ELEMENT_HPP
