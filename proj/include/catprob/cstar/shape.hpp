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

#ifndef CATPROB_CSTAR_SHAPE_HPP
#define CATPROB_CSTAR_SHAPE_HPP

#include "catprob/error.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

namespace catprob::cstar {

using Index = Eigen::Index;

// Version tag of the vectorization convention shared by every PUMap:
// blocks in shape order, each block column-major.
inline constexpr const char *kVectorization = "blocks-colmajor-v1";

// A finite-dimensional C*-algebra M_{n1} (+) ... (+) M_{nk}, described by
// its block sizes.
class Shape {
public:
  Shape(std::initializer_list<Index> blocks)
      : Shape(std::vector<Index>(blocks)) {}
  explicit Shape(std::vector<Index> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) {
      throw Error(ErrorKind::ShapeMismatch, "an algebra needs a block");
    }
    offsets_.reserve(blocks_.size());
    Index offset = 0;
    for (Index n : blocks_) {
      if (n <= 0) {
        throw Error(ErrorKind::ShapeMismatch, "block sizes must be positive");
      }
      offsets_.push_back(offset);
      offset += n * n;
    }
    dimension_ = offset;
  }

  const std::vector<Index> &blocks() const noexcept { return blocks_; }
  Index block_count() const noexcept { return static_cast<Index>(blocks_.size()); }
  Index block_dim(Index i) const { return blocks_.at(static_cast<std::size_t>(i)); }
  // Offset of block i in the vectorized element.
  Index offset(Index i) const { return offsets_.at(static_cast<std::size_t>(i)); }
  // Complex dimension sum_i n_i^2.
  Index dimension() const noexcept { return dimension_; }
  bool is_commutative() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](Index n) { return n == 1; });
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      s += (i ? "," : "") + std::to_string(blocks_[i]);
    }
    return s + "]";
  }

  friend bool operator==(const Shape &a, const Shape &b) {
    return a.blocks_ == b.blocks_;
  }

private:
  std::vector<Index> blocks_;
  std::vector<Index> offsets_;
  Index dimension_ = 0;
};

inline std::ostream &operator<<(std::ostream &os, const Shape &s) {
  return os << s.str();
}

inline Shape scalars() { return Shape{1}; }

// Blocks n_i * m_j, ordered lexicographically in (i, j).
inline Shape tensor(const Shape &a, const Shape &b) {
  std::vector<Index> out;
  out.reserve(a.blocks().size() * b.blocks().size());
  for (Index n : a.blocks()) {
    for (Index m : b.blocks()) {
      out.push_back(n * m);
    }
  }
  return Shape(std::move(out));
}

inline Shape direct_sum(const Shape &a, const Shape &b) {
  std::vector<Index> out = a.blocks();
  out.insert(out.end(), b.blocks().begin(), b.blocks().end());
  return Shape(std::move(out));
}

// Z(M_{n1} (+) ... (+) M_{nk}) = C^k.
inline Shape center_shape(const Shape &a) {
  return Shape(std::vector<Index>(a.blocks().size(), 1));
}

inline void require_same_shape(const Shape &a, const Shape &b,
                               const char *what) {
  if (!(a == b)) {
    throw Error(ErrorKind::ShapeMismatch, std::string(what) + ": shape " +
                                              a.str() + " vs " + b.str());
  }
}

} // namespace catprob::cstar

#endif // CATPROB_CSTAR_SHAPE_HPP
