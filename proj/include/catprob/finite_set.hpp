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

#ifndef CATPROB_FINITE_SET_HPP
#define CATPROB_FINITE_SET_HPP

#include "catprob/label.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace catprob {

// An ordered list of pairwise distinct labels. The order is the
// declaration order and is only used for iteration; equality is set
// equality.
class FiniteSet {
public:
  FiniteSet() = default;
  FiniteSet(std::initializer_list<Label> elements);
  explicit FiniteSet(std::vector<Label> elements);

  // The final set 1 = {*}.
  static FiniteSet singleton();

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const Label &operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }
  const std::vector<Label> &elements() const noexcept { return elements_; }

  bool contains(const Label &x) const { return index_.count(x) != 0; }
  std::optional<std::size_t> find(const Label &x) const;
  // Throws LabelNotInSet.
  std::size_t index_of(const Label &x) const;

  // A set is a tensor when every element is a pair and the elements form
  // the full grid of their first and second coordinates.
  std::optional<std::pair<FiniteSet, FiniteSet>> tensor_factors() const;
  // A set is a binary coproduct when every element is tagged k1 or k2.
  std::optional<std::pair<FiniteSet, FiniteSet>> coproduct_summands() const;

  friend bool operator==(const FiniteSet &a, const FiniteSet &b);

private:
  std::vector<Label> elements_;
  std::map<Label, std::size_t> index_;
};

// X + Y: k1-tagged elements of X followed by k2-tagged elements of Y.
FiniteSet coproduct(const FiniteSet &x, const FiniteSet &y);
// X (x) Y: pairs in X-major order.
FiniteSet tensor(const FiniteSet &x, const FiniteSet &y);

std::ostream &operator<<(std::ostream &os, const FiniteSet &set);

} // namespace catprob

#endif // CATPROB_FINITE_SET_HPP
