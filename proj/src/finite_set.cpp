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

#include "catprob/finite_set.hpp"

#include "catprob/error.hpp"

#include <ostream>
#include <set>

namespace catprob {

FiniteSet::FiniteSet(std::initializer_list<Label> elements)
    : FiniteSet(std::vector<Label>(elements)) {}

FiniteSet::FiniteSet(std::vector<Label> elements)
    : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) {
      throw Error(ErrorKind::SetMismatch,
                  "duplicate label '" + elements_[i].str() + "'");
    }
  }
}

FiniteSet FiniteSet::singleton() { return FiniteSet{Label("*")}; }

std::optional<std::size_t> FiniteSet::find(const Label &x) const {
  if (auto it = index_.find(x); it != index_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::size_t FiniteSet::index_of(const Label &x) const {
  if (auto i = find(x)) {
    return *i;
  }
  throw Error(ErrorKind::LabelNotInSet, "'" + x.str() + "' is not an element");
}

std::optional<std::pair<FiniteSet, FiniteSet>>
FiniteSet::tensor_factors() const {
  if (elements_.empty()) {
    return std::nullopt;
  }
  std::vector<Label> firsts;
  std::vector<Label> seconds;
  std::set<Label> seen_first;
  std::set<Label> seen_second;
  for (const Label &x : elements_) {
    if (!x.is_pair()) {
      return std::nullopt;
    }
    if (seen_first.insert(x.first()).second) {
      firsts.push_back(x.first());
    }
    if (seen_second.insert(x.second()).second) {
      seconds.push_back(x.second());
    }
  }
  if (firsts.size() * seconds.size() != elements_.size()) {
    return std::nullopt;
  }
  return std::make_pair(FiniteSet(std::move(firsts)),
                        FiniteSet(std::move(seconds)));
}

std::optional<std::pair<FiniteSet, FiniteSet>>
FiniteSet::coproduct_summands() const {
  std::vector<Label> left;
  std::vector<Label> right;
  for (const Label &x : elements_) {
    if (!x.is_tagged() || x.tag() > 2) {
      return std::nullopt;
    }
    (x.tag() == 1 ? left : right).push_back(x.inner());
  }
  return std::make_pair(FiniteSet(std::move(left)),
                        FiniteSet(std::move(right)));
}

bool operator==(const FiniteSet &a, const FiniteSet &b) {
  if (a.size() != b.size()) {
    return false;
  }
  for (const Label &x : a) {
    if (!b.contains(x)) {
      return false;
    }
  }
  return true;
}

FiniteSet coproduct(const FiniteSet &x, const FiniteSet &y) {
  std::vector<Label> out;
  out.reserve(x.size() + y.size());
  for (const Label &a : x) {
    out.push_back(Label::tagged(1, a));
  }
  for (const Label &b : y) {
    out.push_back(Label::tagged(2, b));
  }
  return FiniteSet(std::move(out));
}

FiniteSet tensor(const FiniteSet &x, const FiniteSet &y) {
  std::vector<Label> out;
  out.reserve(x.size() * y.size());
  for (const Label &a : x) {
    for (const Label &b : y) {
      out.push_back(Label::pair(a, b));
    }
  }
  return FiniteSet(std::move(out));
}

std::ostream &operator<<(std::ostream &os, const FiniteSet &set) {
  os << '{';
  for (std::size_t i = 0; i < set.size(); ++i) {
    os << (i ? "," : "") << set[i];
  }
  return os << '}';
}

} // namespace catprob
