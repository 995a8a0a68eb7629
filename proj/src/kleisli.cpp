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

#include "catprob/kleisli.hpp"

#include "catprob/error.hpp"

namespace catprob {

KleisliMap::KleisliMap(FiniteSet source, FiniteSet target,
                       std::vector<FiniteDistribution> rows)
    : source_(std::move(source)), target_(std::move(target)),
      rows_(std::move(rows)) {
  if (rows_.size() != source_.size()) {
    throw Error(ErrorKind::SetMismatch,
                "Kleisli map has " + std::to_string(rows_.size()) +
                    " rows for a source of size " +
                    std::to_string(source_.size()));
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto &[y, w] : rows_[i]) {
      if (!target_.contains(y)) {
        throw Error(ErrorKind::LabelNotInSet,
                    "row '" + source_[i].str() + "' puts weight on '" +
                        y.str() + "' outside the target set");
      }
    }
  }
}

KleisliMap KleisliMap::from_function(
    FiniteSet source, FiniteSet target,
    const std::function<FiniteDistribution(const Label &)> &row) {
  std::vector<FiniteDistribution> rows;
  rows.reserve(source.size());
  for (const Label &x : source) {
    rows.push_back(row(x));
  }
  return KleisliMap(std::move(source), std::move(target), std::move(rows));
}

KleisliMap
KleisliMap::deterministic(FiniteSet source, FiniteSet target,
                          const std::function<Label(const Label &)> &fn) {
  return from_function(std::move(source), std::move(target),
                       [&](const Label &x) { return dirac(fn(x)); });
}

KleisliMap KleisliMap::identity(const FiniteSet &set) {
  return deterministic(set, set, [](const Label &x) { return x; });
}

const FiniteDistribution &KleisliMap::operator()(const Label &x) const {
  return rows_[source_.index_of(x)];
}

bool operator==(const KleisliMap &a, const KleisliMap &b) {
  if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) {
    return false;
  }
  for (std::size_t i = 0; i < a.source_.size(); ++i) {
    if (!(a.rows_[i] == b(a.source_[i]))) {
      return false;
    }
  }
  return true;
}

std::ostream &operator<<(std::ostream &os, const KleisliMap &f) {
  for (std::size_t i = 0; i < f.source().size(); ++i) {
    os << f.source()[i] << " |-> " << f.row(i) << '\n';
  }
  return os;
}

KleisliMap compose(const KleisliMap &g, const KleisliMap &f) {
  if (!(f.target() == g.source())) {
    throw Error(ErrorKind::SetMismatch,
                "cannot compose: target of f differs from source of g");
  }
  std::vector<FiniteDistribution> rows;
  rows.reserve(f.source().size());
  for (const FiniteDistribution &fx : f.rows()) {
    rows.push_back(bind(fx, [&](const Label &y) -> const FiniteDistribution & {
      return g(y);
    }));
  }
  return KleisliMap(f.source(), g.target(), std::move(rows));
}

KleisliMap graph(const KleisliMap &f) {
  std::vector<FiniteDistribution> rows;
  rows.reserve(f.source().size());
  for (std::size_t i = 0; i < f.source().size(); ++i) {
    const Label &x = f.source()[i];
    rows.push_back(pushforward([&](const Label &y) { return Label::pair(x, y); },
                               f.row(i)));
  }
  return KleisliMap(f.source(), tensor(f.source(), f.target()),
                    std::move(rows));
}

KleisliMap ungraph(const KleisliMap &g) {
  auto factors = g.target().tensor_factors();
  if (!factors || !(factors->first == g.source())) {
    throw Error(ErrorKind::NotAGraph,
                "target is not a tensor with the source as first factor");
  }
  std::vector<FiniteDistribution> rows;
  rows.reserve(g.source().size());
  for (std::size_t i = 0; i < g.source().size(); ++i) {
    const Label &x = g.source()[i];
    for (const auto &[xy, w] : g.row(i)) {
      if (!(xy.first() == x)) {
        throw Error(ErrorKind::NotAGraph,
                    "pi_1 (.) g is not the identity at '" + x.str() + "'");
      }
    }
    rows.push_back(
        pushforward([](const Label &xy) { return xy.second(); }, g.row(i)));
  }
  return KleisliMap(g.source(), factors->second, std::move(rows));
}

KleisliMap projection(const FiniteSet &tensor_set, int i) {
  auto factors = tensor_set.tensor_factors();
  if (!factors) {
    throw Error(ErrorKind::NotATensor, "projection needs a tensor set");
  }
  if (i != 1 && i != 2) {
    throw Error(ErrorKind::NotATensor, "projection index must be 1 or 2");
  }
  return KleisliMap::deterministic(
      tensor_set, i == 1 ? factors->first : factors->second,
      [i](const Label &xy) { return i == 1 ? xy.first() : xy.second(); });
}

KleisliMap coprojection(const FiniteSet &x1, const FiniteSet &x2, int i) {
  if (i != 1 && i != 2) {
    throw Error(ErrorKind::SetMismatch, "coprojection index must be 1 or 2");
  }
  return KleisliMap::deterministic(
      i == 1 ? x1 : x2, coproduct(x1, x2),
      [i](const Label &x) { return Label::tagged(i, x); });
}

KleisliMap marginal(const KleisliMap &f, int i) {
  auto factors = f.target().tensor_factors();
  if (!factors) {
    throw Error(ErrorKind::NotATensor,
                "marginal needs a map into a tensor of two sets");
  }
  if (i != 1 && i != 2) {
    throw Error(ErrorKind::NotATensor, "marginal index must be 1 or 2");
  }
  std::vector<FiniteDistribution> rows;
  rows.reserve(f.source().size());
  for (const FiniteDistribution &row : f.rows()) {
    rows.push_back(pushforward(
        [i](const Label &xy) { return i == 1 ? xy.first() : xy.second(); },
        row));
  }
  return KleisliMap(f.source(), i == 1 ? factors->first : factors->second,
                    std::move(rows));
}

KleisliMap coproduct_map(const KleisliMap &f, const KleisliMap &g) {
  FiniteSet source = coproduct(f.source(), g.source());
  FiniteSet target = coproduct(f.target(), g.target());
  return KleisliMap::from_function(source, target, [&](const Label &x) {
    const KleisliMap &h = x.tag() == 1 ? f : g;
    int tag = x.tag();
    return pushforward([tag](const Label &y) { return Label::tagged(tag, y); },
                       h(x.inner()));
  });
}

FiniteDistribution product(const FiniteDistribution &d1,
                           const FiniteDistribution &d2) {
  FiniteDistribution::storage out;
  for (const auto &[x, r] : d1) {
    for (const auto &[y, s] : d2) {
      out[Label::pair(x, y)] += r * s;
    }
  }
  return FiniteDistribution::from_map(std::move(out));
}

} // namespace catprob
