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

#ifndef CATPROB_DISTRIBUTION_HPP
#define CATPROB_DISTRIBUTION_HPP

#include "catprob/error.hpp"
#include "catprob/finite_set.hpp"
#include "catprob/rational.hpp"

#include <initializer_list>
#include <map>
#include <ostream>
#include <sstream>
#include <type_traits>
#include <utility>

namespace catprob {

// A formal convex sum r1|x1> + ... + rn|xn> with exact rational weights.
//
// Canonical form: every stored weight lies in (0,1], the weights sum to
// exactly 1, and zero weights are never stored, so two distributions are
// equal iff they are structurally equal.
template <typename T> class Distribution {
public:
  using value_type = T;
  using storage = std::map<T, Rational>;

  // Merges repeated elements and drops zero weights. Throws
  // InvalidDistribution if a weight is outside [0,1] or the total is not 1.
  static Distribution from_weights(std::initializer_list<std::pair<T, Rational>> weights) {
    return from_pairs(weights.begin(), weights.end());
  }

  template <typename It> static Distribution from_pairs(It first, It last) {
    storage merged;
    for (; first != last; ++first) {
      Rational w = first->second;
      w.canonicalize();
      if (w < 0 || w > 1) {
        throw Error(ErrorKind::InvalidDistribution,
                    "weight " + to_string(w) + " outside [0,1]");
      }
      merged[first->first] += w;
    }
    return Distribution(std::move(merged));
  }

  static Distribution from_map(storage weights) {
    for (auto &[x, w] : weights) {
      w.canonicalize();
      if (w < 0 || w > 1) {
        throw Error(ErrorKind::InvalidDistribution,
                    "weight " + to_string(w) + " outside [0,1]");
      }
    }
    return Distribution(std::move(weights));
  }

  static Distribution dirac(T x) {
    storage s;
    s.emplace(std::move(x), Rational(1));
    return Distribution(std::move(s), /*checked=*/true);
  }

  Rational weight(const T &x) const {
    if (auto it = weights_.find(x); it != weights_.end()) {
      return it->second;
    }
    return Rational(0);
  }

  const storage &weights() const noexcept { return weights_; }
  std::size_t support_size() const noexcept { return weights_.size(); }
  auto begin() const noexcept { return weights_.begin(); }
  auto end() const noexcept { return weights_.end(); }

  friend bool operator==(const Distribution &a, const Distribution &b) {
    return a.weights_ == b.weights_;
  }
  friend bool operator<(const Distribution &a, const Distribution &b) {
    auto ia = a.weights_.begin();
    auto ib = b.weights_.begin();
    for (; ia != a.weights_.end() && ib != b.weights_.end(); ++ia, ++ib) {
      if (ia->first < ib->first) return true;
      if (ib->first < ia->first) return false;
      if (ia->second < ib->second) return true;
      if (ib->second < ia->second) return false;
    }
    return ia == a.weights_.end() && ib != b.weights_.end();
  }

private:
  explicit Distribution(storage weights, bool checked = false)
      : weights_(std::move(weights)) {
    if (checked) {
      return;
    }
    Rational total = 0;
    for (auto it = weights_.begin(); it != weights_.end();) {
      if (it->second == 0) {
        it = weights_.erase(it);
      } else {
        total += it->second;
        ++it;
      }
    }
    if (total != 1) {
      throw Error(ErrorKind::InvalidDistribution,
                  "weights sum to " + to_string(total) + ", not 1");
    }
  }

  storage weights_;
};

using FiniteDistribution = Distribution<Label>;

// Unit of the monad, restricted to a declared set.
inline FiniteDistribution dirac(const Label &x, const FiniteSet &set) {
  if (!set.contains(x)) {
    throw Error(ErrorKind::LabelNotInSet,
                "'" + x.str() + "' is not an element of the support set");
  }
  return FiniteDistribution::dirac(x);
}

template <typename T> Distribution<T> dirac(T x) {
  return Distribution<T>::dirac(std::move(x));
}

// D(f): relabels along f, merging the weights of collided images.
template <typename T, typename F>
auto pushforward(F &&f, const Distribution<T> &d)
    -> Distribution<std::decay_t<std::invoke_result_t<F &, const T &>>> {
  using U = std::decay_t<std::invoke_result_t<F &, const T &>>;
  typename Distribution<U>::storage out;
  for (const auto &[x, w] : d) {
    out[f(x)] += w;
  }
  return Distribution<U>::from_map(std::move(out));
}

// D(f) with a declared target set; throws LabelNotInSet when f leaves it.
template <typename F>
FiniteDistribution pushforward(F &&f, const FiniteDistribution &d,
                               const FiniteSet &target) {
  FiniteDistribution out = pushforward(std::forward<F>(f), d);
  for (const auto &[y, w] : out) {
    if (!target.contains(y)) {
      throw Error(ErrorKind::LabelNotInSet,
                  "pushforward image '" + y.str() + "' outside target set");
    }
  }
  return out;
}

// The monad multiplication: sum_i r_i |phi_i>  |->  sum_ij r_i s_ij |x_ij>.
template <typename T>
Distribution<T> flatten(const Distribution<Distribution<T>> &dd) {
  typename Distribution<T>::storage out;
  for (const auto &[inner, r] : dd) {
    for (const auto &[x, s] : inner) {
      out[x] += r * s;
    }
  }
  return Distribution<T>::from_map(std::move(out));
}

// Kleisli extension (bind): flatten . D(k).
template <typename T, typename F>
auto bind(const Distribution<T> &d, F &&k)
    -> std::decay_t<std::invoke_result_t<F &, const T &>> {
  using Out = std::decay_t<std::invoke_result_t<F &, const T &>>;
  typename Out::storage out;
  for (const auto &[x, r] : d) {
    for (const auto &[y, s] : k(x)) {
      out[y] += r * s;
    }
  }
  return Out::from_map(std::move(out));
}

template <typename T>
std::ostream &operator<<(std::ostream &os, const Distribution<T> &d) {
  bool first = true;
  for (const auto &[x, w] : d) {
    os << (first ? "" : " + ") << to_string(w) << "|" << x << ">";
    first = false;
  }
  return os;
}

} // namespace catprob

#endif // CATPROB_DISTRIBUTION_HPP
