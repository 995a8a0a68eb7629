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

#include "catprob/classical_conditional.hpp"

#include "catprob/error.hpp"

#include <algorithm>

namespace catprob {

namespace {

void require_tensor_carrier(const KleisliMap &f, const Predicate &phi) {
  if (!(phi.carrier() == tensor(f.source(), f.target()))) {
    throw Error(ErrorKind::SetMismatch,
                "predicate must be carried by source (x) target");
  }
}

FiniteDistribution uniform(const FiniteSet &y) {
  FiniteDistribution::storage w;
  for (const Label &b : y) {
    w.emplace(b, make_rational(1, static_cast<long>(y.size())));
  }
  return FiniteDistribution::from_map(std::move(w));
}

// Restricts joint(x) to the summand picked out by inject and divides by
// mass.
FiniteDistribution ratio_row(const FiniteDistribution &joint_row,
                             const FiniteSet &y, const Rational &mass,
                             const std::function<Label(const Label &)> &inject) {
  FiniteDistribution::storage w;
  for (const Label &b : y) {
    Rational p = joint_row.weight(inject(b));
    if (p != 0) {
      w.emplace(b, p / mass);
    }
  }
  return FiniteDistribution::from_map(std::move(w));
}

// Relabels ((..(k_i (x,y))..)) to the same nesting around y.
Label strip_first(const Label &z) {
  if (z.is_pair()) {
    return z.second();
  }
  return Label::tagged(z.tag(), strip_first(z.inner()));
}

} // namespace

KleisliMap joint_map(const KleisliMap &f, const Predicate &phi) {
  require_tensor_carrier(f, phi);
  const FiniteSet &s = phi.carrier();
  KleisliMap pi2 = projection(s, 2);
  return compose(coproduct_map(pi2, pi2), compose(char_map(phi), graph(f)));
}

ConditioningResult condition(const KleisliMap &f, const Predicate &phi) {
  KleisliMap joint = joint_map(f, phi);
  Predicate marginal = subst(graph(f), phi);

  const FiniteSet &x = f.source();
  const FiniteSet &y = f.target();
  std::vector<FiniteDistribution> yes;
  std::vector<FiniteDistribution> no;
  std::vector<Label> degenerate;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Rational &m = marginal.value(i);
    const FiniteDistribution &row = joint.row(i);
    if (m == 0 || m == 1) {
      degenerate.push_back(x[i]);
    }
    yes.push_back(m == 0 ? uniform(y) : ratio_row(row, y, m, [](const Label &b) {
      return Label::tagged(1, b);
    }));
    no.push_back(m == 1 ? uniform(y)
                        : ratio_row(row, y, 1 - m, [](const Label &b) {
                            return Label::tagged(2, b);
                          }));
  }
  return ConditioningResult{KleisliMap(x, y, std::move(yes)),
                            KleisliMap(x, y, std::move(no)),
                            std::move(marginal), std::move(joint),
                            std::move(degenerate)};
}

bool verify_triangle(const ConditioningResult &r) {
  KleisliMap composite = compose(coproduct_map(r.cond_true, r.cond_false),
                                 char_map(r.marginal));
  if (!(composite.target() == r.joint.target())) {
    return false;
  }
  for (std::size_t i = 0; i < composite.source().size(); ++i) {
    const Label &x = composite.source()[i];
    bool degenerate = false;
    for (const Label &d : r.degenerate_points) {
      degenerate = degenerate || d == x;
    }
    if (degenerate) {
      continue;
    }
    if (!(composite.row(i) == r.joint(x))) {
      return false;
    }
  }
  return true;
}

bool verify_ntest(const NTestResult &r) {
  const std::size_t n = r.conditionals.size();
  if (n == 0 || r.marginals.size() != n) {
    return false;
  }
  const FiniteSet &x = r.joint.source();
  for (std::size_t i = 0; i < n; ++i) {
    const KleisliMap &c = r.conditionals[i];
    if (!(c.source() == x) || !(r.marginals[i].carrier() == x)) {
      return false;
    }
    for (const Label &point : x) {
      if (std::find(r.degenerate_points.begin(), r.degenerate_points.end(),
                    std::pair<std::size_t, Label>(i, point)) != r.degenerate_points.end()) {
        continue;
      }
      const Rational &m = r.marginals[i](point);
      for (const Label &y : c.target()) {
        if (r.joint(point).weight(nary_injection(i, n, y)) != m * c(point).weight(y)) {
          return false;
        }
      }
    }
  }
  return true;
}

FiniteSet nary_coproduct(const FiniteSet &s, std::size_t n) {
  if (n <= 1) {
    return s;
  }
  return coproduct(nary_coproduct(s, n - 1), s);
}

Label nary_injection(std::size_t i, std::size_t n, const Label &x) {
  if (n <= 1) {
    return x;
  }
  if (i + 1 == n) {
    return Label::tagged(2, x);
  }
  return Label::tagged(1, nary_injection(i, n - 1, x));
}

NTestResult condition_ntest(const KleisliMap &f,
                            const std::vector<Predicate> &tests) {
  if (tests.empty()) {
    throw Error(ErrorKind::NotATest, "an n-test needs at least one predicate");
  }
  for (const Predicate &phi : tests) {
    require_tensor_carrier(f, phi);
  }
  try {
    Predicate total = tests.front();
    for (std::size_t i = 1; i < tests.size(); ++i) {
      total = ovee(total, tests[i]);
    }
    if (!(total == Predicate::truth(total.carrier()))) {
      throw Error(ErrorKind::NotATest, "predicates sum to less than 1");
    }
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::UndefinedSum) {
      throw Error(ErrorKind::NotATest,
                  std::string("predicates sum past 1 (") + e.what() + ")");
    }
    throw;
  }

  const std::size_t n = tests.size();
  const FiniteSet &x = f.source();
  const FiniteSet &y = f.target();
  const FiniteSet &s = tests.front().carrier();

  // n-ary characteristic map S -> S + ... + S.
  KleisliMap chars = KleisliMap::from_function(
      s, nary_coproduct(s, n), [&](const Label &xy) {
        FiniteDistribution::storage w;
        for (std::size_t i = 0; i < n; ++i) {
          if (tests[i](xy) != 0) {
            w.emplace(nary_injection(i, n, xy), tests[i](xy));
          }
        }
        return FiniteDistribution::from_map(std::move(w));
      });
  KleisliMap strip = KleisliMap::deterministic(
      chars.target(), nary_coproduct(y, n), strip_first);
  KleisliMap joint = compose(strip, compose(chars, graph(f)));

  NTestResult result{{}, {}, joint, {}};
  KleisliMap gr = graph(f);
  for (std::size_t i = 0; i < n; ++i) {
    Predicate m = subst(gr, tests[i]);
    std::vector<FiniteDistribution> rows;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (m.value(k) == 0) {
        result.degenerate_points.emplace_back(i, x[k]);
        rows.push_back(uniform(y));
      } else {
        rows.push_back(ratio_row(joint.row(k), y, m.value(k),
                                 [i, n](const Label &b) {
                                   return nary_injection(i, n, b);
                                 }));
      }
    }
    result.conditionals.emplace_back(x, y, std::move(rows));
    result.marginals.push_back(std::move(m));
  }
  return result;
}

} // namespace catprob
