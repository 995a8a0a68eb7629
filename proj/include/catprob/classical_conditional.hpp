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

#ifndef CATPROB_CLASSICAL_CONDITIONAL_HPP
#define CATPROB_CLASSICAL_CONDITIONAL_HPP

#include "catprob/kleisli.hpp"
#include "catprob/predicate.hpp"

#include <vector>

namespace catprob {

// The fill-in of the conditioning triangle for f : X -> Y and a predicate
// phi on X (x) Y:
//
//   (cond_true + cond_false) (.) char_marginal = joint
//
// where marginal = gr(f)^*(phi) and joint = (pi_2 + pi_2) (.) char_phi (.) gr(f).
struct ConditioningResult {
  KleisliMap cond_true;
  KleisliMap cond_false;
  Predicate marginal;
  KleisliMap joint;
  // Points where the marginal is 0 or 1. There one of the two conditionals
  // has no defining ratio and is set to the uniform distribution on Y.
  std::vector<Label> degenerate_points;
};

// (pi_2 + pi_2) (.) char_phi (.) gr(f) : X -> Y + Y. Throws SetMismatch
// unless phi is carried by X (x) Y.
KleisliMap joint_map(const KleisliMap &f, const Predicate &phi);

ConditioningResult condition(const KleisliMap &f, const Predicate &phi);

// Exact check of the triangle at every non-degenerate point.
bool verify_triangle(const ConditioningResult &result);

struct NTestResult {
  // conditionals[i] = f | phi_i
  std::vector<KleisliMap> conditionals;
  // marginals[i] = gr(f)^*(phi_i)
  std::vector<Predicate> marginals;
  // X -> Y + ... + Y, the n-fold coproduct nested to the left.
  KleisliMap joint;
  // (test index, point) pairs where marginals[i] vanishes.
  std::vector<std::pair<std::size_t, Label>> degenerate_points;
};

// Conditioning on an n-test phi_1 (+) ... (+) phi_n = 1. Throws NotATest
// when the predicates are not summable to exactly 1.
NTestResult condition_ntest(const KleisliMap &f,
                            const std::vector<Predicate> &tests);

// joint(x)(in_i(y)) = marginals[i](x) * conditionals[i](x)(y) at every
// non-degenerate (i, x), exactly.
bool verify_ntest(const NTestResult &result);

// S + S + ... + S (n copies), nested as ((S + S) + S) + ...
FiniteSet nary_coproduct(const FiniteSet &s, std::size_t n);
// Injection of the i-th summand (0-based) into the nested n-fold coproduct.
Label nary_injection(std::size_t i, std::size_t n, const Label &x);

} // namespace catprob

#endif // CATPROB_CLASSICAL_CONDITIONAL_HPP
