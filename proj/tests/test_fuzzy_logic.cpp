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

#include "catprob/predicate.hpp"
#include "catprob/worked_examples.hpp"
#include "oracles/random_models.hpp"

#include "gtest/gtest.h"

namespace catprob {
namespace {

using testing::random_kleisli;
using testing::random_predicate;
using testing::random_set;
using testing::random_size;
using testing::random_unit;

Rational q(long n, long d) { return make_rational(n, d); }

TEST(Predicate, RejectsValuesOutsideUnitInterval) {
  FiniteSet x{"a", "b"};
  EXPECT_THROW(Predicate(x, {q(1, 2), q(3, 2)}), Error);
  EXPECT_THROW(Predicate(x, {q(1, 2)}), Error);
}

TEST(Ovee, PartialSum) {
  auto hair = examples::hair_model();
  const Predicate &l = hair.long_hair;
  const FiniteSet &g = l.carrier();
  EXPECT_EQ(ovee(l, perp(l)), Predicate::truth(g));
  EXPECT_EQ(ovee(Predicate::falsity(g), l), l);
  try {
    ovee(l, l);
    FAIL() << "expected UndefinedSum";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::UndefinedSum);
  }
  EXPECT_FALSE(ovee_defined(l, l));
}

TEST(Perp, Examples) {
  auto hair = examples::hair_model();
  EXPECT_EQ(perp(hair.long_hair)(Label("M")), q(7, 10));
  EXPECT_EQ(perp(perp(hair.long_hair)), hair.long_hair);

  auto country = examples::country_model();
  Predicate m = subst(graph(country.genders), country.long_hair);
  EXPECT_EQ(perp(m)(Label("A")), q(103, 200));
}

TEST(Scale, Examples) {
  FiniteSet x{"a", "b", "c"};
  Predicate p(x, {q(1, 3), 0, 1});
  EXPECT_EQ(scale(1, p), p);
  EXPECT_EQ(scale(0, p), Predicate::falsity(x));
  EXPECT_EQ(scale(q(1, 2), Predicate::truth(x)), Predicate::constant(x, q(1, 2)));
  EXPECT_THROW(scale(q(3, 2), p), Error);
}

TEST(Subst, Examples) {
  auto hair = examples::hair_model();
  EXPECT_EQ(subst(hair.prior, hair.long_hair)(Label("*")), q(7, 15));

  auto country = examples::country_model();
  Predicate m = subst(graph(country.genders), country.long_hair);
  EXPECT_EQ(m(Label("A")), q(97, 200));
  EXPECT_EQ(m(Label("B")), q(11, 20));

  EXPECT_EQ(subst(KleisliMap::identity(hair.long_hair.carrier()), hair.long_hair),
            hair.long_hair);
  EXPECT_THROW(subst(hair.prior, country.long_hair), Error);
}

TEST(Omega, Values) {
  FiniteSet g{"M", "W"};
  Predicate om = omega(g);
  EXPECT_EQ(om(Label::tagged(1, "M")), 1);
  EXPECT_EQ(om(Label::tagged(2, "W")), 0);
  Predicate right = perp(om);
  for (const Label &z : right.carrier()) {
    EXPECT_EQ(right(z), z.tag() == 2 ? 1 : 0);
  }
}

TEST(CharMap, Examples) {
  auto hair = examples::hair_model();
  KleisliMap c = char_map(hair.long_hair);
  EXPECT_EQ(c(Label("M")), FiniteDistribution::from_weights(
                               {{Label::tagged(1, "M"), q(3, 10)},
                                {Label::tagged(2, "M"), q(7, 10)}}));
  FiniteSet g = hair.long_hair.carrier();
  EXPECT_EQ(char_map(Predicate::truth(g)), coprojection(g, g, 1));
}

TEST(CharMap, SubstOfOmegaRecoversPredicate) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    FiniteSet x = random_set(rng, random_size(rng, 1, 5), "x");
    Predicate p = random_predicate(rng, x);
    EXPECT_EQ(subst(char_map(p), omega(x)), p);
  }
}

TEST(EffectAlgebra, Axioms) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 500; ++trial) {
    FiniteSet x = random_set(rng, random_size(rng, 1, 5), "x");
    Predicate p = random_predicate(rng, x);
    Predicate r = random_predicate(rng, x);
    Predicate s = random_predicate(rng, x);
    Predicate one = Predicate::truth(x);
    Predicate zero = Predicate::falsity(x);

    // Commutativity where defined.
    EXPECT_EQ(ovee_defined(p, r), ovee_defined(r, p));
    if (ovee_defined(p, r)) {
      EXPECT_EQ(ovee(p, r), ovee(r, p));
    }
    // Associativity: (p + r) + s defined iff p + (r + s) defined.
    bool left = ovee_defined(p, r) && ovee_defined(ovee(p, r), s);
    bool right = ovee_defined(r, s) && ovee_defined(p, ovee(r, s));
    EXPECT_EQ(left, right);
    if (left) {
      EXPECT_EQ(ovee(ovee(p, r), s), ovee(p, ovee(r, s)));
    }
    // p (+) p^perp = 1, and p^perp is the only such predicate among samples.
    EXPECT_EQ(ovee(p, perp(p)), one);
    if (!(r == perp(p)) && ovee_defined(p, r)) {
      EXPECT_FALSE(ovee(p, r) == one);
    }
    // p (+) 1 defined only for p = 0.
    EXPECT_EQ(ovee_defined(p, one), p == zero);
    EXPECT_EQ(perp(zero), one);

    // Scalar action.
    Rational a = random_unit(rng);
    Rational b = random_unit(rng);
    EXPECT_EQ(scale(a, scale(b, p)), scale(a * b, p));
    EXPECT_EQ(scale(1, p), p);
    if (ovee_defined(p, r)) {
      EXPECT_EQ(scale(a, ovee(p, r)), ovee(scale(a, p), scale(a, r)));
    }
    if (a + b <= 1) {
      EXPECT_EQ(scale(a + b, p), ovee(scale(a, p), scale(b, p)));
    }
  }
}

TEST(Subst, IsAnEffectModuleMapAndFunctorial) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    FiniteSet x = random_set(rng, random_size(rng, 1, 5), "x");
    FiniteSet y = random_set(rng, random_size(rng, 1, 5), "y");
    FiniteSet z = random_set(rng, random_size(rng, 1, 5), "z");
    auto f = random_kleisli(rng, x, y);
    auto g = random_kleisli(rng, y, z);
    Predicate p = random_predicate(rng, y);
    Predicate r = random_predicate(rng, y);
    Predicate w = random_predicate(rng, z);

    EXPECT_EQ(subst(compose(g, f), w), subst(f, subst(g, w)));
    EXPECT_EQ(subst(f, Predicate::truth(y)), Predicate::truth(x));
    EXPECT_EQ(subst(f, perp(p)), perp(subst(f, p)));
    Rational a = random_unit(rng);
    EXPECT_EQ(subst(f, scale(a, p)), scale(a, subst(f, p)));
    if (ovee_defined(p, r)) {
      EXPECT_EQ(subst(f, ovee(p, r)), ovee(subst(f, p), subst(f, r)));
    }
  }
}

} // namespace
} // namespace catprob
