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

#include "catprob/cstar.hpp"
#include "oracles/quantum_oracles.hpp"

#include "gtest/gtest.h"

namespace catprob::cstar {
namespace {

using E = Elementd;
using testing::random_center_map;
using C = std::complex<double>;

const std::vector<Shape> kShapes = {Shape{1}, Shape{2}, Shape{1, 1}, Shape{2, 1},
                                    Shape{1, 3}, Shape{2, 2}, Shape{3}};

E diag(const Shape &s, std::vector<double> d) {
  E out = E::zero(s);
  std::size_t k = 0;
  for (Index i = 0; i < s.block_count(); ++i) {
    for (Index j = 0; j < s.block_dim(i); ++j) {
      out.block(i)(j, j) = d.at(k++);
    }
  }
  return out;
}

double map_distance(const PUMapd &f, const PUMapd &g) {
  return (f.matrix() - g.matrix()).cwiseAbs().maxCoeff();
}

TEST(Shape, RejectsEmptyAndNonPositive) {
  EXPECT_THROW(Shape(std::vector<Index>{}), Error);
  EXPECT_THROW(Shape({2, 0}), Error);
  EXPECT_EQ(Shape({2, 3}).dimension(), 13);
  EXPECT_EQ(Shape({2, 3}).offset(1), 4);
}

TEST(Shape, TensorAndDirectSum) {
  EXPECT_EQ(tensor(Shape{1, 1}, Shape{3}), Shape({3, 3}));
  Shape bomb = tensor(tensor(Shape{1, 1}, Shape{3}), Shape{2});
  EXPECT_EQ(bomb, Shape({6, 6}));
  EXPECT_EQ(bomb.dimension(), 72);
  EXPECT_EQ(tensor(Shape{1, 2}, Shape{3, 1}), Shape({3, 1, 6, 2}));
  EXPECT_EQ(direct_sum(Shape{1}, Shape{1}), Shape({1, 1}));
}

TEST(Element, Algebra) {
  Rng rng(1);
  for (const Shape &s : kShapes) {
    E a = random_element<double>(rng, s), b = random_element<double>(rng, s);
    EXPECT_LT(distance(E::identity(s) * a, a), 1e-14);
    EXPECT_LT(distance(a * E::identity(s), a), 1e-14);
    EXPECT_LT(distance(a.adjoint().adjoint(), a), 1e-14);
    EXPECT_LT(distance((a * b).adjoint(), b.adjoint() * a.adjoint()), 1e-12);
    EXPECT_LT(distance(a + E::zero(s), a), 1e-14);
    EXPECT_LT(distance(E::from_vector(s, a.vectorize()), a), 1e-15);
  }
  Shape s{2, 1};
  EXPECT_LT(distance(diag(s, {1, 2, 3}) * diag(s, {4, 5, 6}), diag(s, {4, 10, 18})), 1e-15);
  EXPECT_THROW(E::identity(Shape{2}) * E::identity(Shape{1, 1}), Error);
}

TEST(Element, VectorizationIsColumnMajorByBlock) {
  Shape s{1, 2};
  E a = E::zero(s);
  a.block(0)(0, 0) = 1;
  a.block(1)(0, 0) = 2;
  a.block(1)(1, 0) = 3;
  a.block(1)(0, 1) = 4;
  a.block(1)(1, 1) = 5;
  VectorX<double> v = a.vectorize();
  for (int k = 0; k < 5; ++k) {
    EXPECT_EQ(v(k), C(k + 1));
  }
}

TEST(Positivity, SquaresArePositive) {
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const Shape &s = kShapes[static_cast<std::size_t>(t) % kShapes.size()];
    EXPECT_TRUE(is_positive(random_positive<double>(rng, s), 1e-9));
  }
  EXPECT_FALSE(is_positive(-E::identity(Shape{2, 1}), 1e-9));
  E nh = E::zero(Shape{2});
  nh.block(0)(0, 1) = 1;
  EXPECT_FALSE(is_positive(nh, 1e-9));
}

TEST(Positivity, TwoSidedProduct) {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const Shape &s = kShapes[static_cast<std::size_t>(t) % kShapes.size()];
    E a = random_positive<double>(rng, s), b = random_positive<double>(rng, s);
    EXPECT_TRUE(is_positive(a * b * a, 1e-9 * (1 + (a * b * a).norm())));
  }
}

TEST(FunctionalCalculus, Examples) {
  Shape s{3, 1};
  EXPECT_LT(distance(sqrt_pos(E::identity(s)), E::identity(s)), 1e-14);
  EXPECT_LT(distance(sqrt_pos(diag(Shape{2}, {4, 9})), diag(Shape{2}, {2, 3})), 1e-13);
  Rng rng(4);
  for (Index rank = 0; rank <= 3; ++rank) {
    E p = E::zero(Shape{3});
    p.block(0) = random_projection<double>(rng, 3, rank);
    EXPECT_LT(distance(sqrt_pos(p), p), 1e-10);
  }
  EXPECT_THROW(sqrt_pos(-E::identity(s)), Error);
  EXPECT_THROW(inv_sqrt_pos(diag(Shape{2}, {1, 0})), Error);
}

TEST(FunctionalCalculus, RandomRoots) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    Index n = 1 + t % 8;
    Shape s = t % 2 ? Shape{n} : Shape{n, 2};
    E a = random_positive<double>(rng, s);
    E r = sqrt_pos(a);
    EXPECT_LE(distance(r * r, a), 1e-10 * (1 + a.norm()));
    a += E::identity(s);
    E ir = inv_sqrt_pos(a);
    EXPECT_LE(distance(ir * a * ir, E::identity(s)), 1e-9);
  }
}

TEST(Tensor, KroneckerIdentities) {
  Rng rng(6);
  Shape a{2, 1}, b{1, 3};
  EXPECT_LT(distance(tensor(E::identity(a), E::identity(b)), E::identity(tensor(a, b))), 1e-15);
  E a1 = random_element<double>(rng, a), a2 = random_element<double>(rng, a);
  E b1 = random_element<double>(rng, b), b2 = random_element<double>(rng, b);
  EXPECT_LT(distance(tensor(a1, b1) * tensor(a2, b2), tensor(a1 * a2, b1 * b2)), 1e-12);
  EXPECT_LT(distance(tensor(a1, b1).adjoint(), tensor(a1.adjoint(), b1.adjoint())), 1e-14);
}

TEST(DirectSum, PairAndProject) {
  Rng rng(7);
  Shape a{2}, b{1, 1};
  E x = random_element<double>(rng, a), y = random_element<double>(rng, b);
  E p = pair(x, y);
  EXPECT_EQ(p.shape(), Shape({2, 1, 1}));
  EXPECT_LT(distance(project(p, a, b, 1), x), 1e-15);
  EXPECT_LT(distance(project(p, a, b, 2), y), 1e-15);
  Effectd om = omega(Shape{2});
  EXPECT_TRUE(om.is_projection(1e-12));
}

TEST(Effect, Validation) {
  EXPECT_NO_THROW(Effectd(diag(Shape{2}, {0, 1})));
  EXPECT_THROW(Effectd(diag(Shape{2}, {0, 1.5})), Error);
  EXPECT_THROW(Effectd(diag(Shape{2}, {-0.1, 0.5})), Error);
  Effectd e(diag(Shape{2, 1}, {0.25, 0.5, 1}));
  EXPECT_LT(distance(e.complement().element(), diag(Shape{2, 1}, {0.75, 0.5, 0})), 1e-15);
}

TEST(Coprojection, Properties) {
  Rng rng(8);
  Shape a{2, 1}, b{2};
  auto k1 = coproj_tensor(1, a, b), k2 = coproj_tensor(2, a, b);
  EXPECT_LT(distance(k1(E::identity(a)), E::identity(tensor(a, b))), 1e-15);
  for (int t = 0; t < 20; ++t) {
    E x = random_element<double>(rng, a), y = random_element<double>(rng, b);
    EXPECT_LT(distance(k1(x) * k2(y), tensor(x, y)), 1e-12);
    EXPECT_LT(distance(k1(x.adjoint()), k1(x).adjoint()), 1e-14);
  }
  EXPECT_THROW(coproj_tensor(3, a, b), Error);
}

TEST(Center, Shapes) {
  auto z3 = center(Shape{3});
  EXPECT_EQ(z3.shape, Shape{1});
  E z = E::identity(Shape{1}) * C(2.5);
  EXPECT_LT(distance(z3.embedding(z), E::identity(Shape{3}) * C(2.5)), 1e-15);
  auto z11 = center(Shape{1, 1});
  EXPECT_EQ(z11.shape, Shape({1, 1}));
  EXPECT_LT(map_distance(z11.embedding, PUMapd::identity(Shape{1, 1})), 1e-15);
}

TEST(Center, EmbeddedElementsCommute) {
  Rng rng(9);
  Shape a{2, 3, 1};
  auto z = center(a);
  for (int t = 0; t < 100; ++t) {
    E c = z.embedding(random_element<double>(rng, z.shape));
    E x = random_element<double>(rng, a);
    EXPECT_LT(commutator(c, x).norm(), 1e-12);
  }
  EXPECT_LT(map_distance(compose(z.expectation, z.embedding), PUMapd::identity(z.shape)), 1e-15);
}

TEST(Mu, Properties) {
  Rng rng(10);
  Shape a{2, 1};
  auto z = center(a);
  auto mu = mu_mult(a);
  EXPECT_EQ(mu.source(), tensor(a, z.shape));
  for (int t = 0; t < 50; ++t) {
    E x = random_element<double>(rng, a), y = random_element<double>(rng, a);
    E zz = random_element<double>(rng, z.shape), w = random_element<double>(rng, z.shape);
    EXPECT_LT(distance(mu(tensor(x, E::identity(z.shape))), x), 1e-14);
    EXPECT_LT(distance(mu(tensor(E::identity(a), zz)), z.embedding(zz)), 1e-14);
    EXPECT_LT(distance(mu(tensor(x, zz) * tensor(y, w)), mu(tensor(x, zz)) * mu(tensor(y, w))),
              1e-11);
    EXPECT_LT(distance(mu(tensor(x, zz).adjoint()), mu(tensor(x, zz)).adjoint()), 1e-13);
  }
  EXPECT_TRUE(pu_validate(mu, 50, 1).passed());
}

TEST(Graph, Laws) {
  Rng rng(11);
  const std::vector<std::pair<Shape, Shape>> cases = {
      {Shape{2}, Shape{2}}, {Shape{2, 1}, Shape{1, 2}}, {Shape{1, 1}, Shape{3}}};
  for (const auto &[a, b] : cases) {
    for (int t = 0; t < 10; ++t) {
      PUMapd f = random_center_map(rng, a, b);
      PUMapd g = graph_cstar(a, f);
      EXPECT_LT(map_distance(compose(g, coproj_tensor(1, a, b)), PUMapd::identity(a)), 1e-12);
      E x = random_element<double>(rng, a), y = random_element<double>(rng, b);
      EXPECT_LT(distance(g(tensor(x, y)), x * center(a).embedding(f(y))), 1e-12);
      EXPECT_LT(distance(g(tensor(E::identity(a), y)), center(a).embedding(f(y))), 1e-12);
      EXPECT_LT(map_distance(ungraph_cstar(a, b, g), f), 1e-10);
      EXPECT_TRUE(pu_validate(g, 30, static_cast<std::uint64_t>(t)).passed());

      // values of g o kappa_2 are central
      E h = compose(g, coproj_tensor(2, a, b))(random_element<double>(rng, b));
      for (int k = 0; k < 5; ++k) {
        EXPECT_LT(commutator(h, random_element<double>(rng, a)).norm(), 1e-11);
      }
    }
  }
}

TEST(Graph, RejectsWrongTarget) {
  EXPECT_THROW(graph_cstar(Shape{2, 1}, PUMapd::identity(Shape{2})), Error);
  Shape a{2}, b{2};
  // the zero map is no left inverse of kappa_1
  EXPECT_THROW(ungraph_cstar(a, b, PUMapd(tensor(a, b), a, MatrixX<double>::Zero(4, 16))), Error);
}

TEST(Graph, BimoduleLaw) {
  Rng rng(12);
  Shape a{2, 1}, b{1, 2};
  PUMapd g = graph_cstar(a, random_center_map(rng, a, b));
  auto k1 = coproj_tensor(1, a, b);
  for (int t = 0; t < 50; ++t) {
    E a1 = random_element<double>(rng, a), a2 = random_element<double>(rng, a);
    E x = random_element<double>(rng, tensor(a, b));
    EXPECT_LT(distance(g(k1(a1) * x * k1(a2)), a1 * g(x) * a2), 1e-10);
  }
}

TEST(CharEffect, Examples) {
  Rng rng(13);
  for (const Shape &s : kShapes) {
    Effectd e(random_effect_element<double>(rng, s));
    auto ch = char_effect(e);
    EXPECT_LT(distance(ch(pair(E::identity(s), E::identity(s))), E::identity(s)), 1e-12);
    EXPECT_LT(distance(ch(omega(s).element()), e.element()), 1e-10);
    EXPECT_LT(distance(ch(omega(s).complement().element()), e.complement().element()), 1e-10);
    EXPECT_TRUE(pu_validate(ch, 40, 3).passed());
  }
  for (Index rank = 0; rank <= 3; ++rank) {
    E p = E::zero(Shape{3});
    p.block(0) = random_projection<double>(rng, 3, rank);
    auto ch = char_effect(Effectd(p));
    E b = random_element<double>(rng, Shape{3});
    EXPECT_LT(distance(ch(pair(b, E::zero(Shape{3}))), p * b * p), 1e-9);
  }
  EXPECT_THROW(Effectd(E::identity(Shape{2}) * C(2)), Error);
}

TEST(CharEffect, CommutativeCollapse) {
  Rng rng(14);
  Shape s{1, 1, 1, 1};
  for (int t = 0; t < 50; ++t) {
    Effectd e(random_effect_element<double>(rng, s));
    E a1 = random_element<double>(rng, s), a2 = random_element<double>(rng, s);
    E want = e.element() * a1 + e.complement().element() * a2;
    EXPECT_LT(distance(char_effect(e)(pair(a1, a2)), want), 1e-12);
  }
}

TEST(CharEffect, PositiveOnPositivePairs) {
  Rng rng(15);
  Shape s{2, 1};
  Effectd e(random_effect_element<double>(rng, s));
  auto ch = char_effect(e);
  for (int t = 0; t < 100; ++t) {
    E x = random_positive<double>(rng, s), y = random_positive<double>(rng, s);
    E im = ch(pair(x, y));
    EXPECT_TRUE(is_positive(im, 1e-9 * (1 + im.norm())));
  }
}

TEST(PUMap, StatesAndDensities) {
  Rng rng(16);
  Shape s{2, 1};
  E rho = random_density<double>(rng, s);
  Stated f = density_state(rho);
  EXPECT_TRUE(is_state(f));
  EXPECT_NEAR(std::abs(evaluate(f, E::identity(s)) - C(1)), 0, 1e-12);
  EXPECT_LT(distance(density_of(f), rho), 1e-15);
  E a = random_element<double>(rng, s);
  C want = (rho.block(0) * a.block(0)).trace() + (rho.block(1) * a.block(1)).trace();
  EXPECT_NEAR(std::abs(evaluate(f, a) - want), 0, 1e-12);
}

TEST(PUMap, ComposeIsMatrixProduct) {
  Rng rng(17);
  Shape a{2}, b{2, 1};
  auto f = coproj_tensor(1, a, b);
  auto g = ungraph_cstar(a, b, graph_cstar(a, random_center_map(rng, a, b)));
  EXPECT_THROW(compose(f, f), Error);
  auto h = compose(g, PUMapd::identity(b));
  EXPECT_LT(map_distance(h, g), 1e-15);
  E x = random_element<double>(rng, a);
  EXPECT_LT(distance(compose(mu_mult(a), detail::tensor_maps(PUMapd::identity(a),
                                                             PUMapd::identity(center_shape(a))))(
                         tensor(x, E::identity(center_shape(a)))),
                     x),
            1e-14);
}

TEST(Validate, IdentityAndTranspose) {
  EXPECT_TRUE(pu_validate(PUMapd::identity(Shape{3, 1}), 50, 1).passed());
  Shape m2{2};
  auto transpose = PUMapd::from_function(m2, m2, [&](const E &x) {
    E out = E::zero(m2);
    out.block(0) = x.block(0).transpose();
    return out;
  });
  auto r = pu_validate(transpose, 100, 2);
  EXPECT_TRUE(r.passed());
  EXPECT_GE(r.worst_min_eigenvalue, 0);
}

TEST(Validate, DetectsNonPositiveUnitalMap) {
  // a |-> (2/3) tr(a) 1 - a on M_3 is unital but sends rank one projections
  // to elements with eigenvalue -1/3
  Shape m3{3};
  auto bad = PUMapd::from_function(m3, m3, [&](const E &x) {
    return E::identity(m3) * (C(2.0 / 3) * x.block(0).trace()) - x;
  });
  auto r = pu_validate(bad, 100, 3);
  EXPECT_TRUE(r.unital);
  EXPECT_FALSE(r.positive);
  EXPECT_LT(r.worst_min_eigenvalue, -1e-3);
  EXPECT_FALSE(r.passed());

  auto shifted = PUMapd::from_function(m3, m3, [&](const E &x) { return x + E::identity(m3); });
  EXPECT_FALSE(pu_validate(shifted, 10, 4).unital);
}

TEST(LongDouble, Instantiation) {
  using EL = Element<long double>;
  Shape s{2, 1};
  Rng rng(18);
  EL a = random_positive<long double>(rng, s);
  EL r = sqrt_pos(a);
  EXPECT_LT(static_cast<double>(distance(r * r, a)), 1e-15 * (1 + static_cast<double>(a.norm())));
  Effect<long double> e(random_effect_element<long double>(rng, s));
  auto ch = char_effect(e);
  EXPECT_LT(static_cast<double>(distance(ch(omega<long double>(s).element()), e.element())),
            1e-14);
}

} // namespace
} // namespace catprob::cstar
