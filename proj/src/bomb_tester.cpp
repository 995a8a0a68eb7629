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

#include "catprob/bomb_tester.hpp"

#include "catprob/quantum_conditional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace catprob::bomb {

namespace {

using cstar::Elementd;
using cstar::Index;
using cstar::MatrixX;
using cstar::PUMapd;
using C = std::complex<double>;

MatrixX<double> permutation(const std::vector<std::pair<Index, Index>> &images, Index n) {
  MatrixX<double> u = MatrixX<double>::Zero(n, n);
  for (auto [from, to] : images) {
    u(to, from) = 1;
  }
  return u;
}

// a |-> U* a U on every block, U acting on photon (x) bomb; blocks listed
// in `skip` are left alone.
PUMapd conjugation(const cstar::Shape &shape, const MatrixX<double> &u,
                   std::vector<Index> skip = {}) {
  return PUMapd::from_function(shape, shape, [&](const Elementd &a) {
    Elementd out = a;
    for (Index i = 0; i < shape.block_count(); ++i) {
      if (std::find(skip.begin(), skip.end(), i) == skip.end()) {
        out.block(i) = u.adjoint() * a.block(i) * u;
      }
    }
    return out;
  });
}

MatrixX<double> with_bomb(const MatrixX<double> &photon) {
  Elementd p(cstar::Shape{3}, {photon});
  return cstar::tensor(p, Elementd::identity(cstar::Shape{2})).block(0);
}

double real_value(const cstar::Stated &f, const Elementd &a) {
  return std::real(cstar::evaluate(f, a));
}

Elementd projector(const cstar::Shape &shape, std::vector<Index> kets) {
  Elementd e = Elementd::zero(shape);
  for (Index i = 0; i < shape.block_count(); ++i) {
    for (Index k : kets) {
      e.block(i)(k, k) = 1;
    }
  }
  return e;
}

} // namespace

BombScenario build_scenario() {
  const cstar::Shape algebra =
      cstar::tensor(cstar::tensor(cstar::Shape{1, 1}, cstar::Shape{3}), cstar::Shape{2});
  const double r = 1 / std::sqrt(2.0);

  MatrixX<double> us = MatrixX<double>::Zero(3, 3);
  us(kRight, kRight) = r;
  us(kUp, kRight) = r;
  us(kRight, kUp) = r;
  us(kUp, kUp) = -r;
  us(kNone, kNone) = 1;

  MatrixX<double> uf = permutation({{kRight, kUp}, {kUp, kRight}, {kNone, kNone}}, 3);

  MatrixX<double> ub = permutation({{ket(kUp, 0), ket(kUp, 0)},
                                    {ket(kUp, 1), ket(kUp, 1)},
                                    {ket(kRight, 0), ket(kNone, 1)},
                                    {ket(kRight, 1), ket(kRight, 1)},
                                    {ket(kNone, 0), ket(kNone, 0)},
                                    {ket(kNone, 1), ket(kRight, 0)}},
                                   6);

  std::vector<Stage> stages;
  stages.push_back({"first mirror", conjugation(algebra, with_bomb(us))});
  stages.push_back({"light hits bomb", conjugation(algebra, ub, {kDud})});
  stages.push_back({"opaque mirrors", conjugation(algebra, with_bomb(uf))});
  stages.push_back({"last mirror", conjugation(algebra, with_bomb(us))});

  // (1/2 delta_D + 1/2 delta_L) (x) <right 0| - |right 0>
  Elementd rho = Elementd::zero(algebra);
  rho.block(kLive)(ket(kRight, 0), ket(kRight, 0)) = 0.5;
  rho.block(kDud)(ket(kRight, 0), ket(kRight, 0)) = 0.5;

  Elementd dud = Elementd::block_identity(algebra, kDud);

  return {algebra,
          std::move(us),
          std::move(uf),
          std::move(ub),
          std::move(stages),
          cstar::density_state(rho),
          cstar::Effectd(projector(algebra, {ket(kUp, 0)})),
          std::move(dud)};
}

Evolution evolve(const BombScenario &s) {
  Evolution ev;
  ev.states.push_back(s.initial);
  for (const Stage &stage : s.stages) {
    ev.states.push_back(cstar::compose(ev.states.back(), stage.map));
  }
  return ev;
}

MatrixX<double> branch_density(const cstar::Stated &f, Branch branch) {
  return cstar::density_of(f).block(branch);
}

BombReport run_bomb_tester(int samples, std::uint64_t seed) {
  const BombScenario s = build_scenario();
  BombReport r;
  r.evolution = evolve(s);
  const cstar::Stated &f = r.evolution.final_state();

  r.p_detect = real_value(f, s.detector.element());
  auto [given, given_not] = quantum::condition_state(f, s.detector);
  r.p_dud_given_detect = real_value(given, s.dud);

  const Elementd up0 = projector(s.algebra, {ket(kUp, 0)});
  const Elementd right0 = projector(s.algebra, {ket(kRight, 0)});
  const Elementd exploded = projector(s.algebra, {ket(kNone, 1)});
  const Elementd other = projector(s.algebra, {ket(kUp, 1), ket(kRight, 1), ket(kNone, 0)});
  r.outcomes = {Outcome{"up, unexploded", real_value(f, up0)},
                Outcome{"right, unexploded", real_value(f, right0)},
                Outcome{"exploded", real_value(f, exploded)},
                Outcome{"other", real_value(f, other)}};

  Elementd none1 = Elementd::zero(s.algebra);
  none1.block(kLive)(ket(kNone, 1), ket(kNone, 1)) = 1;
  r.unexplode_weight = real_value(r.evolution.states[1], none1);

  r.complement_validation = cstar::pu_validate(given_not, samples, seed);
  // one map per stage; report the worst of the four
  r.stage_validation.worst_min_eigenvalue = std::numeric_limits<double>::infinity();
  r.stage_validation.unital = r.stage_validation.positive = r.stage_validation.contractive = true;
  for (const Stage &stage : s.stages) {
    auto v = cstar::pu_validate(stage.map, samples, seed);
    auto &w = r.stage_validation;
    w.samples += v.samples;
    w.unital_defect = std::max(w.unital_defect, v.unital_defect);
    w.worst_min_eigenvalue = std::min(w.worst_min_eigenvalue, v.worst_min_eigenvalue);
    w.worst_norm_ratio = std::max(w.worst_norm_ratio, v.worst_norm_ratio);
    w.unital = w.unital && v.unital;
    w.positive = w.positive && v.positive;
    w.contractive = w.contractive && v.contractive;
  }
  return r;
}

} // namespace catprob::bomb
