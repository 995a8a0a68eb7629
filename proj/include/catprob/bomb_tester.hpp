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

#ifndef CATPROB_BOMB_TESTER_HPP
#define CATPROB_BOMB_TESTER_HPP

#include "catprob/cstar.hpp"

#include <array>
#include <string>
#include <vector>

namespace catprob::bomb {

// Algebra A = C({L, D}) (x) B(l2(3)) (x) B(l2(2)) = [6, 6], 72-dimensional.
// Block 0 is the live branch, block 1 the dud branch. Photon basis
// (up, right, none) = 0, 1, 2 and bomb basis (unexploded, exploded) = 0, 1;
// inside a block the index of |photon, bomb> is 2 * photon + bomb.
enum Photon : cstar::Index { kUp = 0, kRight = 1, kNone = 2 };
enum Branch : cstar::Index { kLive = 0, kDud = 1 };

constexpr cstar::Index ket(Photon p, int bomb) { return 2 * p + bomb; }

struct Stage {
  std::string name;
  // Heisenberg-picture map a |-> U* a U; states evolve by f |-> f o map.
  cstar::PUMapd map;
};

struct BombScenario {
  cstar::Shape algebra;
  cstar::MatrixX<double> u_semi;  // 3x3
  cstar::MatrixX<double> u_full;  // 3x3
  cstar::MatrixX<double> u_bomb;  // 6x6 on photon (x) bomb
  // semi-silvered mirror, bomb (live branch only), full mirrors, semi-silvered mirror
  std::vector<Stage> stages;
  cstar::Stated initial;
  // 1 (x) |up 0><up 0|
  cstar::Effectd detector;
  // chi_D (x) 1
  cstar::Elementd dud;
};

BombScenario build_scenario();

struct Evolution {
  // states[0] is the initial state, states[k] the state after stage k
  std::vector<cstar::Stated> states;
  const cstar::Stated &final_state() const { return states.back(); }
};

Evolution evolve(const BombScenario &s);

// Density of a state restricted to one branch, a 6x6 matrix of total trace
// equal to the branch weight.
cstar::MatrixX<double> branch_density(const cstar::Stated &f, Branch branch);

struct Outcome {
  std::string name;
  double probability;
};

struct BombReport {
  double p_detect = 0;
  double p_dud_given_detect = 0;
  // up & unexploded, right & unexploded, exploded, other
  std::array<Outcome, 4> outcomes;
  // Weight the state puts on |none 1> on the live branch just before the
  // bomb acts; the unexploding transition only matters if this is nonzero.
  double unexplode_weight = 0;
  cstar::ValidationReport complement_validation;
  cstar::ValidationReport stage_validation;
  Evolution evolution;
};

BombReport run_bomb_tester(int samples = 50, std::uint64_t seed = 0);

} // namespace catprob::bomb

#endif // CATPROB_BOMB_TESTER_HPP
