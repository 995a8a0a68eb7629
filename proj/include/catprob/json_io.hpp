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

#ifndef CATPROB_JSON_IO_HPP
#define CATPROB_JSON_IO_HPP

#include "catprob/classical_conditional.hpp"
#include "catprob/cstar.hpp"
#include "catprob/quantum_conditional.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace catprob::io {

// Every *_from_json function throws Error(ParseError) on a document of the
// wrong structure, and the data type's own error on invalid content.

// Insertion-ordered, so reports keep a readable and stable key order.
using Json = nlohmann::ordered_json;

// Rounds to 12 significant digits and flushes |x| < 1e-12 to 0; every data
// value written by the library goes through this.
double round12(double x);
// 12 significant digits without the flush, for residuals and defects.
double sig12(double x);

// Classical data. Rationals are "p/q" strings; on input integers, decimal
// strings and JSON numbers are accepted as well.
Json to_json(const Rational &r);
Rational rational_from_json(const Json &j);

Json to_json(const FiniteSet &s);
FiniteSet set_from_json(const Json &j);

// {label: weight}
Json to_json(const FiniteDistribution &d);
FiniteDistribution distribution_from_json(const Json &j);

// {"source": [...], "target": [...], "rows": {x: {y: weight}}}
Json to_json(const KleisliMap &f);
KleisliMap kleisli_from_json(const Json &j);

// {"carrier": [...], "values": {x: value}}
Json to_json(const Predicate &p);
// Either the object above or a bare {x: value} over `carrier`. Every element
// of the carrier needs a value.
Predicate predicate_from_json(const Json &j, const FiniteSet &carrier);

Json to_json(const ConditioningResult &r);
ConditioningResult conditioning_from_json(const Json &j);
Json to_json(const NTestResult &r);
NTestResult ntest_from_json(const Json &j);

// A classical model: a map and either one predicate or an n-test on
// source (x) target.
struct ClassicalModel {
  KleisliMap map;
  std::optional<Predicate> predicate;
  std::vector<Predicate> tests;
};
ClassicalModel classical_model_from_json(const Json &j);
Json to_json(const ClassicalModel &m);

// Quantum data. Complex numbers are [re, im] (a bare number is read as
// real), elements are lists of blocks given row by row, maps carry the
// vectorization tag.
Json to_json(std::complex<double> z);
std::complex<double> complex_from_json(const Json &j);

Json to_json(const cstar::Shape &s);
cstar::Shape shape_from_json(const Json &j);

Json to_json(const cstar::MatrixX<double> &m);
cstar::MatrixX<double> matrix_from_json(const Json &j, cstar::Index rows, cstar::Index cols);

Json to_json(const cstar::Elementd &a);
cstar::Elementd element_from_json(const Json &j, const cstar::Shape &shape);

// {"source", "target", "vectorization", "matrix"}
Json to_json(const cstar::PUMapd &f);
cstar::PUMapd pumap_from_json(const Json &j);

struct QuantumScenario {
  cstar::Shape a;
  cstar::Shape b;
  // B -> Z(A)
  cstar::PUMapd f;
  // on A (x) B
  cstar::Effectd e;
  int probes = 16;
  std::uint64_t seed = 0;
};
QuantumScenario scenario_from_json(const Json &j, const cstar::Tolerances &tol = {});
Json to_json(const QuantumScenario &s);

// The conditioning result with its inputs, so it can be verified alone.
Json to_json(const quantum::QConditioningResultd &r);
quantum::QConditioningResultd qresult_from_json(const Json &j, const cstar::Tolerances &tol = {});

// Throws ParseError if the vectorization tag is present and differs.
void require_vectorization(const Json &j);

} // namespace catprob::io

#endif // CATPROB_JSON_IO_HPP
