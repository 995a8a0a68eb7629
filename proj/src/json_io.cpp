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

#include "catprob/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace catprob::io {

namespace {

using cstar::Elementd;
using cstar::Index;
using cstar::MatrixX;
using cstar::PUMapd;
using cstar::Shape;

[[noreturn]] void fail(const std::string &what) { throw Error(ErrorKind::ParseError, what); }

const Json &field(const Json &j, const char *key) {
  if (!j.is_object()) {
    fail(std::string("expected an object holding '") + key + "'");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    fail(std::string("missing field '") + key + "'");
  }
  return *it;
}

const Json &array(const Json &j, const std::string &what) {
  if (!j.is_array()) {
    fail(what + " must be an array");
  }
  return j;
}

const Json &object(const Json &j, const std::string &what) {
  if (!j.is_object()) {
    fail(what + " must be an object");
  }
  return j;
}

std::string text(const Json &j, const std::string &what) {
  if (!j.is_string()) {
    fail(what + " must be a string");
  }
  return j.get<std::string>();
}

long long integer(const Json &j, const std::string &what) {
  if (!j.is_number_integer()) {
    fail(what + " must be an integer");
  }
  return j.get<long long>();
}

double number(const Json &j, const std::string &what) {
  if (!j.is_number()) {
    fail(what + " must be a number");
  }
  return j.get<double>();
}

Label label(const Json &j) { return parse_label(text(j, "label")); }


Json labels(const FiniteSet &s) {
  Json out = Json::array();
  for (const Label &x : s) {
    out.push_back(x.str());
  }
  return out;
}

} // namespace

double round12(double x) { return std::abs(x) < 1e-12 ? 0.0 : sig12(x); }

double sig12(double x) {
  if (!std::isfinite(x)) {
    return x;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

// ---- classical ----

Json to_json(const Rational &r) { return to_string(r); }

Rational rational_from_json(const Json &j) {
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return Rational(j.get<long>());
  }
  if (j.is_number_float()) {
    // the shortest decimal that round-trips, read exactly
    return parse_rational(j.dump());
  }
  fail("a rational must be a string such as \"3/7\" or a number");
}

Json to_json(const FiniteSet &s) { return labels(s); }

FiniteSet set_from_json(const Json &j) {
  std::vector<Label> xs;
  for (const Json &x : array(j, "set")) {
    xs.push_back(label(x));
  }
  return FiniteSet(std::move(xs));
}

Json to_json(const FiniteDistribution &d) {
  Json out = Json::object();
  for (const auto &[x, w] : d) {
    out[x.str()] = to_string(w);
  }
  return out;
}

FiniteDistribution distribution_from_json(const Json &j) {
  FiniteDistribution::storage w;
  for (const auto &[k, v] : object(j, "distribution").items()) {
    Label x = parse_label(k);
    if (!w.emplace(x, rational_from_json(v)).second) {
      fail("label '" + k + "' appears twice");
    }
  }
  return FiniteDistribution::from_map(std::move(w));
}

Json to_json(const KleisliMap &f) {
  Json rows = Json::object();
  for (std::size_t i = 0; i < f.source().size(); ++i) {
    rows[f.source()[i].str()] = to_json(f.row(i));
  }
  return Json{{"source", labels(f.source())}, {"target", labels(f.target())}, {"rows", rows}};
}

KleisliMap kleisli_from_json(const Json &j) {
  FiniteSet source = set_from_json(field(j, "source"));
  FiniteSet target = set_from_json(field(j, "target"));
  const Json &rows = object(field(j, "rows"), "rows");
  std::vector<FiniteDistribution> out;
  for (const Label &x : source) {
    auto it = rows.find(x.str());
    if (it == rows.end()) {
      fail("no row for '" + x.str() + "'");
    }
    out.push_back(distribution_from_json(*it));
  }
  if (rows.size() != source.size()) {
    fail("rows name labels outside the source");
  }
  return KleisliMap(std::move(source), std::move(target), std::move(out));
}

Json to_json(const Predicate &p) {
  Json values = Json::object();
  for (std::size_t i = 0; i < p.carrier().size(); ++i) {
    values[p.carrier()[i].str()] = to_string(p.value(i));
  }
  return Json{{"carrier", labels(p.carrier())}, {"values", values}};
}

Predicate predicate_from_json(const Json &j, const FiniteSet &carrier) {
  const bool wrapped = j.is_object() && j.contains("values");
  if (wrapped && j.contains("carrier") && !(set_from_json(j["carrier"]) == carrier)) {
    throw Error(ErrorKind::SetMismatch, "predicate carrier does not match the model");
  }
  const Json &values = object(wrapped ? j["values"] : j, "predicate values");
  std::vector<Rational> out;
  for (const Label &x : carrier) {
    auto it = values.find(x.str());
    if (it == values.end()) {
      fail("predicate has no value for '" + x.str() + "'");
    }
    out.push_back(rational_from_json(*it));
  }
  if (values.size() != carrier.size()) {
    fail("predicate names labels outside its carrier");
  }
  return Predicate(carrier, std::move(out));
}

Json to_json(const ConditioningResult &r) {
  return Json{{"cond_true", to_json(r.cond_true)},
              {"cond_false", to_json(r.cond_false)},
              {"marginal", to_json(r.marginal)},
              {"joint", to_json(r.joint)},
              {"degenerate_points", labels(FiniteSet(r.degenerate_points))}};
}

ConditioningResult conditioning_from_json(const Json &j) {
  KleisliMap ct = kleisli_from_json(field(j, "cond_true"));
  Predicate m = predicate_from_json(field(j, "marginal"), ct.source());
  std::vector<Label> degenerate;
  if (j.contains("degenerate_points")) {
    for (const Json &x : array(j["degenerate_points"], "degenerate_points")) {
      degenerate.push_back(label(x));
    }
  }
  return {std::move(ct), kleisli_from_json(field(j, "cond_false")), std::move(m),
          kleisli_from_json(field(j, "joint")), std::move(degenerate)};
}

Json to_json(const NTestResult &r) {
  Json conds = Json::array(), margs = Json::array(), degenerate = Json::array();
  for (const KleisliMap &c : r.conditionals) {
    conds.push_back(to_json(c));
  }
  for (const Predicate &m : r.marginals) {
    margs.push_back(to_json(m));
  }
  for (const auto &[i, x] : r.degenerate_points) {
    degenerate.push_back(Json{{"test", i}, {"point", x.str()}});
  }
  return Json{{"conditionals", conds},
              {"marginals", margs},
              {"joint", to_json(r.joint)},
              {"degenerate_points", degenerate}};
}

NTestResult ntest_from_json(const Json &j) {
  NTestResult r{{}, {}, kleisli_from_json(field(j, "joint")), {}};
  for (const Json &c : array(field(j, "conditionals"), "conditionals")) {
    r.conditionals.push_back(kleisli_from_json(c));
  }
  for (const Json &m : array(field(j, "marginals"), "marginals")) {
    r.marginals.push_back(predicate_from_json(m, r.joint.source()));
  }
  if (j.contains("degenerate_points")) {
    for (const Json &d : array(j["degenerate_points"], "degenerate_points")) {
      long long i = integer(field(d, "test"), "test index");
      if (i < 0) {
        fail("negative test index");
      }
      r.degenerate_points.emplace_back(static_cast<std::size_t>(i), label(field(d, "point")));
    }
  }
  return r;
}

ClassicalModel classical_model_from_json(const Json &j) {
  ClassicalModel m{kleisli_from_json(field(j, "map")), std::nullopt, {}};
  const FiniteSet carrier = tensor(m.map.source(), m.map.target());
  const bool one = j.contains("predicate"), many = j.contains("tests");
  if (one == many) {
    fail("a model needs exactly one of 'predicate' and 'tests'");
  }
  if (one) {
    m.predicate = predicate_from_json(j["predicate"], carrier);
  } else {
    for (const Json &t : array(j["tests"], "tests")) {
      m.tests.push_back(predicate_from_json(t, carrier));
    }
  }
  return m;
}

Json to_json(const ClassicalModel &m) {
  Json out{{"map", to_json(m.map)}};
  if (m.predicate) {
    out["predicate"] = to_json(*m.predicate);
  } else {
    Json tests = Json::array();
    for (const Predicate &t : m.tests) {
      tests.push_back(to_json(t));
    }
    out["tests"] = tests;
  }
  return out;
}

// ---- quantum ----

Json to_json(std::complex<double> z) { return Json::array({round12(z.real()), round12(z.imag())}); }

std::complex<double> complex_from_json(const Json &j) {
  if (j.is_number()) {
    return {j.get<double>(), 0.0};
  }
  if (!j.is_array() || j.size() != 2) {
    fail("a complex number must be [re, im] or a number");
  }
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

Json to_json(const Shape &s) {
  Json out = Json::array();
  for (Index n : s.blocks()) {
    out.push_back(n);
  }
  return out;
}

Shape shape_from_json(const Json &j) {
  std::vector<Index> blocks;
  for (const Json &n : array(j, "shape")) {
    blocks.push_back(static_cast<Index>(integer(n, "block size")));
  }
  return Shape(std::move(blocks));
}

Json to_json(const MatrixX<double> &m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      row.push_back(to_json(m(r, c)));
    }
    rows.push_back(row);
  }
  return rows;
}

MatrixX<double> matrix_from_json(const Json &j, Index rows, Index cols) {
  array(j, "matrix");
  if (static_cast<Index>(j.size()) != rows) {
    fail("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  }
  MatrixX<double> m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json &row = array(j[static_cast<std::size_t>(r)], "matrix row");
    if (static_cast<Index>(row.size()) != cols) {
      fail("matrix row has " + std::to_string(row.size()) + " entries, expected " +
           std::to_string(cols));
    }
    for (Index c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

Json to_json(const Elementd &a) {
  Json blocks = Json::array();
  for (const auto &b : a.blocks()) {
    blocks.push_back(to_json(b));
  }
  return blocks;
}

Elementd element_from_json(const Json &j, const Shape &shape) {
  array(j, "element");
  if (static_cast<Index>(j.size()) != shape.block_count()) {
    fail("element has " + std::to_string(j.size()) + " blocks, shape " + shape.str() + " needs " +
         std::to_string(shape.block_count()));
  }
  std::vector<MatrixX<double>> blocks;
  for (Index i = 0; i < shape.block_count(); ++i) {
    blocks.push_back(matrix_from_json(j[static_cast<std::size_t>(i)], shape.block_dim(i),
                                      shape.block_dim(i)));
  }
  return Elementd(shape, std::move(blocks));
}

void require_vectorization(const Json &j) {
  if (j.is_object() && j.contains("vectorization") &&
      text(j["vectorization"], "vectorization") != cstar::kVectorization) {
    fail("unsupported vectorization '" + j["vectorization"].get<std::string>() + "', expected " +
         cstar::kVectorization);
  }
}

Json to_json(const PUMapd &f) {
  return Json{{"source", to_json(f.source())},
              {"target", to_json(f.target())},
              {"vectorization", cstar::kVectorization},
              {"matrix", to_json(f.matrix())}};
}

PUMapd pumap_from_json(const Json &j) {
  require_vectorization(j);
  Shape source = shape_from_json(field(j, "source"));
  Shape target = shape_from_json(field(j, "target"));
  auto m = matrix_from_json(field(j, "matrix"), target.dimension(), source.dimension());
  return PUMapd(std::move(source), std::move(target), std::move(m));
}

QuantumScenario scenario_from_json(const Json &j, const cstar::Tolerances &tol) {
  require_vectorization(j);
  Shape a = shape_from_json(field(j, "A"));
  Shape b = shape_from_json(field(j, "B"));
  const Json &fj = field(j, "f");
  PUMapd f = fj.is_object()
                 ? pumap_from_json(fj)
                 : PUMapd(b, cstar::center_shape(a),
                          matrix_from_json(fj, cstar::center_shape(a).dimension(), b.dimension()));
  cstar::Effectd e(element_from_json(field(j, "e"), cstar::tensor(a, b)), tol);
  QuantumScenario s{std::move(a), std::move(b), std::move(f), std::move(e)};
  if (j.contains("probes")) {
    long long p = integer(j["probes"], "probes");
    if (p < 0) {
      fail("probes must be non-negative");
    }
    s.probes = static_cast<int>(p);
  }
  if (j.contains("seed")) {
    long long seed = integer(j["seed"], "seed");
    if (seed < 0) {
      fail("seed must be non-negative");
    }
    s.seed = static_cast<std::uint64_t>(seed);
  }
  return s;
}

Json to_json(const QuantumScenario &s) {
  return Json{{"vectorization", cstar::kVectorization},
              {"A", to_json(s.a)},
              {"B", to_json(s.b)},
              {"f", to_json(s.f.matrix())},
              {"e", to_json(s.e.element())},
              {"probes", s.probes},
              {"seed", s.seed}};
}

Json to_json(const quantum::QConditioningResultd &r) {
  Json spectrum = Json::array();
  for (double x : cstar::spectrum(r.marginal_effect.element())) {
    spectrum.push_back(round12(x));
  }
  return Json{{"vectorization", cstar::kVectorization},
              {"A", to_json(r.algebra)},
              {"B", to_json(r.cond_true.source())},
              {"marginal_effect", to_json(r.marginal_effect.element())},
              {"marginal_spectrum", spectrum},
              {"cond_true", to_json(r.cond_true)},
              {"cond_false", to_json(r.cond_false)},
              {"joint", to_json(r.joint)},
              {"residual", sig12(r.residual)}};
}

quantum::QConditioningResultd qresult_from_json(const Json &j, const cstar::Tolerances &tol) {
  require_vectorization(j);
  Shape a = shape_from_json(field(j, "A"));
  Shape b = shape_from_json(field(j, "B"));
  PUMapd ct = pumap_from_json(field(j, "cond_true"));
  PUMapd cf = pumap_from_json(field(j, "cond_false"));
  PUMapd joint = pumap_from_json(field(j, "joint"));
  for (const PUMapd *m : {&ct, &cf}) {
    cstar::require_same_shape(m->source(), b, "conditional source");
    cstar::require_same_shape(m->target(), a, "conditional target");
  }
  cstar::require_same_shape(joint.source(), cstar::direct_sum(b, b), "joint source");
  cstar::require_same_shape(joint.target(), a, "joint target");
  cstar::Effectd m(element_from_json(field(j, "marginal_effect"), a), tol);
  double residual = j.contains("residual") ? number(j["residual"], "residual") : 0.0;
  return {std::move(a), std::move(ct), std::move(cf), std::move(m), std::move(joint), residual};
}

} // namespace catprob::io
