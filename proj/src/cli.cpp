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

#include "catprob/cli.hpp"

#include "catprob/bomb_tester.hpp"
#include "catprob/embedding.hpp"
#include "catprob/json_io.hpp"
#include "catprob/worked_examples.hpp"

#include <Eigen/Eigenvalues>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace catprob::cli {

namespace {

using io::Json;
using C = std::complex<double>;

constexpr double kTriangleTolerance = 1e-8;
// Recomputed quantities must match a stored report up to its 12 digits.
constexpr double kStoredTolerance = 1e-9;

struct Report {
  Json json;
  std::ostringstream text;
  int exit_code = 0;
};

// 12 significant digits; integral values keep a trailing ".0". Residuals
// and defects pass exact = true so tiny values are not flushed to 0.
std::string fmt(double x, bool exact = false) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", exact ? io::sig12(x) : io::round12(x));
  std::string s(buf);
  if (s.find_first_of(".en") == std::string::npos) {
    s += ".0";
  }
  return s;
}

std::string fmt(C z) {
  double im = io::round12(z.imag());
  if (im == 0) {
    return fmt(z.real());
  }
  std::string s = io::round12(z.real()) == 0 ? "" : fmt(z.real()) + (im > 0 ? "+" : "");
  return s + fmt(im) + "i";
}

Report start(const std::string &command) {
  Report r;
  r.json = Json{{"tool", "catprob"},
                {"version", CATPROB_VERSION},
                {"vectorization", cstar::kVectorization},
                {"command", command},
                {"status", "ok"}};
  r.text << "catprob " << CATPROB_VERSION << " (" << cstar::kVectorization << ")\n"
         << command << "\n";
  return r;
}

void fail(Report &r, ErrorKind kind, const std::string &message) {
  r.json["status"] = "error";
  r.json["error"] = Json{{"kind", std::string(to_string(kind))}, {"message", message}};
  r.text << "error: " << message << "\n";
  r.exit_code = exit_code_for(to_string(kind));
}

Json read_json(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorKind::ParseError, "'" + path + "' is not JSON: " + e.what());
  }
}

const std::string &require_input(const RunConfig &c, const char *flag) {
  if (!c.input_path) {
    throw Error(ErrorKind::ParseError, std::string(flag) + " is required");
  }
  return *c.input_path;
}

cstar::Tolerances tolerances(const RunConfig &c) {
  cstar::Tolerances t;
  if (c.tol_invertible) {
    t.invertible = *c.tol_invertible;
  }
  return t;
}

double triangle_tolerance(const RunConfig &c) {
  return c.tol_triangle.value_or(kTriangleTolerance);
}

Json to_json(const cstar::ValidationReport &v) {
  return Json{{"samples", v.samples},
              {"unital_defect", io::sig12(v.unital_defect)},
              {"worst_min_eigenvalue", io::sig12(v.worst_min_eigenvalue)},
              {"worst_norm_ratio", io::sig12(v.worst_norm_ratio)},
              {"unital", v.unital},
              {"positive", v.positive},
              {"contractive", v.contractive},
              {"passed", v.passed()}};
}

// ---- classical ----

void write_map(std::ostream &os, const KleisliMap &f) {
  for (std::size_t i = 0; i < f.source().size(); ++i) {
    os << "  " << f.source()[i] << " -> " << f.row(i) << "\n";
  }
}

void write_predicate(std::ostream &os, const Predicate &p) {
  for (std::size_t i = 0; i < p.carrier().size(); ++i) {
    os << "  " << p.carrier()[i] << ": " << to_string(p.value(i)) << "\n";
  }
}

void classical(Report &r, const io::ClassicalModel &m, bool ntest) {
  const KleisliMap &f = m.map;
  r.text << "model: |X| = " << f.source().size() << ", |Y| = " << f.target().size() << "\n";
  if (!ntest) {
    if (!m.predicate) {
      throw Error(ErrorKind::ParseError, "model has 'tests'; pass --ntest");
    }
    ConditioningResult c = condition(f, *m.predicate);
    const bool ok = verify_triangle(c);
    r.json["kind"] = "classical";
    r.json["model"] = io::to_json(m);
    r.json["result"] = io::to_json(c);
    r.json["triangle"] = ok ? "exact" : "violated";
    r.text << "marginal gr(f)*(p):\n";
    write_predicate(r.text, c.marginal);
    r.text << "f|p:\n";
    write_map(r.text, c.cond_true);
    r.text << "f|p~:\n";
    write_map(r.text, c.cond_false);
    r.text << "joint:\n";
    write_map(r.text, c.joint);
    r.text << "degenerate points:";
    for (const Label &x : c.degenerate_points) {
      r.text << " " << x;
    }
    r.text << (c.degenerate_points.empty() ? " none\n" : "\n");
    r.text << "triangle: " << (ok ? "exact" : "violated") << "\n";
    if (!ok) {
      fail(r, ErrorKind::TriangleViolated, "triangle does not commute");
    }
    return;
  }
  if (m.predicate) {
    throw Error(ErrorKind::ParseError, "--ntest needs a model with 'tests'");
  }
  NTestResult n = condition_ntest(f, m.tests);
  const bool ok = verify_ntest(n);
  r.json["kind"] = "classical-ntest";
  r.json["model"] = io::to_json(m);
  r.json["result"] = io::to_json(n);
  r.json["triangle"] = ok ? "exact" : "violated";
  for (std::size_t i = 0; i < n.conditionals.size(); ++i) {
    r.text << "test " << i + 1 << " marginal:\n";
    write_predicate(r.text, n.marginals[i]);
    r.text << "test " << i + 1 << " conditional:\n";
    write_map(r.text, n.conditionals[i]);
  }
  r.text << "joint:\n";
  write_map(r.text, n.joint);
  r.text << "degenerate points:";
  for (const auto &[i, x] : n.degenerate_points) {
    r.text << " (test " << i + 1 << ", " << x << ")";
  }
  r.text << (n.degenerate_points.empty() ? " none\n" : "\n");
  r.text << "triangle: " << (ok ? "exact" : "violated") << "\n";
  if (!ok) {
    fail(r, ErrorKind::TriangleViolated, "n-test triangle does not commute");
  }
}

// The country model pushed through the quantum engine on C^X.
void cross_engine(Report &r, const examples::CountryModel &m) {
  ConditioningResult exact = condition(m.genders, m.long_hair);
  const FiniteSet &x = m.genders.source(), &y = m.genders.target();
  auto q = quantum::condition_param(commutative_shape(x), to_pumap(m.genders),
                                    to_effect(m.long_hair, tensor(x, y)));
  auto gap = [](const cstar::PUMapd &a, const cstar::PUMapd &b) {
    return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
  };
  double worst = std::max(gap(q.cond_true, to_pumap(exact.cond_true)),
                          gap(q.cond_false, to_pumap(exact.cond_false)));
  r.json["cross_engine"] = Json{{"max_deviation", io::sig12(worst)},
                                {"quantum_residual", io::sig12(q.residual)}};
  r.text << "quantum engine on commutative shapes: max deviation " << fmt(worst, true)
         << ", residual " << fmt(q.residual, true) << "\n";
}

// ---- quantum ----

void write_matrix(std::ostream &os, const cstar::MatrixX<double> &m) {
  for (cstar::Index i = 0; i < m.rows(); ++i) {
    os << "  ";
    for (cstar::Index j = 0; j < m.cols(); ++j) {
      os << (j ? "  " : "") << fmt(m(i, j));
    }
    os << "\n";
  }
}

void quantum_condition(Report &r, io::QuantumScenario s, const RunConfig &c) {
  if (c.probes) {
    s.probes = *c.probes;
  }
  if (c.seed) {
    s.seed = *c.seed;
  }
  const double tol = triangle_tolerance(c);
  auto q = quantum::condition_param(s.a, s.f, s.e, s.probes, s.seed, tolerances(c));
  const bool ok = q.residual <= tol;
  r.json["kind"] = "quantum";
  r.json["scenario"] = io::to_json(s);
  r.json["result"] = io::to_json(q);
  r.json["triangle"] =
      Json{{"residual", io::sig12(q.residual)}, {"tolerance", tol}, {"passed", ok}};
  r.json["validation"] = Json{{"cond_true", to_json(cstar::pu_validate(q.cond_true, 50, s.seed))},
                              {"cond_false", to_json(cstar::pu_validate(q.cond_false, 50, s.seed))}};
  r.text << "A = " << s.a << ", B = " << s.b << ", probes " << s.probes << ", seed " << s.seed
         << "\n";
  r.text << "marginal gr(f)(e) spectrum:";
  for (double x : cstar::spectrum(q.marginal_effect.element())) {
    r.text << " " << fmt(x);
  }
  r.text << "\nf|e matrix:\n";
  write_matrix(r.text, q.cond_true.matrix());
  r.text << "f|e~ matrix:\n";
  write_matrix(r.text, q.cond_false.matrix());
  r.text << "triangle residual: " << fmt(q.residual, true) << (ok ? " (ok)" : " (too large)") << "\n";
  if (!ok) {
    fail(r, ErrorKind::TriangleViolated,
         "triangle residual " + fmt(q.residual, true) + " exceeds " + fmt(tol, true));
  }
}

// ---- verify ----

void verify(Report &r, const Json &doc, const RunConfig &c) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw Error(ErrorKind::ParseError, "not a conditioning report: no 'kind'");
  }
  if (!doc.contains("result") || !doc.contains(doc["kind"] == "quantum" ? "scenario" : "model")) {
    throw Error(ErrorKind::ParseError, "report lacks its inputs or result");
  }
  const std::string kind = doc["kind"];
  Json checks = Json::object();
  bool ok = true;
  auto check = [&](const char *name, bool pass) {
    checks[name] = pass;
    r.text << name << ": " << (pass ? "ok" : "FAILED") << "\n";
    ok = ok && pass;
  };
  r.json["kind"] = kind;

  if (kind == "classical") {
    io::ClassicalModel m = io::classical_model_from_json(doc["model"]);
    if (!m.predicate) {
      throw Error(ErrorKind::ParseError, "classical report without a predicate");
    }
    ConditioningResult stored = io::conditioning_from_json(doc["result"]);
    check("triangle", verify_triangle(stored));
    check("joint_matches_model", stored.joint == joint_map(m.map, *m.predicate));
    check("marginal_matches_model", stored.marginal == subst(graph(m.map), *m.predicate));
  } else if (kind == "classical-ntest") {
    io::ClassicalModel m = io::classical_model_from_json(doc["model"]);
    NTestResult stored = io::ntest_from_json(doc["result"]);
    NTestResult fresh = condition_ntest(m.map, m.tests);
    check("triangle", verify_ntest(stored));
    check("joint_matches_model", stored.joint == fresh.joint);
    check("marginals_match_model", stored.marginals == fresh.marginals);
  } else if (kind == "quantum") {
    const cstar::Tolerances tol = tolerances(c);
    io::QuantumScenario s = io::scenario_from_json(doc["scenario"], tol);
    auto stored = io::qresult_from_json(doc["result"], tol);
    const double residual = quantum::verify_triangle_q(stored, s.probes, c.seed.value_or(s.seed), tol);
    const auto joint = quantum::joint_q(s.a, s.f, s.e, tol);
    const double joint_gap = (joint.matrix() - stored.joint.matrix()).cwiseAbs().maxCoeff();
    const auto marginal = cstar::graph_cstar(s.a, s.f)(s.e.element());
    const double marginal_gap =
        static_cast<double>(cstar::distance(marginal, stored.marginal_effect.element()));
    r.json["residual"] = io::sig12(residual);
    r.json["joint_deviation"] = io::sig12(joint_gap);
    r.json["marginal_deviation"] = io::sig12(marginal_gap);
    r.text << "residual " << fmt(residual, true) << ", joint deviation " << fmt(joint_gap, true)
           << ", marginal deviation " << fmt(marginal_gap, true) << "\n";
    check("triangle", residual <= triangle_tolerance(c));
    check("joint_matches_scenario", joint_gap <= kStoredTolerance);
    check("marginal_matches_scenario", marginal_gap <= kStoredTolerance);
  } else {
    throw Error(ErrorKind::ParseError, "unknown report kind '" + kind + "'");
  }
  r.json["checks"] = checks;
  r.json["verified"] = ok;
  r.text << (ok ? "verified\n" : "NOT verified\n");
  if (!ok) {
    fail(r, ErrorKind::TriangleViolated, "stored result does not verify");
  }
}

// ---- bomb ----

const char *const kKets[] = {"|up,0>", "|up,1>", "|right,0>", "|right,1>", "|none,0>", "|none,1>"};

// The normalized vector of a pure branch, phase fixed so the first nonzero
// amplitude is positive; empty when the branch is mixed or absent.
Eigen::VectorXcd branch_ket(const cstar::MatrixX<double> &rho, double weight) {
  if (weight < 1e-12) {
    return {};
  }
  Eigen::SelfAdjointEigenSolver<cstar::MatrixX<double>> es(rho / weight);
  const Eigen::Index top = es.eigenvalues().size() - 1;
  if (std::abs(es.eigenvalues()(top) - 1) > 1e-9) {
    return {};
  }
  Eigen::VectorXcd v = es.eigenvectors().col(top);
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (std::abs(v(k)) > 1e-9) {
      v *= std::conj(v(k)) / std::abs(v(k));
      break;
    }
  }
  return v;
}

void bomb(Report &r, const RunConfig &c) {
  const std::uint64_t seed = c.seed.value_or(0);
  bomb::BombReport b = bomb::run_bomb_tester(50, seed);
  const char *names[] = {"initial", "first mirror", "light hits bomb", "opaque mirrors",
                         "last mirror"};
  Json stages = Json::array();
  r.text << "algebra C({L,D}) (x) M3 (x) M2 = [6,6], 72-dimensional\n";
  for (std::size_t k = 0; k < b.evolution.states.size(); ++k) {
    Json branches = Json::object();
    r.text << names[k] << "\n";
    for (auto [branch, label] : {std::pair{bomb::kLive, "L"}, std::pair{bomb::kDud, "D"}}) {
      cstar::MatrixX<double> rho = bomb::branch_density(b.evolution.states[k], branch);
      const double w = rho.trace().real();
      Json entry{{"weight", io::round12(w)}};
      r.text << "  " << label << " (weight " << fmt(w) << "): ";
      Eigen::VectorXcd v = branch_ket(rho, w);
      if (v.size() == 0) {
        entry["density"] = io::to_json(rho);
        r.text << "mixed\n";
      } else {
        Json ket = Json::object();
        bool first = true;
        for (Eigen::Index i = 0; i < v.size(); ++i) {
          if (std::abs(v(i)) > 1e-12) {
            ket[kKets[i]] = io::to_json(v(i));
            r.text << (first ? "" : " + ") << fmt(v(i)) << kKets[i];
            first = false;
          }
        }
        entry["ket"] = ket;
        r.text << "\n";
      }
      branches[label] = entry;
    }
    stages.push_back(Json{{"name", names[k]}, {"branches", branches}});
  }
  Json outcomes = Json::array();
  r.text << "outcomes:\n";
  for (const auto &o : b.outcomes) {
    outcomes.push_back(Json{{"name", o.name}, {"probability", io::round12(o.probability)}});
    r.text << "  " << o.name << ": " << fmt(o.probability) << "\n";
  }
  r.json["kind"] = "bomb";
  r.json["seed"] = seed;
  r.json["p_detect"] = io::round12(b.p_detect);
  r.json["p_dud_given_detect"] = io::round12(b.p_dud_given_detect);
  r.json["stages"] = stages;
  r.json["outcomes"] = outcomes;
  r.json["unexplode_weight"] = io::round12(b.unexplode_weight);
  r.json["validation"] = Json{{"stage_maps", to_json(b.stage_validation)},
                              {"complement_state", to_json(b.complement_validation)}};
  r.text << "unexploding transition weight before the bomb: " << fmt(b.unexplode_weight) << "\n"
         << "stage maps positive unital on samples: "
         << (b.stage_validation.passed() ? "yes" : "NO") << "\n"
         << "f|e~ is a state on samples: " << (b.complement_validation.passed() ? "yes" : "NO")
         << "\n"
         << "p_detect = " << fmt(b.p_detect) << "\n"
         << "p_dud_given_detect = " << fmt(b.p_dud_given_detect) << "\n";
}

void dispatch(Report &r, const RunConfig &c) {
  const std::string &cmd = c.subcommand;
  if (cmd == "examples") {
    if (c.example == "hair") {
      auto h = examples::hair_model();
      classical(r, io::ClassicalModel{h.prior, h.long_hair_joint, {}}, false);
    } else if (c.example == "country") {
      auto m = examples::country_model();
      classical(r, io::ClassicalModel{m.genders, m.long_hair, {}}, false);
      cross_engine(r, m);
    } else if (c.example == "bomb") {
      bomb(r, c);
    } else {
      throw Error(ErrorKind::ParseError, "unknown example '" + c.example + "'");
    }
  } else if (cmd == "classical-condition") {
    classical(r, io::classical_model_from_json(read_json(require_input(c, "--model"))), c.ntest);
  } else if (cmd == "quantum-condition") {
    Json doc = read_json(require_input(c, "--scenario"));
    quantum_condition(r, io::scenario_from_json(doc, tolerances(c)), c);
  } else if (cmd == "verify") {
    verify(r, read_json(require_input(c, "--result")), c);
  } else if (cmd == "bomb") {
    bomb(r, c);
  } else {
    throw Error(ErrorKind::ParseError, "unknown subcommand '" + cmd + "'");
  }
}

} // namespace

int exit_code_for(std::string_view kind) {
  for (ErrorKind k : {ErrorKind::NotATest, ErrorKind::MarginalNotInvertible,
                      ErrorKind::DegenerateEffect, ErrorKind::TriangleViolated}) {
    if (kind == to_string(k)) {
      return 2;
    }
  }
  return 1;
}

RunResult run(const RunConfig &config) {
  std::string command = config.subcommand;
  if (config.subcommand == "examples") {
    command += " " + config.example;
  }
  Report r = start(command);
  try {
    dispatch(r, config);
  } catch (const Error &e) {
    fail(r, e.kind(), e.what());
  } catch (const nlohmann::json::exception &e) {
    fail(r, ErrorKind::ParseError, e.what());
  }
  std::string out = config.format == Format::Json ? r.json.dump(2) + "\n" : r.text.str();
  return {r.exit_code, std::move(out)};
}

} // namespace catprob::cli
