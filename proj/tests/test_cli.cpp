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
#include "catprob/json_io.hpp"
#include "catprob/worked_examples.hpp"
#include "oracles/quantum_oracles.hpp"

#include "gtest/gtest.h"

#include <filesystem>
#include <fstream>
#include <unistd.h>

namespace catprob::cli {
namespace {

namespace fs = std::filesystem;
using io::Json;

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("catprob_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string &name, const std::string &content) {
    fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string write(const std::string &name, const Json &j) { return write(name, j.dump(2)); }

  static RunConfig config(std::string sub, Format format = Format::Text) {
    RunConfig c;
    c.subcommand = std::move(sub);
    c.format = format;
    return c;
  }

  static Json json_of(const RunResult &r) { return Json::parse(r.report); }

  fs::path dir_;
};

io::ClassicalModel country() {
  auto m = examples::country_model();
  return {m.genders, m.long_hair, {}};
}

io::QuantumScenario random_scenario(std::uint64_t seed) {
  cstar::Rng rng(seed);
  cstar::Shape a{2, 1}, b{2};
  return {a, b, testing::random_center_map(rng, a, b),
          cstar::Effectd(cstar::random_effect_element<double>(rng, cstar::tensor(a, b)))};
}

TEST_F(Cli, HairExample) {
  RunConfig c = config("examples");
  c.example = "hair";
  RunResult r = run(c);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.report.find("* -> 3/7|M> + 4/7|W>"), std::string::npos) << r.report;
  EXPECT_NE(r.report.find("* -> 7/8|M> + 1/8|W>"), std::string::npos);
  EXPECT_NE(r.report.find("*: 7/15"), std::string::npos);
  EXPECT_NE(r.report.find("triangle: exact"), std::string::npos);
}

TEST_F(Cli, HairExampleJson) {
  RunConfig c = config("examples", Format::Json);
  c.example = "hair";
  Json j = json_of(run(c));
  EXPECT_EQ(j["version"], CATPROB_VERSION);
  EXPECT_EQ(j["vectorization"], cstar::kVectorization);
  EXPECT_EQ(j["result"]["cond_true"]["rows"]["*"]["M"], "3/7");
  EXPECT_EQ(j["result"]["cond_false"]["rows"]["*"]["W"], "1/8");
  EXPECT_EQ(j["result"]["marginal"]["values"]["*"], "7/15");
}

TEST_F(Cli, CountryExampleCrossEngine) {
  RunConfig c = config("examples", Format::Json);
  c.example = "country";
  Json j = json_of(run(c));
  EXPECT_EQ(j["result"]["cond_true"]["rows"]["A"]["M"], "9/97");
  EXPECT_EQ(j["result"]["cond_false"]["rows"]["B"]["W"], "1/9");
  EXPECT_LT(j["cross_engine"]["max_deviation"].get<double>(), 1e-12);
}

TEST_F(Cli, Bomb) {
  RunResult r = run(config("bomb"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.report.find("p_detect = 0.125\n"), std::string::npos) << r.report;
  EXPECT_NE(r.report.find("p_dud_given_detect = 0.0\n"), std::string::npos);
  RunConfig c = config("examples", Format::Json);
  c.example = "bomb";
  Json j = json_of(run(c));
  EXPECT_EQ(j["p_detect"].get<double>(), 0.125);
  EXPECT_EQ(j["p_dud_given_detect"].get<double>(), 0.0);
  EXPECT_EQ(j["stages"].size(), 5u);
}

TEST_F(Cli, ByteIdenticalOutput) {
  for (Format f : {Format::Text, Format::Json}) {
    EXPECT_EQ(run(config("bomb", f)).report, run(config("bomb", f)).report);
    RunConfig c = config("quantum-condition", f);
    c.input_path = write("s.json", io::to_json(random_scenario(3)));
    EXPECT_EQ(run(c).report, run(c).report);
  }
}

TEST_F(Cli, ClassicalRoundTripAndTamper) {
  RunConfig c = config("classical-condition", Format::Json);
  c.input_path = write("model.json", io::to_json(country()));
  RunResult r = run(c);
  ASSERT_EQ(r.exit_code, 0) << r.report;

  RunConfig v = config("verify", Format::Json);
  v.input_path = write("result.json", r.report);
  RunResult ok = run(v);
  EXPECT_EQ(ok.exit_code, 0) << ok.report;
  EXPECT_TRUE(json_of(ok)["verified"].get<bool>());

  Json tampered = Json::parse(r.report);
  tampered["result"]["cond_true"]["rows"]["A"] = Json{{"M", "1/2"}, {"W", "1/2"}};
  v.input_path = write("tampered.json", tampered);
  RunResult bad = run(v);
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_EQ(json_of(bad)["error"]["kind"], "TriangleViolated");
}

TEST_F(Cli, NTest) {
  const char *model = R"js({
    "map": {"source": ["A", "B"], "target": ["M", "W"],
            "rows": {"A": {"M": "9/20", "W": "11/20"}, "B": {"M": "1/2", "W": "1/2"}}},
    "tests": [{"(A,M)": "1/10", "(A,W)": "1/2", "(B,M)": "0", "(B,W)": "1/4"},
              {"(A,M)": "9/10", "(A,W)": "1/2", "(B,M)": "1", "(B,W)": "3/4"}]})js";
  RunConfig c = config("classical-condition", Format::Json);
  c.input_path = write("ntest.json", std::string(model));
  c.ntest = true;
  RunResult r = run(c);
  ASSERT_EQ(r.exit_code, 0) << r.report;
  Json j = json_of(r);
  EXPECT_EQ(j["kind"], "classical-ntest");
  EXPECT_EQ(j["result"]["degenerate_points"].size(), 0u);

  RunConfig v = config("verify");
  v.input_path = write("ntest_result.json", r.report);
  EXPECT_EQ(run(v).exit_code, 0);

  // a predicate model needs no --ntest, and the reverse
  c.input_path = write("model.json", io::to_json(country()));
  EXPECT_EQ(run(c).exit_code, 1);
  c.ntest = false;
  c.input_path = write("ntest.json", std::string(model));
  EXPECT_EQ(run(c).exit_code, 1);
}

TEST_F(Cli, NotATestExitsTwo) {
  const char *model = R"js({
    "map": {"source": ["A"], "target": ["M", "W"], "rows": {"A": {"M": "1/2", "W": "1/2"}}},
    "tests": [{"(A,M)": "1/2", "(A,W)": "1/2"}, {"(A,M)": "3/4", "(A,W)": "1/2"}]})js";
  RunConfig c = config("classical-condition", Format::Json);
  c.input_path = write("bad.json", std::string(model));
  c.ntest = true;
  RunResult r = run(c);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(json_of(r)["error"]["kind"], "NotATest");
  EXPECT_EQ(json_of(r)["status"], "error");
}

TEST_F(Cli, MalformedInputExitsOne) {
  RunConfig c = config("classical-condition", Format::Json);
  c.input_path = write("broken.json", std::string("{ not json"));
  RunResult r = run(c);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(json_of(r)["error"]["kind"], "ParseError");

  c.input_path = (dir_ / "missing.json").string();
  EXPECT_EQ(run(c).exit_code, 1);

  c.input_path = write("wrong.json", std::string(R"js({"map": {"source": "A"}})js"));
  EXPECT_EQ(run(c).exit_code, 1);

  // weights that do not sum to 1
  c.input_path = write("weights.json", std::string(R"js({
    "map": {"source": ["A"], "target": ["M"], "rows": {"A": {"M": "1/2"}}},
    "predicate": {"(A,M)": "1/2"}})js"));
  EXPECT_EQ(run(c).exit_code, 1);

  RunConfig q = config("quantum-condition", Format::Json);
  Json s = io::to_json(random_scenario(1));
  s["vectorization"] = "rows-v0";
  q.input_path = write("vec.json", s);
  EXPECT_EQ(json_of(run(q))["error"]["kind"], "ParseError");
}

TEST_F(Cli, QuantumRoundTripAndTamper) {
  RunConfig c = config("quantum-condition", Format::Json);
  c.input_path = write("scenario.json", io::to_json(random_scenario(2)));
  c.probes = 8;
  RunResult r = run(c);
  ASSERT_EQ(r.exit_code, 0) << r.report;
  Json j = json_of(r);
  EXPECT_LT(j["triangle"]["residual"].get<double>(), 1e-8);
  EXPECT_EQ(j["scenario"]["probes"], 8);
  EXPECT_TRUE(j["validation"]["cond_true"]["passed"].get<bool>());

  RunConfig v = config("verify", Format::Json);
  v.input_path = write("qresult.json", r.report);
  RunResult ok = run(v);
  EXPECT_EQ(ok.exit_code, 0) << ok.report;

  Json tampered = j;
  tampered["result"]["cond_true"]["matrix"][0][1] = Json::array({0.3, 0.1});
  v.input_path = write("qtampered.json", tampered);
  RunResult bad = run(v);
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_FALSE(json_of(bad)["checks"]["triangle"].get<bool>());
}

TEST_F(Cli, SingularMarginalExitsTwo) {
  io::QuantumScenario s = random_scenario(4);
  s.e = cstar::Effectd(cstar::Elementd::identity(s.e.shape()));
  RunConfig c = config("quantum-condition", Format::Json);
  c.input_path = write("singular.json", io::to_json(s));
  RunResult r = run(c);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(json_of(r)["error"]["kind"], "MarginalNotInvertible");
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(exit_code_for("NotATest"), 2);
  EXPECT_EQ(exit_code_for("MarginalNotInvertible"), 2);
  EXPECT_EQ(exit_code_for("DegenerateEffect"), 2);
  EXPECT_EQ(exit_code_for("ParseError"), 1);
  EXPECT_EQ(exit_code_for("InvalidEffect"), 1);
  RunConfig c = config("nonsense");
  EXPECT_EQ(run(c).exit_code, 1);
}

TEST(JsonIo, RoundTrips) {
  auto m = country();
  io::ClassicalModel back = io::classical_model_from_json(io::to_json(m));
  EXPECT_EQ(back.map, m.map);
  EXPECT_EQ(*back.predicate, *m.predicate);

  EXPECT_EQ(io::rational_from_json(Json(0.125)), make_rational(1, 8));
  EXPECT_EQ(io::rational_from_json(Json(3)), Rational(3));
  EXPECT_EQ(io::rational_from_json(Json("6/8")), make_rational(3, 4));
  EXPECT_THROW(io::rational_from_json(Json::array()), Error);

  cstar::Rng rng(5);
  cstar::Shape s{2, 1};
  auto e = cstar::random_element<double>(rng, s);
  auto back_e = io::element_from_json(io::to_json(e), s);
  EXPECT_LT(cstar::distance(e, back_e), 1e-11);
  EXPECT_THROW(io::element_from_json(io::to_json(e), cstar::Shape{2}), Error);
  EXPECT_EQ(io::shape_from_json(io::to_json(s)), s);
  EXPECT_EQ(io::complex_from_json(Json(2.5)), std::complex<double>(2.5, 0));
  EXPECT_EQ(io::round12(1e-17), 0.0);
  EXPECT_EQ(io::round12(1.0 / 3), 0.333333333333);
}

} // namespace
} // namespace catprob::cli
