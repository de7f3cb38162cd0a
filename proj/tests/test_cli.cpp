#include "generators.hpp"

#include "nsk/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace nsk;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(JobSpec job) {
  std::ostringstream out, err;
  int code = run_command(job, out, err);
  return {code, out.str(), err.str()};
}

JobSpec job(std::string command, std::string ring, int e) {
  JobSpec j;
  j.command = std::move(command);
  j.ring = std::move(ring);
  j.e = e;
  return j;
}

std::size_t parse_error_position(const std::string& s) {
  try {
    parse_ring_spec(s);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for " << s;
  return 0;
}

} // namespace

TEST(ParseRingSpec, Examples) {
  RingSpec a = parse_ring_spec("x=1,y=3");
  EXPECT_EQ(a.weights(), (std::vector<int>{1, 3}));
  EXPECT_EQ(a.characteristic(), 32003u);
  EXPECT_EQ(parse_ring_spec("x=1").num_vars(), 1u);
  RingSpec c = parse_ring_spec("x1=1,x2=2,y=2@101");
  EXPECT_EQ(c.weights(), (std::vector<int>{1, 2, 2}));
  EXPECT_EQ(c.names(), (std::vector<std::string>{"x1", "x2", "y"}));
  EXPECT_EQ(c.characteristic(), 101u);
}

TEST(ParseRingSpec, ErrorsCarryPositions) {
  EXPECT_EQ(parse_error_position("x=1,x=2"), 4u);
  EXPECT_EQ(parse_error_position("x=0"), 2u);
  EXPECT_EQ(parse_error_position("x=1,y=-2"), 6u);
  EXPECT_EQ(parse_error_position("x=1@32004"), 4u);
  EXPECT_EQ(parse_error_position("x=1,"), 4u);
  EXPECT_EQ(parse_error_position("x1"), 2u);
  EXPECT_EQ(parse_error_position("x=1y"), 3u);
  EXPECT_EQ(parse_error_position(""), 0u);
}

TEST(ParseRingSpec, RoundTrip) {
  gen::Engine rng(81);
  const std::vector<std::uint32_t> primes{2, 3, 101, 32003, 2147483647u};
  for (int trial = 0; trial < 200; ++trial) {
    auto w = gen::weights(rng, 6, 20);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < w.size(); ++i)
      names.push_back(std::string(1, char('a' + gen::uniform(rng, 0, 3))) +
                      std::to_string(i));
    RingSpec s(names, w, primes[gen::uniform(rng, 0, 4)]);
    EXPECT_EQ(parse_ring_spec(render_ring_spec(s)), s);
  }
}

TEST(ParseRingSpec, EnvironmentCharacteristic) {
  ::setenv("NSKOSZUL_CHAR", "101", 1);
  EXPECT_EQ(parse_ring_spec("x=1").characteristic(), 101u);
  EXPECT_EQ(parse_ring_spec("x=1@7").characteristic(), 7u);
  ::setenv("NSKOSZUL_CHAR", "100", 1);
  EXPECT_THROW(parse_ring_spec("x=1"), ParseError);
  ::unsetenv("NSKOSZUL_CHAR");
  EXPECT_EQ(parse_ring_spec("x=1").characteristic(), 32003u);
}

TEST(RunCommand, KoszulExample) {
  Result r = run(job("koszul", "x=1,y=3", 5));
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("gr_linear: true"), std::string::npos);

  JobSpec j = job("koszul", "x=1,y=3", 5);
  j.format = OutputFormat::json;
  Json out = Json::parse(run(j).out);
  std::vector<std::string> keys;
  for (auto& [k, v] : out.items())
    keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"ring", "e", "bound", "betti", "verdicts"}));
  EXPECT_EQ(out["betti"], Json::parse(R"([{"i":0,"j":0,"rank":3},{"i":1,"j":1,"rank":2}])"));
  EXPECT_EQ(out["verdicts"]["construction_match"], true);
  EXPECT_EQ(out["ring"]["char"], 32003);
}

TEST(RunCommand, ResolveSecondExample) {
  JobSpec j = job("resolve", "x=1,y=4", 5);
  j.format = OutputFormat::json;
  Json out = Json::parse(run(j).out);
  EXPECT_EQ(out["betti"], Json::parse(R"([{"i":0,"j":5,"rank":2},{"i":0,"j":8,"rank":1},
                                          {"i":1,"j":9,"rank":2}])"));
}

TEST(RunCommand, GensExample) {
  Result r = run(job("gens", "x=2,y=3", 7));
  EXPECT_EQ(r.out, "x^4 8\nx^2*y 7\nx*y^2 8\ny^3 9\n");
}

TEST(RunCommand, ExitCodes) {
  JobSpec small = job("koszul", "x=1,y=2,z=2", 7);
  small.bound = 1;
  EXPECT_EQ(run(small).code, kExitInconclusive);
  Result bad = run(job("gens", "x=1,x=2", 3));
  EXPECT_EQ(bad.code, kExitInputError);
  EXPECT_NE(bad.err.find("position 4"), std::string::npos);
  EXPECT_EQ(run(job("ses-check", "x=1,y=2,z=2", 7)).code, kExitOk);
  JobSpec layer = job("ses-check", "x=1,y=3", 5);
  layer.layer = 5;
  EXPECT_EQ(run(layer).code, kExitInputError);
  EXPECT_EQ(run(job("lin-check", "x=1,y=4", 5)).code, kExitOk);
  EXPECT_EQ(run(job("nonsense", "x=1", 1)).code, kExitInputError);
}

TEST(RunCommand, ConstructTrace) {
  JobSpec j = job("construct", "x=1,y=2,z=2", 7);
  j.trace = true;
  Result text = run(j);
  EXPECT_NE(text.out.find("layer 3: Construct((1,2),1) = {(0,0,2),(1,1,1)}"), std::string::npos);
  j.format = OutputFormat::json;
  Json out = Json::parse(run(j).out);
  EXPECT_EQ(out["trace"]["N"], 4);
  EXPECT_EQ(out["trace"]["steps"][0]["after_horseshoe"],
            Json::parse(R"([{"i":0,"j":0,"rank":3},{"i":1,"j":1,"rank":3},{"i":2,"j":2,"rank":1}])"));
}

TEST(RunCommand, GrHilbertAndBetti) {
  JobSpec j = job("gr-hilbert", "x=1,y=3", 5);
  j.bound = 4;
  EXPECT_EQ(run(j).out, "3 4 5 6 7\n");
  JobSpec b = job("gr-betti", "x=1,y=3", 5);
  b.format = OutputFormat::json;
  EXPECT_EQ(Json::parse(run(b).out)["betti"].size(), 2u);
}

TEST(RunCommand, EmitCasScript) {
  JobSpec j = job("resolve", "x=1,y=3", 5);
  std::string path = ::testing::TempDir() + "nsk_cas.m2";
  j.emit_cas = path;
  EXPECT_EQ(run(j).code, kExitOk);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), "kk = ZZ/32003;\nS = kk[x,y, Degrees => {1,3}];\n"
                       "I = ideal(x^5, x^2*y, y^2);\nF = res module I;\nprint betti F;\n");
  std::remove(path.c_str());
}

TEST(Sweep, SmallGridContainsExample) {
  JobSpec j;
  j.command = "sweep";
  j.sweep = {2, 3, 1, 6, {}};
  j.format = OutputFormat::csv;
  Result r = run(j);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "vars,weights,e,bound,lin_acyclic,gr_linear,construction_match,"
            "beta_total_0,beta_total_1");
  EXPECT_NE(r.out.find("\n2,1;3,5,13,true,true,true,3,2\n"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 9 * 6);
}

TEST(Sweep, EmptyRange) {
  JobSpec j;
  j.command = "sweep";
  j.sweep = {0, 3, 1, 6, {}};
  j.format = OutputFormat::csv;
  Result r = run(j);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "vars,weights,e,bound,lin_acyclic,gr_linear,construction_match\n");
}

TEST(Sweep, OutputIndependentOfWorkers) {
  JobSpec j;
  j.command = "sweep";
  j.sweep = {3, 2, 1, 5, {}};
  j.format = OutputFormat::csv;
  std::string one = run(j).out;
  j.workers = 3;
  EXPECT_EQ(run(j).out, one);
  j.format = OutputFormat::json;
  std::string json3 = run(j).out;
  j.workers = 1;
  EXPECT_EQ(run(j).out, json3);
}

TEST(Sweep, WeightMultisets) {
  EXPECT_EQ(weight_multisets(3, 4).size(), 34u);
  EXPECT_EQ(weight_multisets(2, 2),
            (std::vector<std::vector<int>>{{1}, {1, 1}, {1, 2}, {2}, {2, 2}}));
}

TEST(Sweep, FailingRowsSortFirst) {
  SweepRow good{{1}, 1, 3, Verdict::holds, Verdict::holds, Verdict::holds, {1}, 0};
  SweepRow bad{{2}, 1, 3, Verdict::holds, Verdict::fails, Verdict::holds, {1}, 0};
  std::vector<SweepRow> rows{good, bad};
  sort_rows(rows);
  EXPECT_EQ(rows.front().weights, std::vector<int>{2});
}
