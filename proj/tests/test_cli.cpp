#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "support/oracles.hpp"
#include "walkup_cli/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = walkup::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

bool has_line(const std::string& s, const std::string& line) {
  const auto all = lines(s);
  return std::find(all.begin(), all.end(), line) != all.end();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("walkup_cli_test_" + name)).string();
}

const std::string m4 = oracle::data_path("m4_15_golden.facets");
const std::string torus = oracle::data_path("torus7.facets");

}  // namespace

TEST(Cli, InfoEchoAndSummary) {
  auto r = run({"info", m4});
  EXPECT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_FALSE(l.empty());
  EXPECT_EQ(l.front(), "# walkup info " + m4);
  EXPECT_TRUE(has_line(r.out, "f-vector: 15 105 230 240 96"));
  EXPECT_TRUE(has_line(r.out, "euler characteristic: -4"));
  EXPECT_TRUE(has_line(r.out, "closed: yes"));
}

TEST(Cli, Porcelain) {
  auto r = run({"info", m4, "--porcelain"});
  EXPECT_EQ(r.code, 0);
  ASSERT_EQ(lines(r.out).size(), 1u);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["f_vector"], (std::vector<int>{15, 105, 230, 240, 96}));
  EXPECT_EQ(doc["euler_characteristic"], -4);

  auto h = run({"--porcelain", "homology", m4});
  auto hd = nlohmann::json::parse(h.out);
  EXPECT_EQ(hd["betti"], (std::vector<int>{1, 3, 0, 3, 1}));
  EXPECT_EQ(hd["orientability"], "non-orientable");
}

TEST(Cli, Stdin) {
  auto r = run({"info"}, "1 2\n2 3\n1 3\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "f-vector: 3 3"));
  auto j = run({"info", "-", "--porcelain"}, "{\"facets\": [[\"a\",\"b\"],[\"b\",\"c\"]]}");
  EXPECT_EQ(nlohmann::json::parse(j.out)["closed_pseudomanifold"], false);
}

TEST(Cli, PredicatesExitCodes) {
  EXPECT_EQ(run({"check", "walkup", m4}).code, 0);
  EXPECT_EQ(run({"check", "stacked", torus}).code, 1);
  auto w = run({"check", "walkup", "--porcelain"}, format_facet_list(oracle::suspension(
                                                       oracle::cyclic_polytope_boundary(4, 7))));
  EXPECT_EQ(w.code, 1);
  EXPECT_EQ(nlohmann::json::parse(w.out)["witness_vertex"], "north");
  auto s = run({"check", "stacked", "--porcelain"}, format_facet_list(walkup::build_s4_30()));
  EXPECT_EQ(s.code, 0);
  auto sd = nlohmann::json::parse(s.out);
  EXPECT_EQ(sd["clique_route"], true);
  EXPECT_EQ(sd["reduction_route"], true);
  EXPECT_EQ(run({"check", "stacked"}, format_facet_list(walkup::build_b5_30())).code, 0);
  EXPECT_EQ(run({"check", "bounds4", m4}).code, 0);
}

TEST(Cli, InputErrorsExitTwo) {
  auto r = run({"info", "/nonexistent/file.facets"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  auto p = run({"info"}, "1 2 3\n1 2\n");
  EXPECT_EQ(p.code, 2);
  EXPECT_NE(p.err.find("line 2, column 1"), std::string::npos) << p.err;
  EXPECT_EQ(run({"check", "bounds4"}, "1 2\n2 3\n1 3\n").code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"check", "tight", m4, "--ceiling", "10"}).code, 2);
  EXPECT_EQ(run({"check", "tight", m4, "--exhaustive", "--sample", "3"}).code, 2);
}

TEST(Cli, HelpAndVersion) {
  auto h = run({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("decompose"), std::string::npos);
  auto v = run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "walkup 0.1.0\n");
}

TEST(Cli, FVectorFormulas) {
  EXPECT_TRUE(has_line(run({"fvector", "stacked", "--dim", "4", "--n", "30"}).out,
                       "f-vector: 30 135 260 255 102"));
  EXPECT_TRUE(has_line(run({"fvector", "walkup", "--dim", "4", "--n", "15", "--chi", "-4"}).out,
                       "f-vector: 15 105 230 240 96"));
  EXPECT_TRUE(has_line(run({"fvector", "from-f1", "--dim", "4", "--n", "15", "--f1", "105"}).out,
                       "f-vector: 15 105 230 240 96"));
  EXPECT_EQ(run({"fvector", "walkup", "--dim", "3", "--n", "15", "--chi", "0"}).code, 2);
}

TEST(Cli, GenerateRoundTrips) {
  auto g = run({"generate", "m4-15"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(walkup::parse_facet_list(g.out), walkup::build_m4_15());
  auto s = run({"generate", "stacked", "--dim", "3", "--n", "12", "--seed", "5"});
  EXPECT_EQ(walkup::parse_complex(s.out), walkup::random_stacked_sphere(3, 12, 5));
  auto j = run({"generate", "sphere", "--dim", "2", "--json"});
  EXPECT_EQ(walkup::parse_complex(j.out), walkup::standard_sphere(2));
  EXPECT_EQ(run({"generate", "sphere"}).code, 2);
  EXPECT_EQ(run({"generate", "klein"}).code, 2);
}

TEST(Cli, TightOnSmallComplexes) {
  auto t = run({"check", "tight", torus, "--porcelain"});
  EXPECT_EQ(t.code, 0);
  auto td = nlohmann::json::parse(t.out);
  EXPECT_EQ(td["verdict"], "tight");
  EXPECT_EQ(td["checked"], 126);

  auto st = format_facet_list(walkup::random_stacked_sphere(4, 8, 3));
  auto s = run({"check", "tight", "--jobs", "2", "--all", "--porcelain"}, st);
  EXPECT_EQ(s.code, 1);
  auto sd = nlohmann::json::parse(s.out);
  EXPECT_EQ(sd["verdict"], "not-tight");
  EXPECT_GT(sd["violations"].size(), 1u);

  auto sample = run({"check", "tight", "--sample", "40", "--seed", "3", "--porcelain"}, st);
  auto sp = nlohmann::json::parse(sample.out);
  EXPECT_EQ(sp["mode"], "sampled");
  EXPECT_EQ(sp["seed"], 3);
}

TEST(Cli, DecomposeAndReplay) {
  const std::string ledger = temp_path("ledger.json");
  auto d = run({"decompose", m4, "--ledger", ledger});
  EXPECT_EQ(d.code, 0);
  EXPECT_TRUE(has_line(d.out, "handles: 3"));
  EXPECT_TRUE(has_line(d.out, "base: stacked sphere with 30 vertices"));
  auto r = run({"replay", ledger});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(walkup::parse_facet_list(r.out), walkup::build_m4_15());
  std::remove(ledger.c_str());

  auto embedded = run({"decompose", m4, "--porcelain"});
  auto doc = nlohmann::json::parse(embedded.out);
  EXPECT_EQ(doc["handles"], 3);
  auto again = run({"replay", "--json"}, doc["ledger"].dump());
  EXPECT_EQ(walkup::parse_complex(again.out), walkup::build_m4_15());

  auto not_walkup = run({"decompose"}, format_facet_list(oracle::cyclic_polytope_boundary(5, 8)));
  EXPECT_EQ(not_walkup.code, 1);
  EXPECT_EQ(run({"replay"}, "{}").code, 2);
}

TEST(Cli, Automorphisms) {
  auto a = run({"automorphisms", m4});
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(has_line(a.out, "order: 3"));
  EXPECT_TRUE(has_line(a.out, "()"));
  EXPECT_TRUE(has_line(a.out, "(a1 b1 c1)(a2 b2 c2)(a3 b3 c3)(a4 b4 c4)(a5 b5 c5)"));
}
