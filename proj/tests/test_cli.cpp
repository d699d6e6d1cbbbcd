#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "qf/cli/cli.hpp"
#include "qf/cli/reproduce.hpp"
#include "qf/cli/specs.hpp"
#include "qf/error.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = qf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("invariant subcommand") {
  auto r = run({"invariant", "--link", "whitehead", "--cocycle", "section:w:2:3", "--shape", "vector"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "(32 + 32t, 32 + 32t)");
  const auto j = nlohmann::json::parse(r.out.substr(r.out.find('\n') + 1));
  CHECK(j["colorings"] == 64);

  r = run({"invariant", "--link", "unknot", "--quandle", "dihedral:3", "--cocycle", "zero"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "3");

  r = run({"--json", "invariant", "--link", "trefoil", "--cocycle", "section:u:3:2", "--shape", "family"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["shape"] == "family");
}

TEST_CASE("cohomology subcommand") {
  auto r = run({"cohomology", "--quandle", "dihedral:3", "--degree", "3", "--prime", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "dim = 1\n");
  r = run({"--json", "cohomology", "--quandle", "dihedral:3", "--degree", "3", "--prime", "3", "--generator"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["dim"] == 1);
  CHECK(j["generator"]["degree"] == 3);
}

TEST_CASE("quandle, extend, alexander and twistspin subcommands") {
  auto r = run({"--json", "quandle", "make", "dihedral:5"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["labels"].size() == 5);

  r = run({"--json", "extend", "abelian", "--base", "w:2:2", "--q", "2", "--cocycle", "section:w:2:2"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["projection"].size() == 8);

  r = run({"--json", "extend", "wreath", "--base", "r3", "--v", "2"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["quandle"]["labels"].size() == 12);

  r = run({"--json", "alexander", "--link", "whitehead", "--conway", "--ring", "2:(1-T)^3"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["conway"]["min_degree"] == 3);
  CHECK(j["ring"]["colorings"] == 64);

  r = run({"--json", "alexander", "--link", "trefoil", "--inoue", "3:1+T"});
  CHECK(nlohmann::json::parse(r.out)["inoue"]["count"] == 9);

  r = run({"--json", "twistspin", "--knot", "trefoil", "--quandle", "wreath:r3:2", "--k", "4"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["nontrivial"] == true);
}

TEST_CASE("reproduce subcommand") {
  auto r = run({"reproduce", "whitehead-matrix"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run({"reproduce", "conway-bound"});
  CHECK(r.code == 0);
  r = run({"--json", "reproduce", "nope"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["error"]["code"] == "UnknownExample");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"invariant", "--bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  auto r = run({"--json", "invariant", "--link", "nope", "--quandle", "dihedral:3", "--cocycle", "zero"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["error"]["code"] == "UnknownName");
  r = run({"invariant", "--link", "trefoil", "--quandle", "dihedral:3", "--cocycle", "section:w:2:2"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"--threads", "3", "invariant", "--link", "borromean", "--cocycle",
                                      "section:w:2:2", "--shape", "family"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("spec parsing") {
  using namespace qf::cli;
  CHECK(parse_quandle_spec("w:2:3").quandle.size() == 8);
  CHECK(parse_quandle_spec("alexander:2:1+T+T^2").quandle.size() == 4);
  CHECK(parse_quandle_spec("conj:qs4").quandle.size() == 4);
  CHECK(parse_quandle_spec("wreath:qs4:2").quandle.size() == 32);
  CHECK(parse_ring_spec("3:(1-T)^2").size() == 9);
  const auto [p, gens] = parse_ideal_spec("5:1+T,T^2");
  CHECK(p == 5);
  CHECK(gens.size() == 2);
  CHECK_THROWS_AS(parse_quandle_spec("dihedral:x"), qf::Error);
}
