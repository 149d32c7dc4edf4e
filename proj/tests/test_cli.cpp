#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "subword/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = subword::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("mobius") {
  CHECK(run({"mobius", "--u", "abb", "--w", "aabbab", "--d", "3"}).out == "mu=-2 normal=2 oracle=-2\n");
  CHECK(run({"mobius", "--u", "a", "--w", "a"}).out == "mu=1 normal=1 oracle=1\n");
  CHECK(run({"mobius", "--u", "eps", "--w", "ab"}).out == "mu=1 normal=1 oracle=1\n");
  CHECK(run({"mobius", "--u", "ab", "--w", "ba"}).out == "mu=0 normal=0 oracle=0\n");
}

TEST_CASE("exit codes") {
  const Outcome restricted = run({"mobius", "--u", "a", "--w", "bbbb"});
  CHECK(restricted.code == 1);
  CHECK(restricted.err.find("error:") == 0);
  CHECK(std::count(restricted.err.begin(), restricted.err.end(), '\n') == 1);
  CHECK(run({"mobius", "--u", "ac", "--w", "a"}).code == 1);
  CHECK(run({"mobius", "--u", "a", "--w", "a", "--d", "0"}).code == 1);
  CHECK(run({"interval", "--u", "ba", "--w", "ab"}).code == 1);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"mobius", "--u", "a"}).code == 2);
  CHECK(run({"series", "--kind", "eta", "--u", "a"}).code == 2);
  CHECK(run({"genfun", "--kind", "zeta", "--alpha", "1,x"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("interval") {
  const Outcome j = run({"interval", "--u", "abb", "--w", "aabbab", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["elements"].size() == 10);
  const Outcome text = run({"interval", "--u", "abb", "--w", "aabbab"});
  CHECK(text.out.rfind("10 elements\nabb\n", 0) == 0);
  CHECK(run({"interval", "--u", "eps", "--w", "ab", "--format", "dot"}).out.find("digraph") == 0);
}

TEST_CASE("chains") {
  const Outcome text = run({"chains", "--u", "abb", "--w", "aabbab"});
  CHECK(text.out.find("A 1,3,5 aabbab > abbab > abab > abb\n") != std::string::npos);
  CHECK(std::count(text.out.begin(), text.out.end(), 'D') == 2);
  const auto j = nlohmann::json::parse(run({"chains", "--u", "abb", "--w", "aabbab", "--format", "json"}).out);
  CHECK(j.size() == 9);
}

TEST_CASE("embeddings") {
  CHECK(run({"embeddings", "--u", "a", "--w", "aa"}).out == "[[1],[2]]\n");
  CHECK(run({"embeddings", "--u", "a", "--w", "aa", "--normal"}).out == "[[2]]\n");
  CHECK(run({"embeddings", "--u", "abb", "--w", "aabbab", "--normal"}).out == "[[2,3,4],[2,4,6]]\n");
}

TEST_CASE("series") {
  const Outcome z = run({"series", "--kind", "zeta", "--u", "a", "--max-len", "2"});
  CHECK(z.out == "a\t1\naa\t1\nab\t1\nba\t1\n");
  const Outcome m = run({"series", "--kind", "mobius", "--u", "eps", "--max-len", "1"});
  CHECK(m.out == "eps\t1\na\t-1\nb\t-1\n");
  const auto j = nlohmann::json::parse(run({"series", "--kind", "mobius", "--u", "a", "--max-len", "2", "--format", "json"}).out);
  CHECK(j["terms"][0]["word"] == "a");
  CHECK(j["terms"][0]["coeff"] == 1);
}

TEST_CASE("automaton") {
  const Outcome summary = run({"automaton", "--kind", "zeta", "--d", "3"});
  CHECK(summary.out.rfind("zeta automaton d=3: 15 vertices, 53 arcs\n", 0) == 0);
  CHECK(run({"automaton", "--kind", "mobius", "--emit", "dot"}).out.find("digraph automaton") == 0);
  const Outcome check = run({"automaton", "--kind", "mobius", "--d", "2", "--check", "--max-len", "5"});
  CHECK(check.code == 0);
  CHECK(check.out.find("check PASS") != std::string::npos);
}

TEST_CASE("genfun") {
  const auto j = nlohmann::json::parse(run({"genfun", "--kind", "mobius", "--alpha", "2", "--terms", "3", "--format", "json"}).out);
  CHECK(j.contains("num"));
  CHECK(j.contains("den"));
  CHECK(j["coeffs"] == nlohmann::json::array({0, 0, 1, -3}));
  const Outcome closed = run({"genfun", "--kind", "zeta", "--alpha", "1,3,2", "--route", "closed"});
  const Outcome image = run({"genfun", "--kind", "zeta", "--alpha", "1,3,2", "--route", "image"});
  CHECK(closed.out.substr(closed.out.find("coeffs")) == image.out.substr(image.out.find("coeffs")));
}

TEST_CASE("deterministic output") {
  const std::vector<std::string> args{"chains", "--u", "eps", "--w", "abab", "--format", "json"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> quick{"selftest", "--quick"};
  const Outcome first = run(quick);
  CHECK(first.code == 0);
  CHECK(first.out == run(quick).out);
  CHECK(std::count(first.out.begin(), first.out.end(), '\n') == 8);
}
