#include <regex>
#include <sstream>

#include "doctest.h"
#include "oracle.hpp"
#include "subword/automata.hpp"
#include "subword/error.hpp"

using namespace subword;

namespace {

Integer coefficient(const AcceptedSeries& s, const char* u, const char* w) {
  auto it = s.find({Word(u), Word(w)});
  return it == s.end() ? Integer(0) : it->second.value;
}

} // namespace

TEST_CASE("zeta automaton examples") {
  const AcceptedSeries s = accepted_coefficients(build_zeta_automaton(RestrictionParam(3)), 6);
  CHECK(coefficient(s, "", "") == 1);
  CHECK(coefficient(s, "abb", "aabbab") == 1);
  CHECK(coefficient(s, "a", "bb") == 0);
  CHECK(coefficient(s, "", "bbbb") == 0);
}

TEST_CASE("mobius automaton examples") {
  const AcceptedSeries s = accepted_coefficients(build_mobius_automaton(RestrictionParam(3)), 6);
  for (const std::string& u : oracle::all_words(4)) {
    if (oracle::restricted(u, 3)) CHECK(coefficient(s, u.c_str(), u.c_str()) == 1);
  }
  CHECK(coefficient(s, "a", "aa") == -1);
  CHECK(coefficient(s, "abb", "aabbab") == -2);
  CHECK(s.at({Word("abb"), Word("aabbab")}).walks == 2);
}

TEST_CASE("tiny automata") {
  PairAutomaton one("alpha", "omega");
  one.add_arc("alpha", "omega", Word("a"), Word("a"));
  const AcceptedSeries s = accepted_coefficients(one, 4);
  REQUIRE(s.size() == 1);
  CHECK(s.begin()->first == std::pair{Word("a"), Word("a")});
  CHECK(s.begin()->second.value == 1);

  PairAutomaton none("alpha", "omega");
  none.add_arc("alpha", "alpha", Word("a"), Word("a"));
  CHECK(accepted_coefficients(none, 5).empty());

  PairAutomaton loop("alpha", "omega");
  loop.add_arc("alpha", "x", Word(), Word());
  loop.add_arc("x", "alpha", Word(), Word());
  loop.add_arc("x", "omega", Word(), Word());
  CHECK_THROWS_AS(accepted_coefficients(loop, 3), ValidationError);

  CHECK_THROWS_AS(one.add_arc("alpha", "omega", Word(), Word(), 2), ValidationError);
  CHECK_THROWS_AS(one.find_vertex("nowhere"), ValidationError);
}

TEST_CASE("written-out d = 3 tables equal the generators") {
  CHECK(same_arcs(zeta_automaton_d3_table(), build_zeta_automaton(RestrictionParam(3))));
  CHECK(same_arcs(mobius_automaton_d3_table(), build_mobius_automaton(RestrictionParam(3))));
  CHECK_FALSE(same_arcs(zeta_automaton_d3_table(), build_zeta_automaton(RestrictionParam(2))));
}

TEST_CASE("vertex inventory") {
  for (int dv = 1; dv <= 5; ++dv) {
    const std::size_t n = static_cast<std::size_t>(dv);
    CHECK(build_zeta_automaton(RestrictionParam(dv)).vertex_names().size() == 2 * (n + 1) + n * (n + 1) / 2 + 1);
    CHECK(build_mobius_automaton(RestrictionParam(dv)).vertex_names().size() == 7 + n * (n + 1));
  }
}

TEST_CASE("no cycles of arcs with empty w-part, d <= 5") {
  for (int dv = 1; dv <= 5; ++dv) {
    CHECK_NOTHROW(accepted_coefficients(build_zeta_automaton(RestrictionParam(dv)), 0));
    CHECK_NOTHROW(accepted_coefficients(build_mobius_automaton(RestrictionParam(dv)), 0));
  }
}

TEST_CASE("accepted series against the reference, d = 1..4") {
  for (int dv = 1; dv <= 4; ++dv) {
    const RestrictionParam d(dv);
    const std::size_t L = dv == 4 ? 6 : 7;
    const AcceptedSeries z = accepted_coefficients(build_zeta_automaton(d), L);
    const AcceptedSeries m = accepted_coefficients(build_mobius_automaton(d), L);
    for (const std::string& w : oracle::all_words(L)) {
      for (const std::string& u : oracle::subwords_of(w)) {
        const bool both = oracle::restricted(u, dv) && oracle::restricted(w, dv);
        const Word uw(u);
        const Word ww(w);
        auto zi = z.find({uw, ww});
        auto mi = m.find({uw, ww});
        if (both) {
          REQUIRE(zi != z.end());
          CHECK(zi->second.value == 1);
          CHECK(zi->second.walks == 1);
          const std::int64_t mu = oracle::mu(u, w, dv);
          const std::int64_t walks = mi == m.end() ? 0 : static_cast<std::int64_t>(mi->second.walks);
          const std::int64_t value = mi == m.end() ? 0 : static_cast<std::int64_t>(mi->second.value);
          CHECK(value == mu);
          CHECK(walks == oracle::normal_count(u, w, dv));
        } else {
          CHECK(zi == z.end());
          CHECK(mi == m.end());
        }
      }
    }
    for (const auto& [key, c] : z) CHECK(key.first.size() <= key.second.size());
  }
}

TEST_CASE("arc labels and DOT") {
  CHECK(arc_label({Word("b"), Word("ab"), -1}) == "-b⊗ab");
  CHECK(arc_label({Word(), Word(), 1}) == "+eps⊗eps");

  PairAutomaton one("alpha", "omega");
  one.add_arc("alpha", "omega", Word("a"), Word("a"));
  const std::string dot = automaton_to_dot(one);
  CHECK(dot.find("\"alpha\" [style=filled") != std::string::npos);
  CHECK(dot.find("\"omega\" [shape=doublecircle]") != std::string::npos);
  CHECK(dot.find("\"alpha\" -> \"omega\" [label=\"+a⊗a\"]") != std::string::npos);

  // Every body line is a node or an edge statement.
  const std::regex node(R"re(  "[^"]+"( \[[^\]]*\])?;)re");
  const std::regex edge(R"re(  "[^"]+" -> "[^"]+" \[label="[+-][^"]*"\];)re");
  const std::string big = automaton_to_dot(build_mobius_automaton(RestrictionParam(3)));
  std::istringstream lines(big);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "digraph automaton {");
  int nodes = 0;
  int edges = 0;
  while (std::getline(lines, line)) {
    if (line == "}" || line.find("rankdir") != std::string::npos || line.find("node [") != std::string::npos) continue;
    if (std::regex_match(line, edge)) {
      ++edges;
    } else if (std::regex_match(line, node)) {
      ++nodes;
    } else {
      FAIL_CHECK("unparsed DOT line: " << line);
    }
  }
  CHECK(nodes == 19);
  CHECK(edges == 65);
}
