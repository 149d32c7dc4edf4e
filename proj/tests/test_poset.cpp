#include <algorithm>

#include "doctest.h"
#include "oracle.hpp"
#include "subword/error.hpp"
#include "subword/poset.hpp"

using namespace subword;

namespace {

std::vector<std::string> strings(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const Word& w : ws) out.push_back(w.str());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("covers") {
  const RestrictionParam d(3);
  CHECK(covers(Word("abb"), Word("abbb"), d));
  CHECK_FALSE(covers(Word("abb"), Word("aabbab"), d));
  CHECK_FALSE(covers(Word("a"), Word("b"), d));
  CHECK_FALSE(covers(Word("bbb"), Word("bbbb"), d));
}

TEST_CASE("interval examples") {
  const RestrictionParam d(3);
  const Interval iv = interval(Word("abb"), Word("aabbab"), d);
  CHECK(strings(iv.elements()) == std::vector<std::string>{"aabab", "aabb", "aabba", "aabbab", "aabbb", "abab",
                                                           "abb", "abba", "abbab", "abbb"});
  CHECK(iv.elements().front() == Word("abb"));
  CHECK(iv.elements().back() == Word("aabbab"));
  CHECK(interval(Word("ab"), Word("ab"), d).size() == 1);
  CHECK(strings(interval(Word(), Word("ab"), d).elements()) == std::vector<std::string>{"", "a", "ab", "b"});
  CHECK_THROWS_AS(interval(Word("ba"), Word("ab"), d), ValidationError);
  CHECK_THROWS_AS(interval(Word(), Word("bbbb"), d), ValidationError);
}

TEST_CASE("interval elements equal brute-force enumeration") {
  for (int dv : {1, 2, 3}) {
    for (const std::string& w : oracle::all_words(6)) {
      if (!oracle::restricted(w, dv)) continue;
      for (const std::string& u : oracle::subwords_of(w)) {
        if (!oracle::restricted(u, dv)) continue;
        std::vector<std::string> want;
        for (const std::string& v : oracle::subwords_of(w)) {
          if (oracle::restricted(v, dv) && oracle::subword(u, v)) want.push_back(v);
        }
        std::sort(want.begin(), want.end());
        CHECK(strings(interval(Word(u), Word(w), RestrictionParam(dv)).elements()) == want);
      }
    }
  }
}

TEST_CASE("mobius recursion examples") {
  const RestrictionParam d(3);
  CHECK(mobius_recursive(Word("ab"), Word("ab"), d) == 1);
  CHECK(mobius_recursive(Word("a"), Word("ab"), d) == -1);
  CHECK(mobius_recursive(Word("abb"), Word("aabbab"), d) == -2);
  CHECK(mobius_recursive(Word("ab"), Word("ba"), d) == 0);
}

TEST_CASE("mobius recursion and column agree with the reference") {
  for (int dv : {1, 2, 3}) {
    const RestrictionParam d(dv);
    for (const std::string& w : oracle::all_words(6)) {
      if (!oracle::restricted(w, dv)) continue;
      const auto column = mobius_column(Word(w), d);
      for (const std::string& u : oracle::subwords_of(w)) {
        if (!oracle::restricted(u, dv)) continue;
        const std::int64_t want = oracle::mu(u, w, dv);
        CHECK(mobius_recursive(Word(u), Word(w), d) == want);
        CHECK(column.at(Word(u)) == want);
      }
    }
  }
}

TEST_CASE("graded: covering chains all have length |w| - |u|") {
  for (int dv : {1, 3}) {
    const RestrictionParam d(dv);
    for (const std::string& w : oracle::all_words(7)) {
      if (!oracle::restricted(w, dv) || w.size() < 6) continue;
      const Interval iv = interval(Word(), Word(w), d);
      for (const auto& [lo, hi] : iv.covering_pairs()) CHECK(hi.size() == lo.size() + 1);
    }
  }
}

TEST_CASE("mobius defining identity") {
  const RestrictionParam d(2);
  for (const std::string& w : oracle::all_words(7)) {
    if (!oracle::restricted(w, 2) || w.size() < 5) continue;
    const auto column = mobius_column(Word(w), d);
    for (const auto& [u, value] : column) {
      if (u.size() == w.size()) continue;
      std::int64_t sum = 0;
      for (const auto& [v, mv] : column) {
        if (is_subword(u, v)) sum += mv;
      }
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("serialization") {
  const Interval iv = interval(Word(), Word("ab"), RestrictionParam(3));
  const nlohmann::json j = interval_to_json(iv);
  CHECK(j["elements"].size() == 4);
  CHECK(j["bottom"] == "");
  CHECK(j["d"] == 3);
  const std::string dot = interval_to_dot(iv);
  CHECK(dot.find("digraph") == 0);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 4);  // four covering edges
}
