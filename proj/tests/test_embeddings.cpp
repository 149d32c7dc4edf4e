#include <algorithm>

#include "doctest.h"
#include "oracle.hpp"
#include "subword/embeddings.hpp"
#include "subword/error.hpp"

using namespace subword;

TEST_CASE("all embeddings") {
  CHECK(all_embeddings(Word("a"), Word("aa")) == std::vector<Embedding>{{1}, {2}});
  const auto es = all_embeddings(Word("abaab"), Word("aabbababb"));
  CHECK(std::find(es.begin(), es.end(), Embedding{2, 3, 5, 7, 8}) != es.end());
  CHECK(all_embeddings(Word("ab"), Word("ba")).empty());
  for (const std::string& w : oracle::all_words(7)) {
    for (const std::string& u : {std::string(""), std::string("ab"), std::string("bab"), std::string("aab")}) {
      CHECK(all_embeddings(Word(u), Word(w)) == oracle::embeddings(u, w));
    }
  }
}

TEST_CASE("rightmost embedding") {
  CHECK(rightmost_embedding(Word("a"), Word("aa")) == Embedding{2});
  CHECK(rightmost_embedding(Word("abaab"), Word("aabbababb")) == Embedding{2, 4, 5, 7, 9});
  CHECK(rightmost_embedding(Word("abab"), Word("abab")) == Embedding{1, 2, 3, 4});
  CHECK_THROWS_AS(rightmost_embedding(Word("ab"), Word("ba")), ValidationError);
}

TEST_CASE("rightmost embedding dominates every embedding") {
  for (const std::string& w : oracle::all_words(8)) {
    if (w.size() < 7) continue;
    for (const std::string& u : oracle::subwords_of(w)) {
      if (u.size() < 2 || u.size() > 5) continue;
      const Embedding r = rightmost_embedding(Word(u), Word(w));
      for (const auto& e : oracle::embeddings(u, w)) {
        for (std::size_t k = 0; k < e.size(); ++k) CHECK(r[k] >= e[k]);
      }
    }
  }
}

TEST_CASE("repetition set") {
  CHECK(repetition_set(Word("aabbab")) == std::set<std::size_t>{2, 4});
  CHECK(repetition_set(Word("abab")).empty());
}

TEST_CASE("d-normal examples") {
  const RestrictionParam d(3);
  CHECK(is_d_normal({2}, Word("a"), Word("aa"), d));
  CHECK_FALSE(is_d_normal({1}, Word("a"), Word("aa"), d));
  CHECK(is_d_normal({}, Word(), Word("ab"), d));
  CHECK(is_d_normal({2, 3, 4}, Word("abb"), Word("aabbab"), d));
  CHECK(count_d_normal(Word("abb"), Word("aabbab"), d) == 2);
  CHECK(count_d_normal(Word("abab"), Word("abab"), d) == 1);
  CHECK(count_d_normal(Word(), Word("aa"), d) == 0);
  CHECK(mobius_formula(Word("abb"), Word("aabbab"), d) == -2);
  CHECK(mobius_formula(Word("ab"), Word("ab"), d) == 1);
  CHECK(mobius_formula(Word(), Word("ab"), d) == 1);
}

TEST_CASE("full b-runs need a supported a in front unless they open w") {
  // Runs of d b's only constrain where they land.
  CHECK(count_d_normal(Word("b"), Word("bab"), RestrictionParam(1)) == 1);
  CHECK(count_d_normal(Word("bbb"), Word("babbb"), RestrictionParam(3)) == 1);
  CHECK(count_d_normal(Word("bbb"), Word("abbb"), RestrictionParam(3)) == 1);
  CHECK(count_d_normal(Word("bb"), Word("bbab"), RestrictionParam(2)) == 1);
}

TEST_CASE("signed normal count equals the mobius function") {
  for (int dv = 1; dv <= 4; ++dv) {
    const RestrictionParam d(dv);
    for (const std::string& w : oracle::all_words(7)) {
      if (!oracle::restricted(w, dv)) continue;
      for (const std::string& u : oracle::subwords_of(w)) {
        if (!oracle::restricted(u, dv)) continue;
        const std::int64_t count = count_d_normal(Word(u), Word(w), d);
        CHECK(count == oracle::normal_count(u, w, dv));
        CHECK(mobius_formula(Word(u), Word(w), d) == oracle::mu(u, w, dv));
      }
    }
  }
}

TEST_CASE("without full runs in u the count is the number of embeddings supporting R(w)") {
  const RestrictionParam d(3);
  for (const std::string& w : oracle::all_words(7)) {
    if (!oracle::restricted(w, 3) || w.find("bbb") != std::string::npos) continue;
    const auto rep = repetition_set(Word(w));
    for (const std::string& u : oracle::subwords_of(w)) {
      if (u.find("bbb") != std::string::npos) continue;
      std::int64_t supporting = 0;
      for (const auto& e : oracle::embeddings(u, w)) {
        supporting += std::includes(e.begin(), e.end(), rep.begin(), rep.end()) ? 1 : 0;
      }
      CHECK(count_d_normal(Word(u), Word(w), d) == supporting);
    }
  }
}

TEST_CASE("psi") {
  const RestrictionParam d(3);
  CHECK(psi({1, 2}, Word("a"), Word("ab"), d) == Embedding{1});
  CHECK_THROWS_AS(psi({1}, Word("a"), Word("a"), d), ValidationError);
  CHECK_THROWS_AS(psi({1}, Word("a"), Word("aa"), d), ValidationError);  // {1} skips the repeated a

  const Word u("abb");
  const Word w("aabbab");
  const auto family = normal_family(u, w, d);
  long even = 0;
  long odd = 0;
  for (const Embedding& iota : family) {
    (iota.size() % 2 == 0 ? even : odd) += 1;
    const Embedding image = psi(iota, u, w, d);
    CHECK(std::binary_search(family.begin(), family.end(), image));
    CHECK(psi(image, u, w, d) == iota);
    CHECK((image.size() + iota.size()) % 2 == 1);
  }
  CHECK(even == odd);
  CHECK(even > 0);
}
