#include "subword/poset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "subword/error.hpp"

namespace subword {

bool covers(const Word& x, const Word& y, RestrictionParam d) {
  return y.size() == x.size() + 1 && is_restricted(x, d) && is_restricted(y, d) && is_subword(x, y);
}

std::vector<Word> distinct_subwords(const Word& w) {
  // Level by level: the subwords of length k-1 are the one-letter deletions of those of length k.
  std::set<Word, ShortLex> all{w};
  std::set<Word> level{w};
  for (std::size_t len = w.size(); len > 0; --len) {
    std::set<Word> next;
    for (const Word& v : level) {
      for (std::size_t pos = 1; pos <= v.size(); ++pos) next.insert(v.without_position(pos));
    }
    all.insert(next.begin(), next.end());
    level = std::move(next);
  }
  return {all.begin(), all.end()};
}

bool Interval::contains(const Word& v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v, ShortLex{});
}

std::vector<std::pair<Word, Word>> Interval::covering_pairs() const {
  std::vector<std::pair<Word, Word>> out;
  for (const Word& x : elements_) {
    for (const Word& y : elements_) {
      if (covers(x, y, d_)) out.emplace_back(x, y);
    }
  }
  return out;
}

Interval interval(const Word& u, const Word& w, RestrictionParam d) {
  require_restricted(u, d, "bottom");
  require_restricted(w, d, "top");
  if (!is_subword(u, w)) {
    throw ValidationError("'" + u.display() + "' is not a subword of '" + w.display() + "'");
  }
  std::vector<Word> elements;
  for (Word& v : distinct_subwords(w)) {
    if (is_restricted(v, d) && is_subword(u, v)) elements.push_back(std::move(v));
  }
  return Interval(u, w, d, std::move(elements));
}

std::map<Word, std::int64_t, ShortLex> mobius_column(const Word& w, RestrictionParam d) {
  std::map<Word, std::int64_t, ShortLex> mu;
  if (!is_restricted(w, d)) return mu;
  std::vector<Word> below;
  for (Word& v : distinct_subwords(w)) {
    if (is_restricted(v, d)) below.push_back(std::move(v));
  }
  // Longest first: mu(v,w) = -sum_{v < z <= w} mu(z,w).
  for (auto it = below.rbegin(); it != below.rend(); ++it) {
    const Word& v = *it;
    if (v == w) {
      mu[v] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (const auto& [z, value] : mu) {
      if (z.size() > v.size() && is_subword(v, z)) sum += value;
    }
    mu[v] = -sum;
  }
  return mu;
}

std::int64_t mobius_recursive(const Word& u, const Word& w, RestrictionParam d) {
  if (!is_restricted(u, d) || !is_restricted(w, d) || !is_subword(u, w)) return 0;
  const Interval iv = interval(u, w, d);
  // mu(u,v) for v in [u,w], shortest first: mu(u,v) = -sum_{u <= z < v} mu(u,z).
  std::map<Word, std::int64_t, ShortLex> mu;
  for (const Word& v : iv.elements()) {
    if (v == u) {
      mu[v] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (const auto& [z, value] : mu) {
      if (z.size() < v.size() && is_subword(z, v)) sum += value;
    }
    mu[v] = -sum;
  }
  return mu.at(w);
}

namespace {

std::string quoted(const Word& w) { return "\"" + w.display() + "\""; }

} // namespace

std::string interval_to_dot(const Interval& iv) {
  std::ostringstream os;
  os << "digraph interval {\n  rankdir=BT;\n";
  for (const Word& v : iv.elements()) os << "  " << quoted(v) << ";\n";
  for (const auto& [lo, hi] : iv.covering_pairs()) os << "  " << quoted(lo) << " -> " << quoted(hi) << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json interval_to_json(const Interval& iv) {
  nlohmann::json elements = nlohmann::json::array();
  for (const Word& v : iv.elements()) elements.push_back(v.str());
  return {{"bottom", iv.bottom().str()}, {"top", iv.top().str()}, {"d", iv.d().value()}, {"elements", elements}};
}

} // namespace subword
