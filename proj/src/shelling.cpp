#include "subword/shelling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "subword/error.hpp"

namespace subword {

bool ChainLabel::ascending() const {
  return std::adjacent_find(labels.begin(), labels.end(), std::greater_equal<>{}) == labels.end();
}

bool ChainLabel::descending() const {
  return std::adjacent_find(labels.begin(), labels.end(), std::less_equal<>{}) == labels.end();
}

std::vector<MaximalChain> all_maximal_chains(const Interval& iv) {
  const auto& els = iv.elements();
  std::map<Word, std::vector<Word>, ShortLex> up;
  for (const auto& [lo, hi] : iv.covering_pairs()) up[lo].push_back(hi);

  std::vector<MaximalChain> out;
  MaximalChain current{{iv.bottom()}};
  auto rec = [&](auto&& self) -> void {
    const Word& last = current.words.back();
    if (last == iv.top()) {
      out.push_back(current);
      return;
    }
    for (const Word& next : up[last]) {
      current.words.push_back(next);
      self(self);
      current.words.pop_back();
    }
  };
  if (!els.empty()) rec(rec);
  return out;
}

ChainLabel label_chain(const MaximalChain& c) {
  if (c.words.empty()) throw ValidationError("empty chain");
  const Word& top = c.words.back();
  const std::size_t n = top.size();
  std::vector<bool> removed(n + 1, false);
  ChainLabel out;
  for (std::size_t s = 1; s < c.words.size(); ++s) {
    const Word& target = c.words[c.words.size() - 1 - s];
    bool found = false;
    for (std::size_t p = 1; p <= n && !found; ++p) {
      if (removed[p]) continue;
      std::string rest;
      for (std::size_t q = 1; q <= n; ++q) {
        if (!removed[q] && q != p) rest += top.at_position(q);
      }
      if (rest == target.str()) {
        removed[p] = true;
        out.labels.push_back(p);
        found = true;
      }
    }
    if (!found) {
      throw ValidationError("no deletable position takes '" + top.display() + "' to '" + target.display() +
                            "' along this chain");
    }
  }
  return out;
}

std::vector<MaximalChain> ascending_chains(const Interval& iv) {
  std::vector<MaximalChain> out;
  for (MaximalChain& c : all_maximal_chains(iv)) {
    if (label_chain(c).ascending()) out.push_back(std::move(c));
  }
  return out;
}

std::int64_t descending_chain_count(const Interval& iv) {
  std::int64_t count = 0;
  for (const MaximalChain& c : all_maximal_chains(iv)) {
    if (label_chain(c).descending()) ++count;
  }
  return count;
}

char chain_tag(const ChainLabel& label) {
  if (label.ascending()) return 'A';
  if (label.descending()) return 'D';
  return 'N';
}

std::string labeled_interval_to_dot(const Interval& iv) {
  std::map<std::pair<Word, Word>, std::set<std::size_t>> edge_labels;
  for (const MaximalChain& c : all_maximal_chains(iv)) {
    const ChainLabel lab = label_chain(c);
    const std::size_t k = c.words.size();
    for (std::size_t s = 1; s < k; ++s) {
      edge_labels[{c.words[k - 1 - s], c.words[k - s]}].insert(lab.labels[s - 1]);
    }
  }
  std::ostringstream os;
  os << "digraph interval {\n  rankdir=BT;\n";
  for (const Word& v : iv.elements()) os << "  \"" << v.display() << "\";\n";
  for (const auto& [lo, hi] : iv.covering_pairs()) {
    os << "  \"" << lo.display() << "\" -> \"" << hi.display() << "\"";
    auto it = edge_labels.find({lo, hi});
    if (it != edge_labels.end()) {
      std::string text;
      for (std::size_t l : it->second) text += (text.empty() ? "" : "/") + std::to_string(l);
      os << " [label=\"" << text << "\"]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace subword
