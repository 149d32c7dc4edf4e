#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subword/poset.hpp"

namespace subword {

/// Saturated chain bottom = x_1 < x_2 < ... < x_k = top, stored bottom first.
struct MaximalChain {
  std::vector<Word> words;
};

/// Edge labels read from the top of the chain down; each is a 1-based position of the top word.
struct ChainLabel {
  std::vector<std::size_t> labels;

  bool ascending() const;
  bool descending() const;
};

/// Every maximal chain of `iv`, by depth-first ascent through covers in short-lex order.
std::vector<MaximalChain> all_maximal_chains(const Interval& iv);

/// Top-down labeling: the s-th label is the least unused position of the top word whose
/// deletion (with the earlier labels) leaves an embedding of the s-th word below the top.
/// Throws ValidationError if some step has no such position.
ChainLabel label_chain(const MaximalChain& c);

std::vector<MaximalChain> ascending_chains(const Interval& iv);
std::int64_t descending_chain_count(const Interval& iv);

/// 'A', 'D' or 'N'. A one-element chain counts as both; reported as 'A'.
char chain_tag(const ChainLabel& label);

/// Hasse diagram with every distinct label each covering edge receives across all chains.
std::string labeled_interval_to_dot(const Interval& iv);

} // namespace subword
