#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "subword/word.hpp"

namespace subword {

/// y covers x in A*_d: both words lie in A*_d, x <= y and |y| = |x| + 1.
bool covers(const Word& x, const Word& y, RestrictionParam d);

/// Every distinct subword of `w` (deduplicated by value), short-lex.
std::vector<Word> distinct_subwords(const Word& w);

/// The interval [bottom, top]_d of A*_d under subword order.
class Interval {
public:
  const Word& bottom() const noexcept { return bottom_; }
  const Word& top() const noexcept { return top_; }
  RestrictionParam d() const noexcept { return d_; }
  /// Short-lex sorted, bottom first and top last.
  const std::vector<Word>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const Word& v) const;

  /// Covering pairs (lower, upper), ordered by lower then upper in short-lex.
  std::vector<std::pair<Word, Word>> covering_pairs() const;

private:
  friend Interval interval(const Word&, const Word&, RestrictionParam);
  Interval(Word bottom, Word top, RestrictionParam d, std::vector<Word> elements)
      : bottom_(std::move(bottom)), top_(std::move(top)), d_(d), elements_(std::move(elements)) {}

  Word bottom_;
  Word top_;
  RestrictionParam d_;
  std::vector<Word> elements_;
};

/// Throws ValidationError if u is not a subword of w or either word leaves A*_d.
Interval interval(const Word& u, const Word& w, RestrictionParam d);

/// Mobius function of [u,w]_d from the defining recursion; 0 when u is not below w.
std::int64_t mobius_recursive(const Word& u, const Word& w, RestrictionParam d);

/// mu(v, w) for every v in A*_d below w, from the same recursion run downwards
/// from the top. Used by sweeps that need a whole column at once.
std::map<Word, std::int64_t, ShortLex> mobius_column(const Word& w, RestrictionParam d);

/// Hasse diagram as DOT: one node per element, one edge per covering pair.
std::string interval_to_dot(const Interval& iv);

/// {"bottom":..., "top":..., "d":..., "elements":[...]}; eps is the empty string.
nlohmann::json interval_to_json(const Interval& iv);

} // namespace subword
