#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "subword/integer.hpp"
#include "subword/word.hpp"

namespace subword {

/// Noncommutative rational expression over {a,b} with integer coefficients.
/// Immutable; copies share structure.
class RegExpr {
public:
  enum class Kind { Zero, Eps, Letter, Scale, Sum, Concat, Star, Plus };

  static RegExpr zero();
  static RegExpr eps();
  static RegExpr letter(char c);
  /// The monomial w (eps for the empty word).
  static RegExpr word(const Word& w);
  static RegExpr scale(Integer factor, RegExpr e);
  static RegExpr sum(std::vector<RegExpr> terms);
  static RegExpr concat(std::vector<RegExpr> factors);
  /// Throws ValidationError if `e` has a nonzero constant term.
  static RegExpr star(RegExpr e);
  static RegExpr plus(RegExpr e);

  Kind kind() const noexcept;
  char letter_value() const;
  const Integer& factor() const;
  const std::vector<RegExpr>& children() const;

  /// Coefficient of eps in the denoted series.
  const Integer& constant_term() const noexcept;

  std::string to_string() const;

  /// Identity of the shared node, for memoization.
  const void* id() const noexcept { return node_.get(); }

private:
  struct Node;
  explicit RegExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

RegExpr operator+(const RegExpr& lhs, const RegExpr& rhs);
RegExpr operator-(const RegExpr& lhs, const RegExpr& rhs);
RegExpr operator*(const RegExpr& lhs, const RegExpr& rhs);

/// Coefficients of all words up to a fixed length.
class TruncatedSeries {
public:
  explicit TruncatedSeries(std::size_t max_len);

  std::size_t max_len() const noexcept { return max_len_; }
  /// Zero for words longer than max_len.
  Integer coefficient(const Word& w) const;
  void set(const Word& w, Integer value);

  /// Nonzero terms, short-lex.
  std::vector<std::pair<Word, Integer>> terms() const;

  friend TruncatedSeries operator+(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
  TruncatedSeries scaled(const Integer& factor) const;
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  static TruncatedSeries one(std::size_t max_len);
  static TruncatedSeries monomial(const Word& w, std::size_t max_len);

private:
  static std::size_t index_of(const Word& w);
  std::size_t max_len_;
  std::vector<Integer> coeffs_;  // short-lex dense layout
};

/// Expansion of `e` through words of length <= max_len.
TruncatedSeries expand(const RegExpr& e, std::size_t max_len);

/// eps + b + ... + b^d.
RegExpr build_B(RestrictionParam d);

/// Rational expression for Z_d(u) = sum over w in A*_d with u <= w of w.
/// Throws ValidationError if u is outside A*_d.
RegExpr build_Z(const Word& u, RestrictionParam d);

/// Rational expression for M_d(u) = sum over w in A*_d of mu(u,w) w.
/// Throws ValidationError if u is outside A*_d.
RegExpr build_M(const Word& u, RestrictionParam d);

} // namespace subword
