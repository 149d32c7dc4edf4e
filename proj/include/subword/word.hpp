#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace subword {

/// A word over the alphabet {a, b}. The empty word is valid.
class Word {
public:
  Word() = default;

  /// Throws ValidationError if `letters` contains anything other than 'a' or 'b'.
  explicit Word(std::string_view letters);

  /// Like the constructor, but also accepts the keyword "eps" for the empty word.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// 0-based access.
  char operator[](std::size_t i) const noexcept { return letters_[i]; }
  /// 1-based access, matching embedding positions.
  char at_position(std::size_t pos) const { return letters_.at(pos - 1); }

  const std::string& str() const noexcept { return letters_; }
  /// The letters, or "eps" for the empty word.
  std::string display() const { return empty() ? std::string("eps") : letters_; }

  bool starts_with(char c) const noexcept { return !empty() && letters_.front() == c; }
  bool ends_with(char c) const noexcept { return !empty() && letters_.back() == c; }

  Word operator+(const Word& rhs) const { return Word(Tag{}, letters_ + rhs.letters_); }
  Word operator+(char c) const { return Word(Tag{}, letters_ + c); }

  /// Copy with the letter at 1-based position `pos` removed.
  Word without_position(std::size_t pos) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
    return lhs.letters_ <=> rhs.letters_;
  }

private:
  struct Tag {};
  Word(Tag, std::string letters) : letters_(std::move(letters)) {}

  std::string letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Orders words by length first, then lexicographically.
struct ShortLex {
  bool operator()(const Word& lhs, const Word& rhs) const noexcept {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return lhs < rhs;
  }
};

/// A maximal block of equal letters. `start` is 1-based.
struct Run {
  char letter;
  std::size_t start;
  std::size_t length;
  friend bool operator==(const Run&, const Run&) = default;
};

std::vector<Run> runs(const Word& w);
std::size_t max_b_run(const Word& w);

/// The bound d on runs of b's; d >= 1.
class RestrictionParam {
public:
  explicit RestrictionParam(int d);
  int value() const noexcept { return d_; }
  friend bool operator==(RestrictionParam, RestrictionParam) = default;

private:
  int d_;
};

/// True iff no run of b's in `w` is longer than d.
bool is_restricted(const Word& w, RestrictionParam d);

/// Throws ValidationError naming `what` unless `w` lies in A*_d.
void require_restricted(const Word& w, RestrictionParam d, std::string_view what);

/// True iff `u` is a (not necessarily contiguous) subsequence of `w`.
bool is_subword(const Word& u, const Word& w);

/// All words of length exactly n, lexicographic.
std::vector<Word> words_of_length(std::size_t n);
/// All words of length at most n in A*_d, short-lex.
std::vector<Word> restricted_words_up_to(std::size_t n, RestrictionParam d);

/// Composition: nonempty sequence of positive parts.
class Composition {
public:
  explicit Composition(std::vector<int> parts);

  /// Parses "1,3,2".
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int norm() const noexcept;
  int max_part() const noexcept;
  std::string display() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Composition& c);

/// True iff every part is at most d+1, i.e. the composition lies in C_{d+1}.
bool fits(const Composition& alpha, RestrictionParam d);

/// phi(k) = a b^{k-1}, concatenated over the parts, with the leading a dropped.
Word phi(const Composition& alpha);
Composition phi_inverse(const Word& w);

/// Upper covers of `alpha` in C_{d+1}: increment one part, or split part i into
/// (alpha_i + 1 - h, h) for 1 <= h <= alpha_i.
std::vector<Composition> composition_upper_covers(const Composition& alpha, RestrictionParam d);

/// All compositions of n with parts at most `max_part`, lexicographic.
std::vector<Composition> compositions_of(int n, int max_part);

} // namespace subword
