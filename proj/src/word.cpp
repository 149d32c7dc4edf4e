#include "subword/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>

#include "subword/error.hpp"

namespace subword {

Word::Word(std::string_view letters) : letters_(letters) {
  for (char c : letters_) {
    if (c != 'a' && c != 'b') {
      throw ValidationError("word '" + letters_ + "' has a letter outside {a,b}");
    }
  }
}

Word Word::parse(std::string_view text) {
  if (text == "eps") return Word();
  return Word(text);
}

Word Word::without_position(std::size_t pos) const {
  std::string copy = letters_;
  copy.erase(pos - 1, 1);
  return Word(Tag{}, std::move(copy));
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.display(); }

std::vector<Run> runs(const Word& w) {
  std::vector<Run> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!out.empty() && out.back().letter == w[i]) {
      ++out.back().length;
    } else {
      out.push_back({w[i], i + 1, 1});
    }
  }
  return out;
}

std::size_t max_b_run(const Word& w) {
  std::size_t best = 0;
  for (const Run& r : runs(w)) {
    if (r.letter == 'b') best = std::max(best, r.length);
  }
  return best;
}

RestrictionParam::RestrictionParam(int d) : d_(d) {
  if (d < 1) throw ValidationError("restriction parameter d must be >= 1, got " + std::to_string(d));
}

bool is_restricted(const Word& w, RestrictionParam d) {
  return max_b_run(w) <= static_cast<std::size_t>(d.value());
}

void require_restricted(const Word& w, RestrictionParam d, std::string_view what) {
  if (!is_restricted(w, d)) {
    throw ValidationError(std::string(what) + " '" + w.display() + "' has more than " +
                          std::to_string(d.value()) + " consecutive b's");
  }
}

bool is_subword(const Word& u, const Word& w) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < w.size() && j < u.size(); ++i) {
    if (w[i] == u[j]) ++j;
  }
  return j == u.size();
}

std::vector<Word> words_of_length(std::size_t n) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    std::string s(n, 'a');
    for (std::size_t i = 0; i < n; ++i) {
      if (bits & (std::size_t{1} << (n - 1 - i))) s[i] = 'b';
    }
    out.emplace_back(s);
  }
  return out;
}

std::vector<Word> restricted_words_up_to(std::size_t n, RestrictionParam d) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= n; ++len) {
    for (Word& w : words_of_length(len)) {
      if (is_restricted(w, d)) out.push_back(std::move(w));
    }
  }
  return out;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ValidationError("a composition needs at least one part");
  for (int p : parts_) {
    if (p < 1) throw ValidationError("composition parts must be positive, got " + std::to_string(p));
  }
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view piece = text.substr(start, comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty()) {
      throw ValidationError("cannot parse composition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    start = comma + 1;
  }
  return Composition(std::move(parts));
}

int Composition::norm() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Composition::max_part() const noexcept { return *std::max_element(parts_.begin(), parts_.end()); }

std::string Composition::display() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << '(' << c.display() << ')'; }

bool fits(const Composition& alpha, RestrictionParam d) { return alpha.max_part() <= d.value() + 1; }

Word phi(const Composition& alpha) {
  std::string s;
  for (int part : alpha.parts()) {
    s += 'a';
    s.append(static_cast<std::size_t>(part - 1), 'b');
  }
  return Word(std::string_view(s).substr(1));
}

Composition phi_inverse(const Word& w) {
  // Restore the dropped a; every a then opens a part.
  std::vector<int> parts{1};
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'a') {
      parts.push_back(1);
    } else {
      ++parts.back();
    }
  }
  return Composition(std::move(parts));
}

std::vector<Composition> composition_upper_covers(const Composition& alpha, RestrictionParam d) {
  std::vector<Composition> out;
  const auto& p = alpha.parts();
  const int cap = d.value() + 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] + 1 <= cap) {
      auto q = p;
      ++q[i];
      out.emplace_back(std::move(q));
    }
    for (int h = 1; h <= p[i]; ++h) {
      const int left = p[i] + 1 - h;
      if (left > cap || h > cap) continue;
      auto q = p;
      q[i] = left;
      q.insert(q.begin() + static_cast<std::ptrdiff_t>(i) + 1, h);
      out.emplace_back(std::move(q));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void compositions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = 1; p <= std::min(remaining, max_part); ++p) {
    prefix.push_back(p);
    compositions_rec(remaining - p, max_part, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<Composition> compositions_of(int n, int max_part) {
  std::vector<Composition> out;
  if (n < 1) return out;
  std::vector<int> prefix;
  compositions_rec(n, max_part, prefix, out);
  return out;
}

} // namespace subword
