#include "subword/ncseries.hpp"

#include <unordered_map>

#include "subword/error.hpp"

namespace subword {

struct RegExpr::Node {
  Kind kind;
  char letter = 0;
  Integer factor;
  std::vector<RegExpr> children;
  Integer constant;
};

namespace {

const Integer kZero = 0;

} // namespace

RegExpr RegExpr::zero() { return RegExpr(std::make_shared<const Node>(Node{Kind::Zero, 0, 0, {}, 0})); }

RegExpr RegExpr::eps() { return RegExpr(std::make_shared<const Node>(Node{Kind::Eps, 0, 0, {}, 1})); }

RegExpr RegExpr::letter(char c) {
  if (c != 'a' && c != 'b') throw ValidationError(std::string("letter outside {a,b}: ") + c);
  return RegExpr(std::make_shared<const Node>(Node{Kind::Letter, c, 0, {}, 0}));
}

RegExpr RegExpr::word(const Word& w) {
  if (w.empty()) return eps();
  if (w.size() == 1) return letter(w[0]);
  std::vector<RegExpr> letters;
  for (char c : w.str()) letters.push_back(letter(c));
  return concat(std::move(letters));
}

RegExpr RegExpr::scale(Integer factor, RegExpr e) {
  Integer constant = factor * e.constant_term();
  return RegExpr(std::make_shared<const Node>(Node{Kind::Scale, 0, std::move(factor), {std::move(e)}, std::move(constant)}));
}

RegExpr RegExpr::sum(std::vector<RegExpr> terms) {
  if (terms.empty()) return zero();
  if (terms.size() == 1) return terms.front();
  Integer constant = 0;
  for (const RegExpr& t : terms) constant += t.constant_term();
  return RegExpr(std::make_shared<const Node>(Node{Kind::Sum, 0, 0, std::move(terms), std::move(constant)}));
}

RegExpr RegExpr::concat(std::vector<RegExpr> factors) {
  if (factors.empty()) return eps();
  if (factors.size() == 1) return factors.front();
  Integer constant = 1;
  for (const RegExpr& f : factors) constant *= f.constant_term();
  return RegExpr(std::make_shared<const Node>(Node{Kind::Concat, 0, 0, std::move(factors), std::move(constant)}));
}

RegExpr RegExpr::star(RegExpr e) {
  if (e.constant_term() != 0) {
    throw ValidationError("star of an expression with nonzero constant term: " + e.to_string());
  }
  return RegExpr(std::make_shared<const Node>(Node{Kind::Star, 0, 0, {std::move(e)}, 1}));
}

RegExpr RegExpr::plus(RegExpr e) {
  if (e.constant_term() != 0) {
    throw ValidationError("plus of an expression with nonzero constant term: " + e.to_string());
  }
  return RegExpr(std::make_shared<const Node>(Node{Kind::Plus, 0, 0, {std::move(e)}, 0}));
}

RegExpr::Kind RegExpr::kind() const noexcept { return node_->kind; }
char RegExpr::letter_value() const { return node_->letter; }
const Integer& RegExpr::factor() const { return node_->factor; }
const std::vector<RegExpr>& RegExpr::children() const { return node_->children; }
const Integer& RegExpr::constant_term() const noexcept { return node_->constant; }

std::string RegExpr::to_string() const {
  const auto wrapped = [](const RegExpr& e) {
    const Kind k = e.kind();
    const bool atomic = k == Kind::Zero || k == Kind::Eps || k == Kind::Letter || k == Kind::Star || k == Kind::Plus;
    return atomic ? e.to_string() : "(" + e.to_string() + ")";
  };
  switch (kind()) {
    case Kind::Zero: return "0";
    case Kind::Eps: return "eps";
    case Kind::Letter: return std::string(1, letter_value());
    case Kind::Scale: return factor().str() + "*" + wrapped(children()[0]);
    case Kind::Sum: {
      std::string out;
      for (const RegExpr& t : children()) out += (out.empty() ? "" : " + ") + t.to_string();
      return out;
    }
    case Kind::Concat: {
      std::string out;
      for (const RegExpr& f : children()) out += wrapped(f);
      return out;
    }
    case Kind::Star: return wrapped(children()[0]) + "*";
    case Kind::Plus: return wrapped(children()[0]) + "+";
  }
  return {};
}

RegExpr operator+(const RegExpr& lhs, const RegExpr& rhs) { return RegExpr::sum({lhs, rhs}); }
RegExpr operator-(const RegExpr& lhs, const RegExpr& rhs) { return RegExpr::sum({lhs, RegExpr::scale(-1, rhs)}); }
RegExpr operator*(const RegExpr& lhs, const RegExpr& rhs) { return RegExpr::concat({lhs, rhs}); }

// ---------------------------------------------------------------------------

namespace {

std::size_t level_offset(std::size_t len) { return (std::size_t{1} << len) - 1; }

struct Slot {
  std::size_t len;
  std::size_t bits;
};

std::vector<Slot> layout(std::size_t max_len) {
  std::vector<Slot> slots;
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) slots.push_back({len, bits});
  }
  return slots;
}

Word word_at(const Slot& s) {
  std::string letters(s.len, 'a');
  for (std::size_t i = 0; i < s.len; ++i) {
    if (s.bits & (std::size_t{1} << (s.len - 1 - i))) letters[i] = 'b';
  }
  return Word(letters);
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t max_len)
    : max_len_(max_len), coeffs_(level_offset(max_len + 1)) {
  if (max_len > 20) throw ValidationError("truncation length too large: " + std::to_string(max_len));
}

std::size_t TruncatedSeries::index_of(const Word& w) {
  std::size_t bits = 0;
  for (char c : w.str()) bits = (bits << 1) | (c == 'b' ? 1u : 0u);
  return level_offset(w.size()) + bits;
}

Integer TruncatedSeries::coefficient(const Word& w) const {
  if (w.size() > max_len_) return 0;
  return coeffs_[index_of(w)];
}

void TruncatedSeries::set(const Word& w, Integer value) {
  if (w.size() > max_len_) return;
  coeffs_[index_of(w)] = std::move(value);
}

std::vector<std::pair<Word, Integer>> TruncatedSeries::terms() const {
  std::vector<std::pair<Word, Integer>> out;
  const auto slots = layout(max_len_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(word_at(slots[i]), coeffs_[i]);
  }
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  const std::size_t len = std::min(lhs.max_len_, rhs.max_len_);
  TruncatedSeries out(len);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = lhs.coeffs_[i] + rhs.coeffs_[i];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  const std::size_t len = std::min(lhs.max_len_, rhs.max_len_);
  TruncatedSeries out(len);
  const auto slots = layout(len);
  std::vector<std::size_t> right_nonzero;
  for (std::size_t j = 0; j < slots.size(); ++j) {
    if (rhs.coeffs_[j] != 0) right_nonzero.push_back(j);
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    const Slot& left = slots[i];
    for (std::size_t j : right_nonzero) {
      const Slot& right = slots[j];
      if (left.len + right.len > len) break;  // right_nonzero is ordered by length
      const std::size_t target = level_offset(left.len + right.len) + ((left.bits << right.len) | right.bits);
      out.coeffs_[target] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const Integer& factor) const {
  TruncatedSeries out(max_len_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] * factor;
  return out;
}

TruncatedSeries TruncatedSeries::one(std::size_t max_len) {
  TruncatedSeries out(max_len);
  out.coeffs_[0] = 1;
  return out;
}

TruncatedSeries TruncatedSeries::monomial(const Word& w, std::size_t max_len) {
  TruncatedSeries out(max_len);
  out.set(w, 1);
  return out;
}

namespace {

class Expander {
public:
  explicit Expander(std::size_t max_len) : max_len_(max_len) {}

  const TruncatedSeries& operator()(const RegExpr& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    TruncatedSeries value = compute(e);
    return memo_.emplace(e.id(), std::move(value)).first->second;
  }

private:
  TruncatedSeries compute(const RegExpr& e) {
    using Kind = RegExpr::Kind;
    switch (e.kind()) {
      case Kind::Zero: return TruncatedSeries(max_len_);
      case Kind::Eps: return TruncatedSeries::one(max_len_);
      case Kind::Letter: return TruncatedSeries::monomial(Word(std::string(1, e.letter_value())), max_len_);
      case Kind::Scale: return (*this)(e.children()[0]).scaled(e.factor());
      case Kind::Sum: {
        TruncatedSeries acc(max_len_);
        for (const RegExpr& t : e.children()) acc = acc + (*this)(t);
        return acc;
      }
      case Kind::Concat: {
        TruncatedSeries acc = TruncatedSeries::one(max_len_);
        for (const RegExpr& f : e.children()) acc = acc * (*this)(f);
        return acc;
      }
      case Kind::Star:
      case Kind::Plus: {
        const TruncatedSeries& inner = (*this)(e.children()[0]);
        if (inner.coefficient(Word()) != 0) {
          throw ValidationError("star argument has nonzero constant term: " + e.children()[0].to_string());
        }
        // S = 1 + f S; each pass fixes one more length since f has no constant term.
        TruncatedSeries s = TruncatedSeries::one(max_len_);
        for (std::size_t i = 0; i < max_len_; ++i) s = TruncatedSeries::one(max_len_) + inner * s;
        if (e.kind() == Kind::Plus) s = s + TruncatedSeries::one(max_len_).scaled(-1);
        return s;
      }
    }
    return TruncatedSeries(max_len_);
  }

  std::size_t max_len_;
  std::unordered_map<const void*, TruncatedSeries> memo_;
};

} // namespace

TruncatedSeries expand(const RegExpr& e, std::size_t max_len) {
  Expander expander(max_len);
  return expander(e);
}

// ---------------------------------------------------------------------------

namespace {

RegExpr b_power(std::size_t k) { return RegExpr::word(Word(std::string(k, 'b'))); }

// eps + b + ... + b^{k-1}
RegExpr b_powers_below(std::size_t k) {
  std::vector<RegExpr> terms;
  for (std::size_t i = 0; i < k; ++i) terms.push_back(b_power(i));
  return RegExpr::sum(std::move(terms));
}

RegExpr power(const RegExpr& e, std::size_t k) {
  return RegExpr::concat(std::vector<RegExpr>(k, e));
}

} // namespace

RegExpr build_B(RestrictionParam d) { return b_powers_below(static_cast<std::size_t>(d.value()) + 1); }

RegExpr build_Z(const Word& u, RestrictionParam d) {
  require_restricted(u, d, "word");
  const RegExpr a = RegExpr::letter('a');
  const RegExpr b = RegExpr::letter('b');
  const RegExpr B = build_B(d);
  const RegExpr aB = a * B;
  const RegExpr all = B * RegExpr::star(aB);  // every word of A*_d
  if (u.empty()) return all;

  std::vector<RegExpr> factors;
  factors.push_back(u.starts_with('a') ? all : (all * a) + RegExpr::eps());

  const auto blocks = runs(u);
  for (std::size_t r = 0; r < blocks.size(); ++r) {
    const Run& run = blocks[r];
    const bool last = r + 1 == blocks.size();
    if (run.letter == 'a') {
      factors.push_back(last ? power(aB, run.length) : power(aB, run.length - 1) * a);
      continue;
    }
    // b^l: the first j supported b's close an initial block of b's, the rest are
    // separated by a's; after the last supported b only a's may follow.
    std::vector<RegExpr> terms;
    const std::size_t l = run.length;
    for (std::size_t j = 1; j <= l; ++j) {
      const RegExpr head = B - b_powers_below(j);
      const RegExpr tail = j < l ? RegExpr::plus(a) * power(b * RegExpr::star(a), l - j) : RegExpr::star(a);
      terms.push_back(head * tail);
    }
    factors.push_back(RegExpr::sum(std::move(terms)));
  }
  return RegExpr::concat(std::move(factors));
}

RegExpr build_M(const Word& u, RestrictionParam d) {
  require_restricted(u, d, "word");
  const RegExpr eps = RegExpr::eps();
  const RegExpr a = RegExpr::letter('a');
  const RegExpr b = RegExpr::letter('b');
  const RegExpr ab_star = RegExpr::star(a * b);
  // Signed alternating gaps: after a supported b (starts with a), after a supported a (starts with b).
  const RegExpr after_b = ab_star * (eps - a);
  const RegExpr after_a = eps - b * ab_star * (eps - a);
  if (u.empty()) return (eps - b) * after_b;

  std::vector<RegExpr> factors;
  factors.push_back(u.starts_with('a') ? eps - b : eps - a);
  for (const Run& run : runs(u)) {
    if (run.letter == 'a') {
      factors.push_back(after_b * a * power(after_a * a, run.length - 1));
    } else if (run.length < static_cast<std::size_t>(d.value())) {
      factors.push_back(after_a * b * power(after_b * b, run.length - 1));
    } else {
      // A full run of d b's: nothing unsupported directly in front of it.
      factors.push_back(b * power(after_b * b, run.length - 1));
    }
  }
  factors.push_back(u.ends_with('a') ? after_a : after_b);
  return RegExpr::concat(std::move(factors));
}

} // namespace subword
