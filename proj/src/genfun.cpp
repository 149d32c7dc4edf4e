#include "subword/genfun.hpp"

#include <unordered_map>

#include "subword/error.hpp"

namespace subword {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial IntPolynomial::constant(Integer c) { return IntPolynomial({std::move(c)}); }

IntPolynomial IntPolynomial::monomial(std::size_t k) {
  std::vector<Integer> c(k + 1, 0);
  c[k] = 1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

IntPolynomial IntPolynomial::pow(std::size_t k) const {
  IntPolynomial out = constant(1);
  for (std::size_t i = 0; i < k; ++i) out = out * *this;
  return out;
}

IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  std::vector<Integer> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = lhs.coefficient(i) + rhs.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  std::vector<Integer> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = lhs.coefficient(i) - rhs.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial bracket_poly(int k) {
  if (k < 1) throw ValidationError("bracket polynomial needs k >= 1, got " + std::to_string(k));
  return IntPolynomial(std::vector<Integer>(static_cast<std::size_t>(k), 1));
}

// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(IntPolynomial numerator, IntPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.coefficient(0) == 0) throw ValidationError("denominator vanishes at x = 0");
}

RationalFunction RationalFunction::polynomial(IntPolynomial p) {
  return RationalFunction(std::move(p), IntPolynomial::constant(1));
}

RationalFunction RationalFunction::pow(std::size_t k) const { return {num_.pow(k), den_.pow(k)}; }

RationalFunction operator+(const RationalFunction& lhs, const RationalFunction& rhs) {
  if (lhs.den_ == rhs.den_) return {lhs.num_ + rhs.num_, lhs.den_};
  return {lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_};
}

RationalFunction operator-(const RationalFunction& lhs, const RationalFunction& rhs) {
  if (lhs.den_ == rhs.den_) return {lhs.num_ - rhs.num_, lhs.den_};
  return {lhs.num_ * rhs.den_ - rhs.num_ * lhs.den_, lhs.den_ * rhs.den_};
}

RationalFunction operator*(const RationalFunction& lhs, const RationalFunction& rhs) {
  return {lhs.num_ * rhs.num_, lhs.den_ * rhs.den_};
}

RationalFunction operator/(const RationalFunction& lhs, const RationalFunction& rhs) {
  if (rhs.num_.coefficient(0) == 0) throw ValidationError("division by a function vanishing at x = 0");
  return {lhs.num_ * rhs.den_, lhs.den_ * rhs.num_};
}

bool operator==(const RationalFunction& lhs, const RationalFunction& rhs) {
  return lhs.num_ * rhs.den_ == rhs.num_ * lhs.den_;
}

std::vector<Integer> series_coeffs(const RationalFunction& f, std::size_t N) {
  const IntPolynomial& num = f.numerator();
  const IntPolynomial& den = f.denominator();
  const Integer& lead = den.coefficient(0);
  if (lead == 0) throw ValidationError("denominator vanishes at x = 0");
  const std::size_t deg = den.coefficients().size() - 1;
  std::vector<Integer> c(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    // den * c = num, read off at x^n.
    Integer acc = num.coefficient(n);
    for (std::size_t k = 1; k <= std::min(n, deg); ++k) acc -= den.coefficients()[k] * c[n - k];
    if (acc % lead != 0) throw ValidationError("series coefficient is not an integer");
    c[n] = acc / lead;
  }
  return c;
}

// ---------------------------------------------------------------------------

CompositionType type_of(const Composition& alpha, RestrictionParam d) {
  if (!fits(alpha, d)) {
    throw ValidationError("composition " + alpha.display() + " has a part larger than " +
                          std::to_string(d.value() + 1));
  }
  CompositionType t;
  t.counts.assign(static_cast<std::size_t>(d.value()) + 1, 0);
  for (int p : alpha.parts()) ++t.counts[static_cast<std::size_t>(p) - 1];
  for (const Run& r : runs(phi(alpha))) {
    if (r.letter == 'a') ++t.runs_r;
  }
  return t;
}

namespace {

const RationalFunction kOne = RationalFunction::polynomial(IntPolynomial::constant(1));
const RationalFunction kX = RationalFunction::polynomial(IntPolynomial::monomial(1));

RationalFunction poly(const IntPolynomial& p) { return RationalFunction::polynomial(p); }

class Abelianizer {
public:
  const RationalFunction& operator()(const RegExpr& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    RationalFunction value = compute(e);
    return memo_.emplace(e.id(), std::move(value)).first->second;
  }

private:
  RationalFunction compute(const RegExpr& e) {
    using Kind = RegExpr::Kind;
    switch (e.kind()) {
      case Kind::Zero: return poly(IntPolynomial());
      case Kind::Eps: return kOne;
      case Kind::Letter: return kX;
      case Kind::Scale: return poly(IntPolynomial::constant(e.factor())) * (*this)(e.children()[0]);
      case Kind::Sum: {
        RationalFunction acc = poly(IntPolynomial());
        for (const RegExpr& t : e.children()) acc = acc + (*this)(t);
        return acc;
      }
      case Kind::Concat: {
        RationalFunction acc = kOne;
        for (const RegExpr& f : e.children()) acc = acc * (*this)(f);
        return acc;
      }
      case Kind::Star:
      case Kind::Plus: {
        const RationalFunction& f = (*this)(e.children()[0]);
        if (f.numerator().coefficient(0) != 0) {
          throw ValidationError("star argument has nonzero constant term: " + e.children()[0].to_string());
        }
        const IntPolynomial rest = f.denominator() - f.numerator();
        return {e.kind() == Kind::Star ? f.denominator() : f.numerator(), rest};
      }
    }
    return kOne;
  }

  std::unordered_map<const void*, RationalFunction> memo_;
};

} // namespace

RationalFunction commutative_image(const RegExpr& e) {
  Abelianizer image;
  return image(e);
}

RationalFunction zeta_genfun_image(const Composition& alpha, RestrictionParam d) {
  type_of(alpha, d);
  return kX * commutative_image(build_Z(phi(alpha), d));
}

RationalFunction mobius_genfun_image(const Composition& alpha, RestrictionParam d) {
  type_of(alpha, d);
  return kX * commutative_image(build_M(phi(alpha), d));
}

namespace {

struct Shape {
  CompositionType type;
  Word u;
  std::size_t a_count;
};

Shape shape_of(const Composition& alpha, RestrictionParam d) {
  Shape s{type_of(alpha, d), phi(alpha), alpha.length() - 1};
  if (s.u.empty()) throw ValidationError("closed form needs a nonempty word");
  return s;
}

// Contribution of one run of l supported b's.
RationalFunction zeta_b_run(int l, int d) {
  const RationalFunction gap = kX / poly(IntPolynomial({1, -1}));  // x / (1 - x)
  RationalFunction sum = poly(IntPolynomial());
  for (int j = 1; j <= l; ++j) {
    const RationalFunction head = poly(IntPolynomial::monomial(static_cast<std::size_t>(j)) * bracket_poly(d - j + 1));
    const RationalFunction tail =
        j < l ? gap.pow(static_cast<std::size_t>(1 + l - j)) : kOne / poly(IntPolynomial({1, -1}));
    sum = sum + head * tail;
  }
  return sum;
}

} // namespace

RationalFunction zeta_genfun_closed(const Composition& alpha, RestrictionParam d) {
  const Shape s = shape_of(alpha, d);
  const int n = d.value();
  const RationalFunction word_poly = poly(IntPolynomial::monomial(1) * bracket_poly(n + 1));  // x[d+1]
  const RationalFunction all_words = kOne / (kOne - word_poly);
  const RationalFunction prefix =
      s.u.starts_with('a') ? poly(bracket_poly(n + 1)) * all_words : word_poly * all_words + kOne;
  const std::size_t ends_a = s.u.ends_with('a') ? 1 : 0;
  RationalFunction f = kX * prefix * poly(IntPolynomial::monomial(s.a_count)) *
                       poly(bracket_poly(n + 1)).pow(s.a_count - static_cast<std::size_t>(s.type.runs_r) + ends_a);
  for (int l = 1; l <= n; ++l) {
    f = f * zeta_b_run(l, n).pow(static_cast<std::size_t>(s.type.counts[static_cast<std::size_t>(l)]));
  }
  return f;
}

RationalFunction mobius_genfun_closed(const Composition& alpha, RestrictionParam d) {
  const Shape s = shape_of(alpha, d);
  const int n = d.value();
  const RationalFunction one_plus_x = poly(IntPolynomial({1, 1}));
  const RationalFunction step = kX / one_plus_x;  // x / (1 + x)
  RationalFunction f = kX * poly(IntPolynomial({1, -1})) * step.pow(s.a_count) / one_plus_x;
  for (int l = 1; l < n; ++l) {
    f = f * step.pow(static_cast<std::size_t>(l * s.type.counts[static_cast<std::size_t>(l)]));
  }
  const RationalFunction full_run =
      poly(IntPolynomial::monomial(static_cast<std::size_t>(n))) / one_plus_x.pow(static_cast<std::size_t>(n - 1));
  return f * full_run.pow(static_cast<std::size_t>(s.type.counts[static_cast<std::size_t>(n)]));
}

RationalFunction zeta_genfun(const Composition& alpha, RestrictionParam d) {
  if (d.value() == 3 && !phi(alpha).empty()) return zeta_genfun_closed(alpha, d);
  return zeta_genfun_image(alpha, d);
}

RationalFunction mobius_genfun(const Composition& alpha, RestrictionParam d) {
  if (d.value() == 3 && !phi(alpha).empty()) return mobius_genfun_closed(alpha, d);
  return mobius_genfun_image(alpha, d);
}

} // namespace subword
