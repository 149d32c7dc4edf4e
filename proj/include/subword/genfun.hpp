#pragma once

#include <vector>

#include "subword/integer.hpp"
#include "subword/ncseries.hpp"
#include "subword/word.hpp"

namespace subword {

/// Integer polynomial in x; coefficients indexed by degree, trailing zeros trimmed.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  static IntPolynomial constant(Integer c);
  /// x^k.
  static IntPolynomial monomial(std::size_t k);

  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of x^k (zero past the degree).
  Integer coefficient(std::size_t k) const;
  IntPolynomial pow(std::size_t k) const;

  friend IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator-(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// 1 + x + ... + x^{k-1}; k >= 1.
IntPolynomial bracket_poly(int k);

/// numerator / denominator with denominator(0) != 0. Not reduced.
class RationalFunction {
public:
  /// Throws ValidationError if the denominator vanishes at 0.
  RationalFunction(IntPolynomial numerator, IntPolynomial denominator);
  static RationalFunction polynomial(IntPolynomial p);

  const IntPolynomial& numerator() const noexcept { return num_; }
  const IntPolynomial& denominator() const noexcept { return den_; }
  RationalFunction pow(std::size_t k) const;

  friend RationalFunction operator+(const RationalFunction& lhs, const RationalFunction& rhs);
  friend RationalFunction operator-(const RationalFunction& lhs, const RationalFunction& rhs);
  friend RationalFunction operator*(const RationalFunction& lhs, const RationalFunction& rhs);
  /// Throws ValidationError unless rhs has a nonzero constant term.
  friend RationalFunction operator/(const RationalFunction& lhs, const RationalFunction& rhs);
  /// Equality of the represented functions, by cross-multiplication.
  friend bool operator==(const RationalFunction& lhs, const RationalFunction& rhs);

private:
  IntPolynomial num_;
  IntPolynomial den_;
};

/// Coefficients c_0..c_N of the power series at 0. Throws ValidationError if the
/// denominator vanishes at 0 or a coefficient is not an integer.
std::vector<Integer> series_coeffs(const RationalFunction& f, std::size_t N);

/// (n_1, ..., n_{d+1}) part multiplicities and the number of a-runs of phi(alpha).
struct CompositionType {
  std::vector<int> counts;
  int runs_r = 0;
  friend bool operator==(const CompositionType&, const CompositionType&) = default;
};

/// Throws ValidationError if a part exceeds d+1.
CompositionType type_of(const Composition& alpha, RestrictionParam d);

/// Image of `e` under the letter map a, b -> x.
RationalFunction commutative_image(const RegExpr& e);

/// x times the commutative image of build_Z / build_M at phi(alpha).
RationalFunction zeta_genfun_image(const Composition& alpha, RestrictionParam d);
RationalFunction mobius_genfun_image(const Composition& alpha, RestrictionParam d);

/// Product formulas from the type of alpha; need phi(alpha) nonempty.
RationalFunction zeta_genfun_closed(const Composition& alpha, RestrictionParam d);
RationalFunction mobius_genfun_closed(const Composition& alpha, RestrictionParam d);

/// sum over beta >= alpha in C_{d+1} of x^{|beta|}, resp. mu(alpha,beta) x^{|beta|}.
/// Closed form for d = 3 and phi(alpha) nonempty, commutative image otherwise.
RationalFunction zeta_genfun(const Composition& alpha, RestrictionParam d);
RationalFunction mobius_genfun(const Composition& alpha, RestrictionParam d);

} // namespace subword
