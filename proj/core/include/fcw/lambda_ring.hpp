#pragma once

#include <map>
#include <string>

#include "fcw/extended.hpp"

namespace fcw {

/// Finite formal sum  sum_i c_i * t^{r_i}  with rational coefficients and
/// rational exponents.
///
/// Stored as exponent -> coefficient. No stored coefficient is zero, so two
/// polynomials are equal exactly when their term maps are equal. Terms at
/// t^{-inf} are identically zero and never stored.
class LambdaPoly {
 public:
  using Terms = std::map<Rational, Rational>;

  LambdaPoly() = default;

  /// coeff * t^exp; zero when coeff == 0 or exp is -inf.
  static LambdaPoly monomial(const Rational& coeff, const Exponent& exp);
  static LambdaPoly constant(const Rational& coeff) { return monomial(coeff, Rational(0)); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of t^exp (zero when absent).
  Rational coefficient(const Rational& exp) const;

  /// Adds coeff * t^exp in place, dropping the term if it cancels.
  void add_term(const Rational& exp, const Rational& coeff);

  LambdaPoly& operator+=(const LambdaPoly& other);
  LambdaPoly& operator-=(const LambdaPoly& other);
  LambdaPoly& operator*=(const Rational& scalar);

  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator-(LambdaPoly a) { return a *= Rational(-1); }
  friend LambdaPoly operator*(LambdaPoly a, const Rational& s) { return a *= s; }
  friend LambdaPoly operator*(const Rational& s, LambdaPoly a) { return a *= s; }
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) = default;

 private:
  Terms terms_;
};

/// Formal d/dt: c t^r -> c r t^{r-1}. Constant terms vanish.
LambdaPoly derivative(const LambdaPoly& p);

/// t^a * p.
LambdaPoly shift_exponents(const LambdaPoly& p, const Rational& a);

/// Sum of coefficients, i.e. the value at t = 1.
Rational eval_at_one(const LambdaPoly& p);

/// Terms with exponent <= r. r = -inf yields 0.
LambdaPoly truncate_leq(const LambdaPoly& p, const Exponent& r);

/// Replaces every coefficient c by |c| mod 2. Throws NonIntegerCoefficient
/// when some coefficient is not an integer.
LambdaPoly mod2(const LambdaPoly& p);

/// Floating approximation of p(t) for t > 0; throws NonPositiveBase otherwise.
/// Not used anywhere exactness matters.
double eval_float(const LambdaPoly& p, double t);

/// Canonical rendering, terms in increasing exponent order:
/// `-1*t^1/2 + 2*t^1`. The zero polynomial renders as `0`.
std::string to_string(const LambdaPoly& p);

}  // namespace fcw
