#include "fcw/lambda_ring.hpp"

#include <cmath>

#include "fcw/error.hpp"

namespace fcw {

LambdaPoly LambdaPoly::monomial(const Rational& coeff, const Exponent& exp) {
  LambdaPoly out;
  if (exp.is_neg_inf()) return out;
  if (exp.is_pos_inf()) throw std::invalid_argument("monomial at t^{+inf}");
  out.add_term(exp.value(), coeff);
  return out;
}

Rational LambdaPoly::coefficient(const Rational& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LambdaPoly::add_term(const Rational& exp, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& other) {
  for (const auto& [exp, coeff] : other.terms_) add_term(exp, coeff);
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& other) {
  for (const auto& [exp, coeff] : other.terms_) add_term(exp, Rational(-coeff));
  return *this;
}

LambdaPoly& LambdaPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exp, coeff] : terms_) coeff *= scalar;
  return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  LambdaPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(Rational(ea + eb), Rational(ca * cb));
  }
  return out;
}

LambdaPoly derivative(const LambdaPoly& p) {
  LambdaPoly out;
  for (const auto& [exp, coeff] : p.terms()) out.add_term(Rational(exp - 1), Rational(coeff * exp));
  return out;
}

LambdaPoly shift_exponents(const LambdaPoly& p, const Rational& a) {
  LambdaPoly out;
  for (const auto& [exp, coeff] : p.terms()) out.add_term(Rational(exp + a), coeff);
  return out;
}

Rational eval_at_one(const LambdaPoly& p) {
  Rational sum = 0;
  for (const auto& [exp, coeff] : p.terms()) sum += coeff;
  return sum;
}

LambdaPoly truncate_leq(const LambdaPoly& p, const Exponent& r) {
  LambdaPoly out;
  if (r.is_neg_inf()) return out;
  for (const auto& [exp, coeff] : p.terms()) {
    if (Exponent(exp) <= r) out.add_term(exp, coeff);
  }
  return out;
}

LambdaPoly mod2(const LambdaPoly& p) {
  LambdaPoly out;
  for (const auto& [exp, coeff] : p.terms()) {
    if (boost::multiprecision::denominator(coeff) != 1) {
      throw NonIntegerCoefficient("coefficient " + to_string(coeff) + " of t^" + to_string(exp) +
                                  " is not an integer");
    }
    if (boost::multiprecision::numerator(coeff) % 2 != 0) out.add_term(exp, Rational(1));
  }
  return out;
}

double eval_float(const LambdaPoly& p, double t) {
  if (!(t > 0)) throw NonPositiveBase("eval_float needs t > 0, got " + std::to_string(t));
  double sum = 0;
  for (const auto& [exp, coeff] : p.terms()) {
    sum += coeff.convert_to<double>() * std::pow(t, exp.convert_to<double>());
  }
  return sum;
}

std::string to_string(const LambdaPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [exp, coeff] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(coeff);
    out += "*t^";
    out += to_string(exp);
  }
  return out;
}

}  // namespace fcw
