#include "fcw/invariants.hpp"

#include "fcw/error.hpp"

namespace fcw {

LambdaPoly size_polynomial(const FilteredComplex& x) {
  LambdaPoly out;
  for (const auto& c : x.cells()) {
    if (!x.is_basepoint(c)) out += LambdaPoly::monomial(1, c.weight);
  }
  return out;
}

LambdaPoly euler_polynomial(const FilteredComplex& x, const std::optional<Exponent>& upto) {
  LambdaPoly out;
  for (const auto& c : x.cells()) {
    if (x.is_basepoint(c)) continue;
    if (upto && *upto < c.weight) continue;
    out += LambdaPoly::monomial(c.dim % 2 == 0 ? 1 : -1, c.weight);
  }
  return out;
}

Rational weighted_euler_char(const FilteredComplex& x, const std::optional<Exponent>& upto) {
  return eval_at_one(derivative(euler_polynomial(x, upto)));
}

long long matching_number(const FilteredComplex& x, const FilteredComplex& y) {
  const LambdaPoly ex = euler_polynomial(x);
  const LambdaPoly ey = euler_polynomial(y);
  if (eval_at_one(ex) != eval_at_one(ey)) {
    throw EulerMismatch("Euler polynomials differ at t=1: " + to_string(eval_at_one(ex)) + " vs " +
                        to_string(eval_at_one(ey)));
  }
  const Rational terms = eval_at_one(mod2(ex - ey));
  // Equal values at t = 1 force an even number of odd coefficients.
  const Rational half = terms / 2;
  return static_cast<long long>(boost::multiprecision::numerator(half));
}

LambdaPoly kclass(const FilteredComplex& x, long long n) {
  LambdaPoly e = euler_polynomial(x);
  return n % 2 == 0 ? e : -e;
}

InvariantReport invariant_report(const FilteredComplex& x) {
  InvariantReport r;
  r.size_poly = size_polynomial(x);
  r.euler_poly = euler_polynomial(x);
  r.cell_count = eval_at_one(r.size_poly);
  r.weighted_size = eval_at_one(derivative(r.size_poly));
  r.weighted_euler = eval_at_one(derivative(r.euler_poly));
  return r;
}

}  // namespace fcw
