#pragma once

#include <optional>

#include "fcw/complex.hpp"
#include "fcw/lambda_ring.hpp"

namespace fcw {

// All invariants below sum over non-basepoint cells and drop eternal cells
// (t^{-inf} = 0). The unreduced Euler characteristic lives in
// euler_char_sublevel().

/// sum of t^{w(a)}.
LambdaPoly size_polynomial(const FilteredComplex& x);

/// sum of (-1)^{dim a} t^{w(a)} over cells with w(a) <= upto (all when absent).
LambdaPoly euler_polynomial(const FilteredComplex& x, const std::optional<Exponent>& upto = std::nullopt);

/// Value at t = 1 of the derivative of the (truncated) Euler polynomial.
Rational weighted_euler_char(const FilteredComplex& x, const std::optional<Exponent>& upto = std::nullopt);

/// Half the number of terms of (euler(x) - euler(y)) mod 2.
///
/// Requires both Euler polynomials to take the same value at t = 1, which is
/// what makes the term count even; throws EulerMismatch otherwise.
long long matching_number(const FilteredComplex& x, const FilteredComplex& y);

/// Image of the stable object (x, n) in the polynomial ring: (-1)^n euler(x).
LambdaPoly kclass(const FilteredComplex& x, long long n);

struct InvariantReport {
  LambdaPoly size_poly;
  LambdaPoly euler_poly;
  Rational cell_count;      // size_poly at t = 1
  Rational weighted_size;   // size_poly' at t = 1
  Rational weighted_euler;  // euler_poly' at t = 1
};

InvariantReport invariant_report(const FilteredComplex& x);

}  // namespace fcw
