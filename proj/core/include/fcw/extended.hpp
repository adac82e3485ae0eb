#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fcw {

using Rational = boost::multiprecision::cpp_rational;

/// Lowest-terms rendering: `p/q`, or `p` when q = 1.
std::string to_string(const Rational& value);

/// Exact parse of an integer, a `p/q` fraction or a finite decimal.
/// Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// A rational extended by -inf and +inf.
///
/// Cell weights (filtration levels) only ever use -inf and finite values;
/// +inf appears as the death of an essential bar and as an unbounded distance.
class Extended {
 public:
  enum class Kind : std::uint8_t { neg_inf, finite, pos_inf };

  Extended() = default;  // 0
  Extended(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit by intent
  Extended(std::int64_t value) : value_(value) {}         // NOLINT

  static Extended neg_inf() { return Extended(Kind::neg_inf); }
  static Extended pos_inf() { return Extended(Kind::pos_inf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::neg_inf; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::pos_inf; }

  /// Throws std::logic_error when not finite.
  const Rational& value() const;

  friend bool operator==(const Extended& a, const Extended& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b);

 private:
  explicit Extended(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::finite;
  Rational value_ = 0;
};

/// Filtration level of a cell: -inf (eternal) or a rational.
using Exponent = Extended;

/// Weight of a filtered product cell: a + b with -inf absorbing.
Extended add_absorbing(const Extended& a, const Extended& b);

/// `-inf`, `inf` or the lowest-terms rational.
std::string to_string(const Extended& value);

/// Accepts `-inf`, `inf`/`+inf` and everything parse_rational accepts.
Extended parse_extended(std::string_view text);

}  // namespace fcw
