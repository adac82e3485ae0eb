#include "fcw/extended.hpp"

#include <cctype>
#include <stdexcept>

#include "fcw/error.hpp"

namespace fcw {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional sign followed by one or more digits.
bool is_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

boost::multiprecision::cpp_int parse_int(std::string_view s) {
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  boost::multiprecision::cpp_int out = 0;
  for (char c : s) out = out * 10 + (c - '0');
  return negative ? -out : out;
}

}  // namespace

std::string to_string(const Rational& value) {
  const auto& num = boost::multiprecision::numerator(value);
  const auto& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  if (text.empty()) throw ParseError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer(num) || !all_digits(den)) {
      throw ParseError("malformed fraction '" + original + "'");
    }
    auto d = parse_int(den);
    if (d == 0) throw ParseError("zero denominator in '" + original + "'");
    return Rational(parse_int(num), d);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw ParseError("malformed decimal '" + original + "'");
    }
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    boost::multiprecision::cpp_int digits = 0;
    for (char c : whole) digits = digits * 10 + (c - '0');
    for (char c : frac) digits = digits * 10 + (c - '0');
    Rational out(digits, scale);
    return negative ? Rational(-out) : out;
  }

  if (!is_integer(text)) throw ParseError("malformed rational '" + original + "'");
  return Rational(parse_int(text));
}

const Rational& Extended::value() const {
  if (kind_ != Kind::finite) throw std::logic_error("value() of an infinite Extended");
  return value_;
}

std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != Extended::Kind::finite) return std::strong_ordering::equal;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Extended add_absorbing(const Extended& a, const Extended& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return Extended::neg_inf();
  if (a.is_pos_inf() || b.is_pos_inf()) return Extended::pos_inf();
  return Extended(Rational(a.value() + b.value()));
}

std::string to_string(const Extended& value) {
  switch (value.kind()) {
    case Extended::Kind::neg_inf:
      return "-inf";
    case Extended::Kind::pos_inf:
      return "inf";
    case Extended::Kind::finite:
      break;
  }
  return to_string(value.value());
}

Extended parse_extended(std::string_view text) {
  if (text == "-inf") return Extended::neg_inf();
  if (text == "inf" || text == "+inf") return Extended::pos_inf();
  return Extended(parse_rational(text));
}

}  // namespace fcw
