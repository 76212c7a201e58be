#include "pavsel/rational.hpp"

#include <cctype>

namespace pavsel {

std::string fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::optional<BigInt> parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  BigInt v{std::string(s)};
  return negative ? BigInt(-v) : v;
}

}  // namespace

std::optional<Rational> parse_fraction(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    if (*den < 0) {  // the constructor requires a positive denominator
      *num = -*num;
      *den = -*den;
    }
    return Rational(*num, *den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view head = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
      negative = head.front() == '-';
      head.remove_prefix(1);
    }
    if (!all_digits(frac) || (!head.empty() && !all_digits(head))) return std::nullopt;
    BigInt num = head.empty() ? BigInt(0) : BigInt(std::string(head));
    BigInt den = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    Rational r(num, den);
    return negative ? Rational(-r) : r;
  }
  auto v = parse_integer(text);
  if (!v) return std::nullopt;
  return Rational(*v);
}

double approx_double(const Rational& r) { return r.convert_to<double>(); }

BigInt ceil_rational(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);  // positive in canonical form
  BigInt q = num / den;         // truncates toward zero
  if (num > 0 && q * den != num) ++q;
  return q;
}

}  // namespace pavsel
