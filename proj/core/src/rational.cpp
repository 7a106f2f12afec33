#include "torsionlab/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "torsionlab/error.hpp"

namespace torsionlab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt pow10(std::size_t n) {
  BigInt p = 1;
  for (std::size_t i = 0; i < n; ++i) p *= 10;
  return p;
}

// BigInt's string constructor treats a leading zero as an octal prefix.
BigInt integer_from_digits(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return BigInt(0);
  return BigInt(std::string(digits.substr(first)));
}

Rational parse_unsigned_decimal(std::string_view text, std::string_view whole) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    if (!all_digits(text)) {
      throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
    }
    return Rational(integer_from_digits(text));
  }
  const auto ipart = text.substr(0, dot);
  const auto fpart = text.substr(dot + 1);
  if ((ipart.empty() && fpart.empty()) || (!ipart.empty() && !all_digits(ipart)) ||
      (!fpart.empty() && !all_digits(fpart))) {
    throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
  }
  const std::string digits = std::string(ipart) + std::string(fpart);
  return Rational(integer_from_digits(digits), pow10(fpart.size()));
}

}  // namespace

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw InvalidArgument("non-finite value has no rational form");
  // cpp_rational converts the binary significand and exponent without rounding.
  return Rational(x);
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational q;
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    q = parse_unsigned_decimal(body, text);
  } else {
    const Rational num = parse_unsigned_decimal(body.substr(0, slash), text);
    const Rational den = parse_unsigned_decimal(body.substr(slash + 1), text);
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    q = num / den;
  }
  return negative ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

bool rational_sqrt(const Rational& q, Rational* root) {
  if (q < 0) return false;
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  if (root != nullptr) *root = Rational(rn, rd);
  return true;
}

}  // namespace torsionlab
