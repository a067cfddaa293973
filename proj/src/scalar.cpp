#include "coxlow/scalar.hpp"

#include <cctype>

#include <fmt/format.h>

#include "coxlow/error.hpp"

namespace coxlow {

std::string ScalarTraits<double>::to_string(double x) {
  // Clamp negative zero so output is stable.
  if (x == 0.0) x = 0.0;
  return fmt::format("{:.12g}", x);
}

Rational parse_rational(std::string const& text) {
  auto fail = [&] {
    throw Error(ErrorCode::ParseError, "not a rational number: '" + text + "'");
  };
  if (text.empty()) fail();
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (num.empty() || den.empty()) fail();
    try {
      BigInt p(num), q(den);
      if (q == 0) fail();
      return Rational(p, q);
    } catch (std::runtime_error const&) {
      fail();
    }
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '-' || text[i] == '+') {
    negative = text[i] == '-';
    ++i;
  }
  BigInt num = 0, den = 1;
  bool seen_digit = false, seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      num = num * 10 + (c - '0');
      if (seen_point) den *= 10;
    } else {
      fail();
    }
  }
  if (!seen_digit) fail();
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

Rational rational_from_double(double x) {
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  // 53 bits of mantissa scaled to an integer.
  auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  BigInt num(scaled);
  BigInt den(1);
  if (exponent > 0) {
    num <<= exponent;
  } else {
    den <<= -exponent;
  }
  return Rational(num, den);
}

std::string backend_name(Backend b) {
  return b == Backend::Float ? "float" : "rational";
}

}  // namespace coxlow
