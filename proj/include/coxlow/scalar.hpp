#ifndef COXLOW_SCALAR_HPP_
#define COXLOW_SCALAR_HPP_

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coxlow {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class Backend { Float, Rational };

inline constexpr double kDefaultTolerance = 1e-9;

// Arithmetic policy for the two scalar backends. Every comparison in the
// library goes through sign()/compare() so that the float backend applies the
// tolerance uniformly and the rational backend stays exact.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr Backend backend = Backend::Float;

  static int sign(double x, double eps) noexcept {
    if (x > eps) return 1;
    if (x < -eps) return -1;
    return 0;
  }
  static double to_double(double x) noexcept { return x; }
  static double from_rational(Rational const& r) {
    return r.convert_to<double>();
  }
  static std::string to_string(double x);
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr Backend backend = Backend::Rational;

  static int sign(Rational const& x, double /*eps*/) noexcept {
    return x.sign();
  }
  static double to_double(Rational const& x) { return x.convert_to<double>(); }
  static Rational from_rational(Rational const& r) { return r; }
  static std::string to_string(Rational const& x) { return x.str(); }
};

template <class T>
int sign(T const& x, double eps) {
  return ScalarTraits<T>::sign(x, eps);
}

template <class T>
int compare(T const& a, T const& b, double eps) {
  return ScalarTraits<T>::sign(a - b, eps);
}

template <class T>
using Vec = std::vector<T>;

// Lexicographic comparison of coordinate vectors, coordinate-wise within eps.
template <class T>
std::weak_ordering lex_compare(Vec<T> const& a, Vec<T> const& b, double eps) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = compare(a[i], b[i], eps);
    if (c < 0) return std::weak_ordering::less;
    if (c > 0) return std::weak_ordering::greater;
  }
  return a.size() <=> b.size();
}

template <class T>
struct LexLess {
  double eps = kDefaultTolerance;
  bool operator()(Vec<T> const& a, Vec<T> const& b) const {
    return lex_compare(a, b, eps) < 0;
  }
};

// Parses "p/q", "p" or a decimal literal into an exact rational.
Rational parse_rational(std::string const& text);

// Exact value of a finite double.
Rational rational_from_double(double x);

std::string backend_name(Backend b);

}  // namespace coxlow

#endif  // COXLOW_SCALAR_HPP_
