#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <type_traits>

namespace spin7 {

using Rational = mpq_class;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static bool is_zero(double x) { return x == 0.0; }
  static double to_double(double x) { return x; }
  static double abs(double x) { return std::fabs(x); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational abs(const Rational& x) { return ::abs(x); }
};

template <class T>
double to_double(const T& x) {
  return ScalarTraits<T>::to_double(x);
}

template <class T>
bool is_zero(const T& x) {
  return ScalarTraits<T>::is_zero(x);
}

// Convert between the two scalar backends. Rational -> double rounds, double -> Rational is exact.
template <class To, class From>
To scalar_cast(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<To, double>) {
    return to_double(x);
  } else {
    return Rational(x);
  }
}

// "p/q", integers, and decimal strings such as "-1.25e-3" are accepted; parsing is exact.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& x);

}  // namespace spin7
