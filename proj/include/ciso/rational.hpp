#pragma once

#include <string>

#include <boost/rational.hpp>

namespace ciso {

/// Exact rational used for every bound comparison.
using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Largest integer not above r.
inline long long floor(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

}  // namespace ciso
