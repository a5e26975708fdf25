#pragma once

#include <cstdint>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace entwit {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic. Witness constants are dyadic (2^-S) but noise
// thresholds divide them, so a general rational over arbitrary-precision
// integers keeps every reported constant exact at any graph size.
using Rational = boost::rational<BigInt>;

inline Rational pow2(long e) {
  if (e >= 0) return Rational(BigInt(1) << e, 1);
  return Rational(1, BigInt(1) << (-e));
}

inline double to_double(const Rational& r) {
  return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

}  // namespace entwit
