#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace medianshape {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Rational equal to v rounded to sig_digits significant decimal digits.
inline Rational rationalize(double v, int sig_digits = 12) {
  if (!std::isfinite(v)) throw std::invalid_argument("rationalize: non-finite input");
  if (sig_digits < 1) throw std::invalid_argument("rationalize: sig_digits must be >= 1");
  if (v == 0.0) return Rational(0);

  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*e", sig_digits - 1, v);
  // Format is [-]d.ddddde[+-]xx; split mantissa and exponent.
  std::string s(buf);
  auto epos = s.find('e');
  std::string mant = s.substr(0, epos);
  int exp10 = std::stoi(s.substr(epos + 1));

  bool neg = false;
  if (!mant.empty() && mant[0] == '-') {
    neg = true;
    mant.erase(0, 1);
  }
  auto dot = mant.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<int>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  Integer num(mant);
  if (neg) num = -num;
  Rational r(num);
  Integer p10 = 1;
  for (int i = 0; i < std::abs(exp10); ++i) p10 *= 10;
  if (exp10 >= 0)
    r *= Rational(p10);
  else
    r /= Rational(p10);
  return r;
}

}  // namespace medianshape
