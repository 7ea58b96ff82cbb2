#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hdw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact binomial coefficient C(x, r) for integer x >= 0 (0 when x < r).
inline BigInt binomial(const BigInt& x, unsigned r) {
  if (x < 0) throw domain_error("binomial: negative upper index");
  if (x < r) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (unsigned i = 0; i < r; ++i) {
    num *= x - i;
    den *= i + 1;
  }
  return num / den;
}

/// Generalized binomial coefficient C(x, r) = x(x-1)...(x-r+1)/r! for real x.
inline double binomial_real(double x, unsigned r) {
  double v = 1.0;
  for (unsigned i = 0; i < r; ++i) v *= (x - i) / (i + 1);
  return v;
}

inline BigInt factorial(unsigned r) {
  BigInt v = 1;
  for (unsigned i = 2; i <= r; ++i) v *= i;
  return v;
}

inline BigInt ipow(BigInt base, unsigned e) {
  BigInt v = 1;
  while (e > 0) {
    if (e & 1u) v *= base;
    base *= base;
    e >>= 1u;
  }
  return v;
}

/// Parses a decimal literal (optionally with an exponent, e.g. "0.4", "1e-6")
/// into an exact rational.
inline Rational rational_from_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    neg = text[pos] == '-';
    ++pos;
  }
  BigInt mantissa = 0;
  long frac_digits = 0;
  bool seen_digit = false;
  bool in_frac = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      if (in_frac) ++frac_digits;
      seen_digit = true;
    } else if (c == '.' && !in_frac) {
      in_frac = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      throw domain_error("rational_from_decimal: bad literal '" + text + "'");
    }
  }
  long exp10 = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    exp10 = std::stol(text.substr(pos + 1));
    pos = text.size();
  }
  if (!seen_digit) throw domain_error("rational_from_decimal: bad literal '" + text + "'");
  Rational r(mantissa, ipow(10, static_cast<unsigned>(frac_digits)));
  long e = exp10;
  if (e > 0) r *= Rational(ipow(10, static_cast<unsigned>(e)), 1);
  if (e < 0) r /= Rational(ipow(10, static_cast<unsigned>(-e)), 1);
  return neg ? -r : r;
}

/// num/den with the sign moved to the numerator; boost's two-argument
/// cpp_rational constructor rejects negative denominators outright.
inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw domain_error("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

/// Inverse of rational_to_string; also accepts plain integers and decimals.
inline Rational rational_from_string(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return rational_from_decimal(text);
  BigInt num(text.substr(0, slash));
  BigInt den(text.substr(slash + 1));
  if (den == 0) throw domain_error("rational_from_string: zero denominator");
  return make_rational(num, den);
}

inline std::string rational_to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// A signed quantity x stored as (sign, ln|x|), for sums whose terms are far
/// outside double range.
struct SignedLog {
  int sign = 0;  // -1, 0, +1
  double log_abs = -std::numeric_limits<double>::infinity();

  static SignedLog zero() { return {0, -std::numeric_limits<double>::infinity()}; }
  static SignedLog from_log(double log_value, int sign = 1) {
    return {std::isinf(log_value) && log_value < 0 ? 0 : sign, log_value};
  }
  static SignedLog from_value(double v) {
    if (v == 0.0) return zero();
    return {v > 0 ? 1 : -1, std::log(std::abs(v))};
  }
  double to_double() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_abs);
  }
};

inline SignedLog slog_add(const SignedLog& a, const SignedLog& b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  const SignedLog& hi = a.log_abs >= b.log_abs ? a : b;
  const SignedLog& lo = a.log_abs >= b.log_abs ? b : a;
  double d = lo.log_abs - hi.log_abs;  // <= 0
  if (a.sign == b.sign)
    return {a.sign, hi.log_abs + std::log1p(std::exp(d))};
  double m = std::expm1(d);  // in (-1, 0]
  if (m == 0.0) return SignedLog::zero();  // exact cancellation
  if (m == -1.0) return hi;                // lo vanishes at double precision
  return {hi.sign, hi.log_abs + std::log(-m)};
}

inline SignedLog slog_sub(const SignedLog& a, const SignedLog& b) {
  return slog_add(a, SignedLog{-b.sign, b.log_abs});
}

/// ln C(N, m) with N given as ln N. Uses lgamma when N fits a double,
/// otherwise the bound-side approximation m(ln N - ln m + 1) - 0.5 ln(2 pi m)
/// is replaced by the exact leading terms m*lnN - lgamma(m+1) (valid when
/// m^2 << N, which holds in every regime this project evaluates).
inline double log_binomial_from_logs(double log_N, double m) {
  if (m < 0) throw domain_error("log_binomial: negative lower index");
  if (m == 0) return 0.0;
  if (log_N < 700.0) {
    double N = std::exp(log_N);
    if (m > N) return -std::numeric_limits<double>::infinity();
    return std::lgamma(N + 1) - std::lgamma(m + 1) - std::lgamma(N - m + 1);
  }
  return m * log_N - std::lgamma(m + 1);
}

}  // namespace hdw
