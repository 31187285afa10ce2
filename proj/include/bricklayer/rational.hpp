#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bricklayer {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt big_denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

/// Exact dyadic rational from a finite double.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite input");
  return Rational(x);
}

inline BigInt big_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline BigInt pow2(unsigned d) { return BigInt(1) << d; }

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact at every step
  }
  return r;
}

/// i (i-1) ... (i-k+1)
inline BigInt falling_factorial(const BigInt& i, unsigned k) {
  BigInt r = 1;
  for (unsigned j = 0; j < k; ++j) r *= i - j;
  return r;
}

inline int sign_of(const Rational& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

inline int sign_of(const BigInt& n) {
  if (n > 0) return 1;
  if (n < 0) return -1;
  return 0;
}

inline std::string to_string(const BigInt& n) { return n.str(); }
inline std::string to_string(const Rational& q) {
  BigInt den = big_denominator(q);
  if (den == 1) return big_numerator(q).str();
  return big_numerator(q).str() + "/" + den.str();
}

}  // namespace bricklayer
