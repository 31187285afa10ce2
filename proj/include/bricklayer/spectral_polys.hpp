#pragma once

#include "bricklayer/polynomial.hpp"
#include "bricklayer/rational.hpp"

#include <stdexcept>
#include <vector>

namespace bricklayer {

/// Polynomial in lambda whose lambda^j coefficients are exact polynomials in
/// the dimension variable d.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  explicit BivariatePoly(std::vector<Polynomial> coeffs) : c_(std::move(coeffs)) { trim(); }

  static BivariatePoly lambda() { return BivariatePoly{{Polynomial{}, Polynomial::constant(1)}}; }
  static BivariatePoly from_d_poly(Polynomial p) { return BivariatePoly{{std::move(p)}}; }

  int degree_lambda() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const Polynomial& coeff(std::size_t j) const {
    static const Polynomial kZero{};
    return j < c_.size() ? c_[j] : kZero;
  }

  bool operator==(const BivariatePoly&) const = default;

  /// Multiplication by lambda: shift all coefficients up one power.
  BivariatePoly times_lambda() const {
    if (is_zero()) return {};
    std::vector<Polynomial> v;
    v.reserve(c_.size() + 1);
    v.emplace_back();
    v.insert(v.end(), c_.begin(), c_.end());
    return BivariatePoly{std::move(v)};
  }

  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
    std::vector<Polynomial> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = a.coeff(j) - b.coeff(j);
    return BivariatePoly{std::move(v)};
  }

  /// Scale by a polynomial in d.
  friend BivariatePoly operator*(const Polynomial& dpoly, const BivariatePoly& f) {
    std::vector<Polynomial> v(f.c_.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = dpoly * f.c_[j];
    return BivariatePoly{std::move(v)};
  }

  /// Fix d, producing a univariate polynomial in lambda.
  Polynomial substitute_d(const Rational& d) const {
    std::vector<Rational> v(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) v[j] = c_[j].eval(d);
    return Polynomial{std::move(v)};
  }

  /// Partial derivative with respect to lambda.
  BivariatePoly derivative_lambda() const {
    if (c_.size() <= 1) return {};
    std::vector<Polynomial> v(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j) v[j - 1] = Rational(j) * c_[j];
    return BivariatePoly{std::move(v)};
  }

  Rational eval(const Rational& d, const Rational& lambda) const {
    Rational acc = 0;
    for (std::size_t j = c_.size(); j-- > 0;) acc = acc * lambda + c_[j].eval(d);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Polynomial> c_;
};

/// p_r for the ball B_{d,r}: p_0 = x, p_1 = x^2 - d, and
/// p_r = x p_{r-1} - r (d - r + 1) p_{r-2}. Its largest real root is the
/// principal eigenvalue of B_{d,r}.
inline Polynomial ball_poly(int d, int r) {
  if (d < 1) throw std::domain_error("ball_poly requires d >= 1");
  if (r < 0 || r > d) throw std::domain_error("ball_poly requires 0 <= r <= d");
  Polynomial prev = Polynomial::x();                       // p_0
  if (r == 0) return prev;
  Polynomial cur = Polynomial{Rational(-d), 0, 1};         // p_1 = x^2 - d
  for (int k = 2; k <= r; ++k) {
    Polynomial next = Polynomial::x() * cur - Rational(BigInt(k) * (d - k + 1)) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// f_k(d, lambda): f_1 = lambda, f_2 = lambda^2 - d, and
/// f_k = lambda f_{k-1} - (k-1)(d-k+2) f_{k-2}. Substituting d = k yields the
/// reduced characteristic polynomial of G_{2^k - 1}.
inline BivariatePoly f_poly(int k) {
  if (k < 1) throw std::domain_error("f_poly requires k >= 1");
  BivariatePoly prev = BivariatePoly::lambda();  // f_1
  if (k == 1) return prev;
  // f_2 = lambda^2 - d
  BivariatePoly cur{{Polynomial{0, -1}, Polynomial{}, Polynomial::constant(1)}};
  for (int j = 3; j <= k; ++j) {
    // (j-1)(d - j + 2) as a polynomial in d
    const Polynomial factor{Rational(BigInt(j - 1) * (2 - j)), Rational(j - 1)};
    BivariatePoly next = cur.times_lambda() - factor * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// P_{2^d}(x) = prod_{i=0}^{d} (x - (d - 2i)): the hypercube characteristic
/// polynomial with each repeated eigenvalue kept once.
inline Polynomial P_power(int d) {
  if (d < 1) throw std::domain_error("P_power requires d >= 1");
  std::vector<Rational> roots;
  roots.reserve(d + 1);
  for (int i = 0; i <= d; ++i) roots.emplace_back(d - 2 * i);
  return Polynomial::from_roots(roots);
}

/// P_{2^d - 1}(lambda) = f_d(d, lambda); degree d, largest root lambda_{2^d-1}.
inline Polynomial P_minus(int d) {
  if (d < 1) throw std::domain_error("P_minus requires d >= 1");
  return f_poly(d).substitute_d(d);
}

/// P_{2^d + 1}(lambda) = lambda P_{2^d}(lambda) - P_{2^d - 1}(lambda);
/// degree d + 2, largest root lambda_{2^d+1}.
inline Polynomial P_plus(int d) {
  if (d < 1) throw std::domain_error("P_plus requires d >= 1");
  return Polynomial::x() * P_power(d) - P_minus(d);
}

/// sum_{j=0}^{d-1} 2^j / (j+1), exactly.
inline Rational weighted_pow_sum(int d) {
  if (d < 1) throw std::domain_error("weighted_pow_sum requires d >= 1");
  Rational s = 0;
  for (int j = 0; j < d; ++j) s += Rational(pow2(j), BigInt(j + 1));
  return s;
}

/// d - 1 / sum_{j=0}^{d-1} 2^j/(j+1): the tangent-line upper bound for
/// lambda_{2^d - 1}. Exceeds the root strictly for every d >= 2 (at d = 1 the
/// tangent is exact and the bound equals the root).
inline Rational tangent_bound_minus(int d) {
  return Rational(d) - 1 / weighted_pow_sum(d);
}

/// d + 1 / (d 2^d - sum): the tangent-line upper bound for lambda_{2^d + 1}.
inline Rational tangent_bound_plus(int d) {
  if (d < 1) throw std::domain_error("tangent_bound_plus requires d >= 1");
  const Rational denom = Rational(BigInt(d) * pow2(d)) - weighted_pow_sum(d);
  if (denom <= 0) throw std::domain_error("tangent_bound_plus: nonpositive denominator");
  return Rational(d) + 1 / denom;
}

/// prod_{i=1}^{d-1} (x - (d - 2i))^{binom(d,i) - 1}: the factor shared by
/// chi_{2^d} and chi_{2^d +/- 1}.
inline Polynomial hypercube_shared_factor(int d) {
  if (d < 1) throw std::domain_error("hypercube_shared_factor requires d >= 1");
  Polynomial out = Polynomial::constant(1);
  for (int i = 1; i <= d - 1; ++i) {
    const BigInt e = binomial(d, i) - 1;
    out = out * Polynomial{Rational(2 * i - d), 1}.pow(e.convert_to<unsigned>());
  }
  return out;
}

/// lambda_{2^d - 1} as the largest root of P_minus(d), located exactly.
inline RootBracket lambda_minus_bracket(int d, double tol = 1e-12) {
  if (d == 1) return {Rational(0), Rational(0)};  // P_minus(1) = lambda
  return largest_real_root_bracket(P_minus(d), Rational(d - 1), Rational(d),
                                   rational_from_double(tol));
}

/// lambda_{2^d + 1} as the largest root of P_plus(d), located exactly.
inline RootBracket lambda_plus_bracket(int d, double tol = 1e-12) {
  return largest_real_root_bracket(P_plus(d), Rational(d), Rational(d + 1),
                                   rational_from_double(tol));
}

inline double lambda_minus_root(int d, double tol = 1e-12) {
  return lambda_minus_bracket(d, tol).midpoint();
}
inline double lambda_plus_root(int d, double tol = 1e-12) {
  return lambda_plus_bracket(d, tol).midpoint();
}

}  // namespace bricklayer
