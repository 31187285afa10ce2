#pragma once

#include "bricklayer/rational.hpp"

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bricklayer {

/// Dense univariate polynomial with exact rational coefficients.
/// Canonical form: no trailing zero coefficient; the zero polynomial has an
/// empty coefficient vector and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial{std::vector<Rational>{c}}; }
  static Polynomial x() { return Polynomial{std::vector<Rational>{0, 1}}; }
  static Polynomial monomial(std::size_t power, const Rational& c = 1) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Polynomial{std::move(v)};
  }
  /// Monic product of (x - r) over the given roots.
  static Polynomial from_roots(const std::vector<Rational>& roots) {
    Polynomial p = constant(1);
    for (const Rational& r : roots) p = p * Polynomial{-r, 1};
    return p;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  const Rational& coeff(std::size_t k) const {
    static const Rational kZero = 0;
    return k < coeffs_.size() ? coeffs_[k] : kZero;
  }

  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  bool has_integer_coeffs() const {
    for (const Rational& c : coeffs_)
      if (big_denominator(c) != 1) return false;
    return true;
  }

  bool operator==(const Polynomial&) const = default;

  Polynomial operator-() const {
    std::vector<Rational> v(coeffs_);
    for (Rational& c : v) c = -c;
    return Polynomial{std::move(v)};
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Polynomial{std::move(v)};
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial{std::move(v)};
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s == 0) return {};
    std::vector<Rational> v(p.coeffs_);
    for (Rational& c : v) c *= s;
    return Polynomial{std::move(v)};
  }
  friend Polynomial operator*(const Polynomial& p, const Rational& s) { return s * p; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      base = base * base;
      e >>= 1u;
    }
    return result;
  }

  /// Exact Horner evaluation.
  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  double eval_double(double x) const {
    double acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + to_double(coeffs_[i]);
    return acc;
  }

  /// Exact sign of p(x). Uses a scaled integer Horner scheme, so no rounding
  /// is involved regardless of coefficient magnitudes.
  int sign_at(const Rational& x) const {
    if (is_zero()) return 0;
    const BigInt num = big_numerator(x);
    const BigInt den = big_denominator(x);  // > 0
    if (den == 1 && has_integer_coeffs()) {
      BigInt acc = 0;
      for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * num + big_numerator(coeffs_[i]);
      return sign_of(acc);
    }
    // p(num/den) * den^deg * L, with L the (positive) common denominator.
    BigInt scale = 1;
    for (const Rational& c : coeffs_) scale = boost::multiprecision::lcm(scale, big_denominator(c));
    BigInt acc = big_numerator(coeffs_.back()) * (scale / big_denominator(coeffs_.back()));
    BigInt dpow = 1;
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
      dpow *= den;
      acc = acc * num + big_numerator(coeffs_[i]) * (scale / big_denominator(coeffs_[i])) * dpow;
    }
    return sign_of(acc);
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(i);
    return Polynomial{std::move(v)};
  }

  struct DivisionResult;

  /// Exact long division: *this = quotient * divisor + remainder.
  DivisionResult divided_by(const Polynomial& divisor) const;

  /// Division known to be exact; throws if a nonzero remainder shows up.
  Polynomial divexact(const Polynomial& divisor) const;

  /// Same roots, integer coefficients, content 1, positive leading coefficient.
  Polynomial primitive_integer() const {
    if (is_zero()) return {};
    BigInt den_lcm = 1;
    for (const Rational& c : coeffs_) den_lcm = boost::multiprecision::lcm(den_lcm, big_denominator(c));
    BigInt content = 0;
    std::vector<BigInt> ints(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      ints[i] = big_numerator(coeffs_[i]) * (den_lcm / big_denominator(coeffs_[i]));
      content = boost::multiprecision::gcd(content, ints[i]);
    }
    if (sign_of(ints.back()) < 0) content = -content;
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = Rational(ints[i] / content);
    return Polynomial{std::move(v)};
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      const bool first = out.empty();
      const Rational mag = c < 0 ? Rational(-c) : c;
      out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      if (i == 0 || mag != 1) out += to_string(mag);
      if (i > 0) {
        if (mag != 1) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

struct Polynomial::DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

inline Polynomial::DivisionResult Polynomial::divided_by(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(coeffs_);
  const int dd = divisor.degree();
  const Rational lead = divisor.leading();
  if (static_cast<int>(rem.size()) - 1 < dd) return {Polynomial{}, *this};
  std::vector<Rational> quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > static_cast<std::size_t>(dd);) {
    if (rem[i] == 0) continue;
    const Rational q = rem[i] / lead;
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeffs_[j];
  }
  return {Polynomial{std::move(quot)}, Polynomial{std::move(rem)}};
}

inline Polynomial Polynomial::divexact(const Polynomial& divisor) const {
  DivisionResult r = divided_by(divisor);
  if (!r.remainder.is_zero()) throw std::domain_error("divexact: nonzero remainder");
  return r.quotient;
}

/// Primitive-integer polynomial gcd with positive leading coefficient.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
  if (a.is_zero()) return b.is_zero() ? Polynomial{} : b.primitive_integer();
  a = a.primitive_integer();
  while (!b.is_zero()) {
    Polynomial r = a.divided_by(b).remainder;
    a = b.primitive_integer();
    b = std::move(r);
  }
  return a.primitive_integer();
}

/// Yun square-free decomposition: p ~ prod_i out[i-1]^i (up to a constant).
/// out[i-1] collects the factors of multiplicity i; entries may be constant 1.
inline std::vector<Polynomial> square_free_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("square_free_decomposition of zero");
  std::vector<Polynomial> out;
  if (p.is_constant()) return out;
  const Polynomial f = p.primitive_integer();
  Polynomial g = poly_gcd(f, f.derivative());
  if (g.is_constant()) {
    out.push_back(f);
    return out;
  }
  Polynomial c = f.divexact(g);
  Polynomial d = f.derivative().divexact(g) - c.derivative();
  while (!c.is_constant()) {
    Polynomial factor = poly_gcd(c, d);
    out.push_back(factor);
    c = c.divexact(factor);
    d = d.divexact(factor) - c.derivative();
  }
  return out;
}

/// Product of the distinct irreducible factors, multiplicity one each.
inline Polynomial square_free_part(const Polynomial& p) {
  Polynomial out = Polynomial::constant(1);
  for (const Polynomial& q : square_free_decomposition(p))
    if (!q.is_constant()) out = out * q;
  return out.primitive_integer();
}

/// Every real root r of p satisfies |r| < cauchy_root_bound(p).
inline Rational cauchy_root_bound(const Polynomial& p) {
  if (p.is_zero() || p.is_constant()) return 1;
  Rational m = 0;
  const Rational lead = p.leading() < 0 ? Rational(-p.leading()) : p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rational a = p.coeff(i) < 0 ? Rational(-p.coeff(i)) : p.coeff(i);
    a /= lead;
    if (a > m) m = a;
  }
  return m + 1;
}

/// Sturm chain of the square-free part of p. Counts distinct real roots.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p) {
    Polynomial s0 = square_free_part(p);
    chain_.push_back(s0);
    Polynomial s1 = s0.derivative().primitive_integer();
    while (!s1.is_zero()) {
      chain_.push_back(s1);
      Polynomial r = -(s0.divided_by(s1).remainder);
      s0 = std::move(s1);
      s1 = r.is_zero() ? Polynomial{} : r.primitive_integer();
    }
  }

  int sign_variations(const Rational& x) const {
    int vars = 0, prev = 0;
    for (const Polynomial& s : chain_) {
      const int sg = s.sign_at(x);
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++vars;
      prev = sg;
    }
    return vars;
  }

  /// Number of distinct real roots in the half-open interval (lo, hi].
  long count_roots(const Rational& lo, const Rational& hi) const {
    if (lo >= hi) return 0;
    return sign_variations(lo) - sign_variations(hi);
  }

 private:
  std::vector<Polynomial> chain_;
};

struct RootBracket {
  Rational lo, hi;  // root in (lo, hi]
  double midpoint() const { return to_double((lo + hi) / 2); }
};

/// Shrinks (lo, hi] around the largest root it contains until hi - lo <= tol.
/// The Sturm count steers every bisection step toward the rightmost root, so
/// extra roots inside the starting bracket are harmless.
inline RootBracket largest_real_root_bracket(const Polynomial& p, Rational lo, Rational hi,
                                             const Rational& tol) {
  if (p.is_zero() || p.is_constant()) throw std::domain_error("largest_real_root: degree < 1");
  if (!(lo < hi)) throw std::domain_error("largest_real_root: empty bracket");
  const SturmChain chain(p);
  if (chain.count_roots(lo, hi) == 0) throw std::domain_error("largest_real_root: no root in bracket");
  while (hi - lo > tol) {
    const Rational mid = (lo + hi) / 2;
    if (chain.count_roots(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return {std::move(lo), std::move(hi)};
}

inline double largest_real_root(const Polynomial& p, const Rational& lo, const Rational& hi,
                                double tol = 1e-13) {
  return largest_real_root_bracket(p, lo, hi, rational_from_double(tol)).midpoint();
}

inline double largest_real_root(const Polynomial& p, double lo, double hi, double tol = 1e-13) {
  return largest_real_root(p, rational_from_double(lo), rational_from_double(hi), tol);
}

struct RealRoot {
  double value;
  int multiplicity;
  RootBracket bracket;
};

/// All real roots of p with multiplicities, each located to width <= tol.
inline std::vector<RealRoot> isolate_real_roots(const Polynomial& p, double tol = 1e-12) {
  if (p.is_zero()) throw std::domain_error("isolate_real_roots of zero");
  std::vector<RealRoot> roots;
  const Rational rtol = rational_from_double(tol);
  const std::vector<Polynomial> factors = square_free_decomposition(p);
  for (std::size_t m = 0; m < factors.size(); ++m) {
    const Polynomial& q = factors[m];
    if (q.is_constant()) continue;
    const SturmChain chain(q);
    const Rational bound = cauchy_root_bound(q);
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
      auto [lo, hi] = stack.back();
      stack.pop_back();
      const long cnt = chain.count_roots(lo, hi);
      if (cnt == 0) continue;
      if (cnt == 1) {
        while (hi - lo > rtol) {
          const Rational mid = (lo + hi) / 2;
          if (chain.count_roots(mid, hi) >= 1)
            lo = mid;
          else
            hi = mid;
        }
        RootBracket b{lo, hi};
        roots.push_back({b.midpoint(), static_cast<int>(m + 1), std::move(b)});
      } else {
        const Rational mid = (lo + hi) / 2;
        stack.push_back({lo, mid});
        stack.push_back({mid, hi});
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  return roots;
}

}  // namespace bricklayer
