#include "bricklayer/spectral_polys.hpp"
#include "bricklayer/graphs.hpp"
#include "bricklayer/spectra.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace bricklayer;

TEST_CASE("ball polynomial recursion") {
  REQUIRE(ball_poly(6, 0) == Polynomial{0, 1});
  REQUIRE(ball_poly(4, 1) == Polynomial{-4, 0, 1});
  REQUIRE(ball_poly(4, 2) == Polynomial{0, -10, 0, 1});  // L^3 - 10 L
  REQUIRE_THROWS_AS(ball_poly(3, 4), std::domain_error);

  // largest root matches the distance-class eigenvalue
  for (const auto [d, r] : {std::pair{4, 2}, {5, 3}, {7, 1}, {6, 6}}) {
    const double via_poly = largest_real_root(ball_poly(d, r), -0.5, double(d) + 0.5);
    const double via_reduced = ball_eigenvalue_reduced(d, r).spectral.lambda;
    REQUIRE(via_poly == Catch::Approx(via_reduced).margin(1e-9));
  }
}

TEST_CASE("f recursion in both variables") {
  const BivariatePoly f2 = f_poly(2);
  REQUIRE(f2.degree_lambda() == 2);
  REQUIRE(f2.coeff(2) == Polynomial::constant(1));
  REQUIRE(f2.coeff(1).is_zero());
  REQUIRE(f2.coeff(0) == Polynomial{0, -1});  // -d

  const BivariatePoly f3 = f_poly(3);
  REQUIRE(f3.coeff(1) == Polynomial{2, -3});  // -(3d - 2)
  REQUIRE(f3.substitute_d(3) == Polynomial{0, -7, 0, 1});

  REQUIRE(f_poly(1).substitute_d(17) == Polynomial{0, 1});
  REQUIRE(f3.eval(3, 2) == Rational(8 - 14));
}

TEST_CASE("P_power") {
  REQUIRE(P_power(1) == Polynomial{-1, 0, 1});
  REQUIRE(P_power(2) == Polynomial{0, -4, 0, 1});
  for (int d = 1; d <= 25; ++d) {
    const Polynomial p = P_power(d);
    REQUIRE(p.degree() == d + 1);
    REQUIRE(p.is_monic());
    REQUIRE(p.eval(d) == 0);
    // derivative at d is 2^d d!
    REQUIRE(p.derivative().eval(d) == Rational(pow2(d) * factorial(d)));
  }
}

TEST_CASE("P_minus closed forms") {
  REQUIRE(P_minus(3) == Polynomial{0, -7, 0, 1});
  REQUIRE(P_minus(5).eval(5) == 120);
  REQUIRE(P_minus(3).derivative().eval(3) == 20);
  REQUIRE(P_minus(4).derivative().eval(4) == 128);
  for (int d = 1; d <= 25; ++d) {
    const Polynomial p = P_minus(d);
    REQUIRE(p.degree() == d);
    REQUIRE(p.eval(d) == Rational(factorial(d)));
    REQUIRE(p.derivative().eval(d) == Rational(factorial(d)) * weighted_pow_sum(d));
  }
}

TEST_CASE("P_plus closed forms") {
  REQUIRE(P_plus(2) == Polynomial{2, 0, -5, 0, 1});
  REQUIRE(P_plus(4).eval(4) == -24);
  REQUIRE(P_plus(3).derivative().eval(3) == 124);
  for (int d = 1; d <= 25; ++d) {
    const Polynomial p = P_plus(d);
    REQUIRE(p.degree() == d + 2);
    REQUIRE(p.eval(d) == Rational(-factorial(d)));
    REQUIRE(p.derivative().eval(d) ==
            Rational(factorial(d)) * (Rational(BigInt(d) * pow2(d)) - weighted_pow_sum(d)));
  }
}

TEST_CASE("tangent bounds as exact rationals") {
  REQUIRE(tangent_bound_minus(3) == Rational(27, 10));
  REQUIRE(tangent_bound_minus(5) == Rational(5) - Rational(15, 128));
  REQUIRE(weighted_pow_sum(5) == Rational(128, 15));
  REQUIRE(tangent_bound_plus(3) == Rational(3) + Rational(3, 62));
  REQUIRE(tangent_bound_plus(2) == Rational(13, 6));
  REQUIRE(tangent_bound_plus(5) == Rational(5) + Rational(15, 2272));

  // bound strictly exceeds the root it was built for
  REQUIRE(to_double(tangent_bound_minus(3)) > lambda_minus_root(3));
  REQUIRE(lambda_minus_root(3) == Catch::Approx(std::sqrt(7.0)).margin(1e-11));
  REQUIRE(to_double(tangent_bound_plus(2)) > lambda_plus_root(2));
  for (int d = 2; d <= 12; ++d) {
    REQUIRE(P_minus(d).sign_at(tangent_bound_minus(d)) == 1);
    REQUIRE(P_plus(d).sign_at(tangent_bound_plus(d)) == 1);
  }
}

TEST_CASE("pochhammer closed form f_k(i,i)") {
  for (int i = 1; i <= 12; ++i)
    for (int k = 1; k <= i; ++k)
      REQUIRE(f_poly(k).eval(i, i) == Rational(falling_factorial(BigInt(i), k)));
}

TEST_CASE("derivative closed form at shifted arguments") {
  // f'_k(k+i, k+i) = k! sum_j binom(k-j+i-1, i) 2^j/(j+1)
  for (int k = 1; k <= 8; ++k) {
    const BivariatePoly fk_dl = f_poly(k).derivative_lambda();
    for (int i = 0; i <= 4; ++i) {
      Rational expected = 0;
      for (int j = 0; j <= k - 1; ++j)
        expected += Rational(binomial(k - j + i - 1, i)) * Rational(pow2(j), BigInt(j + 1));
      expected *= Rational(factorial(k));
      REQUIRE(fk_dl.eval(k + i, k + i) == expected);
    }
  }
}

TEST_CASE("geometric-over-index sum bound") {
  // sum_{j=1}^{d} 2^j/j < 3 2^d/d, exactly, through d = 64
  for (int d = 1; d <= 64; ++d) {
    Rational s = 0;
    for (int j = 1; j <= d; ++j) s += Rational(pow2(j), BigInt(j));
    REQUIRE(s < Rational(3 * pow2(d), BigInt(d)));
  }
}

TEST_CASE("reduced polynomials divide the characteristic polynomials") {
  // chi_{2^k - 1} = P_minus(k) * shared factor, with a zero remainder.
  for (int k = 1; k <= 8; ++k) {
    const Polynomial chi = char_poly_exact(bricklayer_graph((std::uint64_t(1) << k) - 1, 2));
    const auto dr = chi.divided_by(hypercube_shared_factor(k));
    REQUIRE(dr.remainder.is_zero());
    REQUIRE(dr.quotient == P_minus(k));
  }
  for (int d = 1; d <= 5; ++d) {
    const Polynomial chi = char_poly_exact(bricklayer_graph((std::uint64_t(1) << d) + 1, 2));
    const auto dr = chi.divided_by(hypercube_shared_factor(d));
    REQUIRE(dr.remainder.is_zero());
    REQUIRE(dr.quotient == P_plus(d));
  }
}

TEST_CASE("bridge identity for the pendant vertex") {
  // chi_{2^d + 1} = x chi_{2^d} - chi_{2^d - 1}
  for (int d = 1; d <= 5; ++d) {
    const std::uint64_t p = std::uint64_t(1) << d;
    const Polynomial lhs = char_poly_exact(bricklayer_graph(p + 1, 2));
    const Polynomial rhs = Polynomial::x() * char_poly_exact(bricklayer_graph(p, 2)) -
                           char_poly_exact(bricklayer_graph(p - 1, 2));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("polynomial roots match graph eigenvalues") {
  for (int d = 2; d <= 6; ++d) {
    const std::uint64_t p = std::uint64_t(1) << d;
    const double lam_minus = principal_eigenvalue_power(bricklayer_graph(p - 1, 2)).lambda;
    REQUIRE(lambda_minus_root(d) == Catch::Approx(lam_minus).margin(1e-8));
    const double lam_plus = principal_eigenvalue_power(bricklayer_graph(p + 1, 2)).lambda;
    REQUIRE(lambda_plus_root(d) == Catch::Approx(lam_plus).margin(1e-8));
  }
}

TEST_CASE("P_minus roots are simple") {
  for (int d = 1; d <= 5; ++d) {
    const Polynomial p = P_minus(d);
    REQUIRE(poly_gcd(p, p.derivative()).is_constant());
  }
}

TEST_CASE("derivative of P_minus is nondecreasing beyond the largest root") {
  for (int d = 2; d <= 8; ++d) {
    const Polynomial dp = P_minus(d).derivative();
    const RootBracket root = lambda_minus_bracket(d, 1e-12);
    Rational prev = dp.eval(root.hi);
    for (int s = 1; s <= 100; ++s) {
      const Rational x = root.hi + (Rational(d + 1) - root.hi) * Rational(s, 100);
      const Rational val = dp.eval(x);
      REQUIRE(val >= prev);
      prev = val;
    }
  }
}
