#include "bricklayer/polynomial.hpp"
#include "bricklayer/io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace bricklayer;

TEST_CASE("canonical form trims trailing zeros") {
  Polynomial p{1, 2, 0, 0};
  REQUIRE(p.degree() == 1);
  REQUIRE(Polynomial{}.is_zero());
  REQUIRE(Polynomial{}.degree() == -1);
  REQUIRE(Polynomial{0, 0}.is_zero());
  REQUIRE(p.coeff(7) == 0);
}

TEST_CASE("arithmetic and evaluation") {
  const Polynomial x = Polynomial::x();
  const Polynomial p = x * x - Polynomial::constant(1);  // x^2 - 1
  REQUIRE(p.eval(1) == 0);
  REQUIRE(p.eval(Rational(3, 2)) == Rational(5, 4));
  REQUIRE(p.eval_double(2.0) == 3.0);
  REQUIRE((p + Polynomial::constant(1)) == x.pow(2));
  REQUIRE((p * Rational(2)).coeff(2) == 2);
  REQUIRE((-p).coeff(0) == 1);
  REQUIRE(p.is_monic());
}

TEST_CASE("derivative") {
  REQUIRE(Polynomial{-1, 0, 1}.derivative() == Polynomial{0, 2});  // (x^2-1)' = 2x
  REQUIRE(Polynomial::constant(5).derivative().is_zero());
  REQUIRE(Polynomial{1, 1, 1, 1}.derivative() == Polynomial{1, 2, 3});
}

TEST_CASE("division with remainder") {
  const Polynomial p{-1, 0, 1};  // x^2 - 1
  const auto dr = p.divided_by(Polynomial{-1, 1});
  REQUIRE(dr.quotient == Polynomial{1, 1});
  REQUIRE(dr.remainder.is_zero());

  const auto dr2 = Polynomial{1, 0, 0, 1}.divided_by(Polynomial{1, 1});  // x^3+1 by x+1
  REQUIRE(dr2.quotient == Polynomial{1, -1, 1});
  REQUIRE(dr2.remainder.is_zero());

  const auto dr3 = Polynomial{3, 0, 1}.divided_by(Polynomial{1, 1});
  REQUIRE(dr3.remainder == Polynomial::constant(4));
  REQUIRE_THROWS_AS(Polynomial{3, 0, 1}.divexact(Polynomial{1, 1}), std::domain_error);
  REQUIRE_THROWS_AS(p.divided_by(Polynomial{}), std::domain_error);
}

TEST_CASE("gcd and square-free structure") {
  const Polynomial a = Polynomial::from_roots({1, 1, -2});
  const Polynomial b = Polynomial::from_roots({1, 3});
  const Polynomial g = poly_gcd(a, b);
  REQUIRE(g == Polynomial{-1, 1});

  // (x-1)^2 (x+2)^3
  const Polynomial p = Polynomial{-1, 1}.pow(2) * Polynomial{2, 1}.pow(3);
  const auto factors = square_free_decomposition(p);
  REQUIRE(factors.size() == 3);
  REQUIRE(factors[1] == Polynomial{-1, 1});
  REQUIRE(factors[2] == Polynomial{2, 1});
  REQUIRE(square_free_part(p) == (Polynomial{-1, 1} * Polynomial{2, 1}).primitive_integer());
}

TEST_CASE("exact sign evaluation") {
  const Polynomial p{-7, 0, 1};  // x^2 - 7
  REQUIRE(p.sign_at(Rational(2)) == -1);
  REQUIRE(p.sign_at(Rational(3)) == 1);
  REQUIRE(p.sign_at(Rational(2645751311, 1000000000)) == -1);  // just below sqrt(7)
  REQUIRE(p.sign_at(Rational(2645751312, 1000000000)) == 1);   // just above
  REQUIRE(Polynomial{0, 1}.sign_at(0) == 0);

  const Polynomial q{Rational(1, 3), Rational(-5, 7), 1};
  REQUIRE(q.sign_at(Rational(1, 2)) == sign_of(q.eval(Rational(1, 2))));
}

TEST_CASE("sturm chain counts distinct roots in half-open intervals") {
  const Polynomial p = Polynomial::from_roots({-2, 0, 1, 3});
  const SturmChain chain(p);
  REQUIRE(chain.count_roots(-3, 4) == 4);
  REQUIRE(chain.count_roots(0, 4) == 2);   // (0, 4] excludes the root at 0
  REQUIRE(chain.count_roots(-3, 0) == 2);  // includes it
  REQUIRE(chain.count_roots(1, 3) == 1);   // root exactly at the right endpoint
  REQUIRE(chain.count_roots(Rational(1, 2), Rational(99, 100)) == 0);

  // multiplicities do not disturb the count
  const SturmChain chain2(Polynomial{-1, 1}.pow(3) * Polynomial{2, 1});
  REQUIRE(chain2.count_roots(-10, 10) == 2);
}

TEST_CASE("largest real root") {
  REQUIRE(largest_real_root(Polynomial{-9, 0, 1}, 0.0, 5.0) == Catch::Approx(3.0).margin(1e-12));

  // x^3 - 7x: largest root sqrt(7), with 0 and -sqrt(7) in the wider bracket
  const Polynomial f3{0, -7, 0, 1};
  REQUIRE(largest_real_root(f3, -10.0, 10.0) == Catch::Approx(std::sqrt(7.0)).margin(1e-12));
  REQUIRE(largest_real_root(f3, 1.0, 3.0) == Catch::Approx(std::sqrt(7.0)).margin(1e-12));

  // x^4 - 5x^2 + 2: largest root sqrt((5 + sqrt 17)/2)
  const Polynomial p5{2, 0, -5, 0, 1};
  const double expected = std::sqrt((5.0 + std::sqrt(17.0)) / 2.0);
  REQUIRE(largest_real_root(p5, 0.0, 3.0) == Catch::Approx(expected).margin(1e-12));

  REQUIRE_THROWS_AS(largest_real_root(Polynomial{1, 0, 1}, -5.0, 5.0), std::domain_error);
  REQUIRE_THROWS_AS(largest_real_root(Polynomial{-9, 0, 1}, 4.0, 5.0), std::domain_error);
}

TEST_CASE("root isolation recovers roots and multiplicities") {
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> root_dist(-6, 6), mult_dist(1, 3);
    std::vector<int> roots;
    Polynomial p = Polynomial::constant(1);
    std::vector<std::pair<int, int>> spec;
    int used = 0;
    for (int r = -6; r <= 6 && used < 4; ++r) {
      if (root_dist(rng) > 3) {
        const int m = mult_dist(rng);
        spec.push_back({r, m});
        p = p * Polynomial{Rational(-r), 1}.pow(m);
        ++used;
      }
    }
    if (spec.empty()) continue;
    const auto found = isolate_real_roots(p, 1e-12);
    REQUIRE(found.size() == spec.size());
    for (std::size_t i = 0; i < spec.size(); ++i) {
      REQUIRE(found[i].value == Catch::Approx(double(spec[i].first)).margin(1e-11));
      REQUIRE(found[i].multiplicity == spec[i].second);
    }
  }
}

TEST_CASE("cauchy bound dominates all real roots") {
  const Polynomial p = Polynomial::from_roots({-11, 2, 7});
  const Rational b = cauchy_root_bound(p);
  REQUIRE(b > 11);
  const SturmChain chain(p);
  REQUIRE(chain.count_roots(-b, b) == 3);
}

TEST_CASE("json round trip") {
  const Polynomial p{Rational(-1), Rational(0), Rational(1)};
  const Json j = to_json(p);
  REQUIRE(j["coeffs"][0][0] == "-1");
  REQUIRE(j["coeffs"][0][1] == "1");
  REQUIRE(poly_from_json(j) == p);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> coeffs;
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 60);
    const int deg = static_cast<int>(rng() % 9);
    for (int i = 0; i <= deg; ++i) coeffs.emplace_back(num(rng), den(rng));
    const Polynomial q{std::move(coeffs)};
    REQUIRE(poly_from_json(to_json(q)) == q);
    REQUIRE(to_json(q).dump() == to_json(q).dump());
  }
}

TEST_CASE("pretty printing") {
  REQUIRE(Polynomial{0, -7, 0, 1}.str("L") == "L^3 - 7*L");
  REQUIRE(Polynomial{}.str() == "0");
  REQUIRE(Polynomial{Rational(1, 2)}.str() == "1/2");
}
