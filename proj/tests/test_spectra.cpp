#include "bricklayer/spectra.hpp"
#include "bricklayer/graphs.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace bricklayer;

namespace {

const double kLambda5 = std::sqrt((5.0 + std::sqrt(17.0)) / 2.0);

std::vector<double> full_exact_spectrum(const LabeledGraph& g) {
  std::vector<double> out;
  for (const RealRoot& r : isolate_real_roots(char_poly_exact(g), 1e-12))
    out.insert(out.end(), r.multiplicity, r.value);
  return out;
}

}  // namespace

TEST_CASE("power iteration basics") {
  const SpectralResult sq = principal_eigenvalue_power(bricklayer_graph(4, 2));
  REQUIRE(sq.lambda == Catch::Approx(2.0).margin(1e-11));
  REQUIRE(sq.residual <= 1e-12);
  REQUIRE(sq.method == EigMethod::power);

  REQUIRE(principal_eigenvalue_power(bricklayer_graph(1, 2)).lambda == 0.0);

  const SpectralResult g5 = principal_eigenvalue_power(bricklayer_graph(5, 2));
  REQUIRE(g5.lambda == Catch::Approx(kLambda5).margin(1e-11));
  for (double x : g5.eigenvector) REQUIRE(x >= 0.0);
  REQUIRE(std::abs(detail::norm2(g5.eigenvector) - 1.0) < 1e-12);
}

TEST_CASE("power iteration on disconnected graphs takes the max over components") {
  // path (lambda = sqrt 2) plus an isolated vertex
  const LabeledGraph g = induced_subgraph(3, 2, {0, 1, 2, 7});
  const SpectralResult r = principal_eigenvalue_power(g);
  REQUIRE(r.lambda == Catch::Approx(std::sqrt(2.0)).margin(1e-11));
  REQUIRE(r.eigenvector[3] == 0.0);  // mass only on the winning component

  const LabeledGraph two_k2 = induced_subgraph(3, 2, {0, 1, 6, 7});
  REQUIRE(principal_eigenvalue_power(two_k2).lambda == Catch::Approx(1.0).margin(1e-11));
}

TEST_CASE("power iteration reports non-convergence with its last iterate") {
  try {
    principal_eigenvalue_power(bricklayer_graph(12, 2), 1e-12, 3);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    REQUIRE(e.last_iterate.iterations == 3);
    REQUIRE(e.last_iterate.residual > 1e-12);
  }
}

TEST_CASE("hypercube spectrum") {
  const HypercubeSpectrum s1 = hypercube_spectrum(1);
  REQUIRE(s1.pairs == std::vector<std::pair<int, BigInt>>{{1, 1}, {-1, 1}});

  const HypercubeSpectrum s3 = hypercube_spectrum(3);
  REQUIRE(s3.pairs == std::vector<std::pair<int, BigInt>>{{3, 1}, {1, 3}, {-1, 3}, {-3, 1}});

  const HypercubeSpectrum s5 = hypercube_spectrum(5);
  BigInt total = 0;
  std::vector<BigInt> mults;
  for (const auto& [ev, m] : s5.pairs) {
    mults.push_back(m);
    total += m;
  }
  REQUIRE(mults == std::vector<BigInt>{1, 5, 10, 10, 5, 1});
  REQUIRE(total == 32);
}

TEST_CASE("distance-class reduction") {
  for (int d : {3, 19, 50})
    REQUIRE(ball_eigenvalue_reduced(d, 1).spectral.lambda ==
            Catch::Approx(std::sqrt(double(d))).margin(1e-10));
  REQUIRE(ball_eigenvalue_reduced(7, 0).spectral.lambda == 0.0);
  REQUIRE(ball_eigenvalue_reduced(4, 2).spectral.lambda ==
          Catch::Approx(std::sqrt(10.0)).margin(1e-10));

  SECTION("profile satisfies the distance-class equations") {
    const auto [spec, profile] = ball_eigenvalue_reduced(6, 3);
    const auto& w = profile.w;
    const double lam = spec.lambda;
    REQUIRE(lam * w[0] == Catch::Approx(6 * w[1]).margin(1e-10));
    for (int k = 1; k < 3; ++k)
      REQUIRE(lam * w[k] == Catch::Approx(k * w[k - 1] + (6 - k) * w[k + 1]).margin(1e-10));
    REQUIRE(lam * w[3] == Catch::Approx(3 * w[2]).margin(1e-10));
  }

  SECTION("agrees with power iteration on the materialized ball") {
    for (const auto [d, r] : {std::pair{4, 2}, {5, 3}, {6, 2}}) {
      const double reduced = ball_eigenvalue_reduced(d, r, 1e-12).spectral.lambda;
      const double power = principal_eigenvalue_power(hamming_ball(d, r), 1e-12).lambda;
      REQUIRE(reduced == Catch::Approx(power).margin(1e-11));
    }
  }

  SECTION("profile lifts to a vertex eigenvector") {
    const auto ball = ball_eigenvalue_reduced(4, 2);
    const auto x = lift_distance_profile(4, 2, ball.profile);
    const LabeledGraph g = hamming_ball(4, 2);
    double resid = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      double row = 0;
      for (std::uint32_t j : g.adj[i]) row += x[j];
      resid += (row - ball.spectral.lambda * x[i]) * (row - ball.spectral.lambda * x[i]);
    }
    REQUIRE(std::sqrt(resid) < 1e-10);
  }
}

TEST_CASE("exact characteristic polynomials") {
  REQUIRE(char_poly_exact(bricklayer_graph(2, 2)) == Polynomial{-1, 0, 1});
  REQUIRE(char_poly_exact(bricklayer_graph(3, 2)) == Polynomial{0, -2, 0, 1});

  // chi of the cube factors over its integer spectrum
  const Polynomial chi8 = char_poly_exact(bricklayer_graph(8, 2));
  const Polynomial expected = Polynomial{-3, 1} * Polynomial{-1, 1}.pow(3) *
                              Polynomial{1, 1}.pow(3) * Polynomial{3, 1};
  REQUIRE(chi8 == expected);

  REQUIRE(char_poly_exact(induced_subgraph(1, 2, {0})) == Polynomial{0, 1});
  REQUIRE_THROWS_AS(char_poly_exact(hamming_graph(9, 2)), std::length_error);

  SECTION("monic integer polynomials of full degree") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 10; ++t) {
      std::vector<std::uint64_t> labels;
      for (std::uint64_t l = 0; l < 16; ++l)
        if (rng() & 1) labels.push_back(l);
      if (labels.empty()) labels.push_back(0);
      const Polynomial chi = char_poly_exact(induced_subgraph(4, 2, labels));
      REQUIRE(chi.degree() == static_cast<int>(labels.size()));
      REQUIRE(chi.is_monic());
      REQUIRE(chi.has_integer_coeffs());
    }
  }
}

TEST_CASE("char poly largest root") {
  REQUIRE(char_poly_largest_root(bricklayer_graph(2, 2)) == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(char_poly_largest_root(bricklayer_graph(3, 2)) ==
          Catch::Approx(std::sqrt(2.0)).margin(1e-12));
  REQUIRE(char_poly_largest_root(bricklayer_graph(8, 2)) == Catch::Approx(3.0).margin(1e-12));
  REQUIRE(char_poly_largest_root(bricklayer_graph(1, 2)) == Catch::Approx(0.0).margin(1e-12));
  REQUIRE(char_poly_largest_root(hamming_graph(2, 3)) == Catch::Approx(4.0).margin(1e-12));
}

TEST_CASE("oracle triangle: power, char poly and distance class agree") {
  std::vector<LabeledGraph> graphs;
  for (std::uint64_t n = 1; n <= 32; ++n) graphs.push_back(bricklayer_graph(n, 2));
  graphs.push_back(hamming_graph(2, 3));
  graphs.push_back(bricklayer_graph(20, 3));
  for (const LabeledGraph& g : graphs) {
    const double via_power = principal_eigenvalue_power(g, 1e-12).lambda;
    const double via_chi = char_poly_largest_root(g);
    REQUIRE(via_power == Catch::Approx(via_chi).margin(1e-9));
  }
  for (const auto [d, r] : {std::pair{3, 1}, {4, 2}, {5, 2}, {5, 5}}) {
    const LabeledGraph ball = hamming_ball(d, r);
    const double via_power = principal_eigenvalue_power(ball, 1e-12).lambda;
    const double via_chi = char_poly_largest_root(ball);
    const double via_reduced = ball_eigenvalue_reduced(d, r).spectral.lambda;
    REQUIRE(via_power == Catch::Approx(via_chi).margin(1e-9));
    REQUIRE(via_power == Catch::Approx(via_reduced).margin(1e-9));
  }
}

TEST_CASE("strict growth of the bricklayer eigenvalue") {
  double prev = principal_eigenvalue_auto(bricklayer_graph(1, 2)).lambda;
  for (std::uint64_t n = 2; n <= 256; ++n) {
    const double cur = principal_eigenvalue_auto(bricklayer_graph(n, 2)).lambda;
    REQUIRE(cur > prev + 1e-10);
    prev = cur;
  }
}

TEST_CASE("doubling shifts the eigenvalue by one") {
  for (std::uint64_t n = 1; n <= 128; ++n) {
    const LabeledGraph g = bricklayer_graph(n, 2);
    const double lam = principal_eigenvalue_auto(g).lambda;
    const double doubled = principal_eigenvalue_auto(cartesian_product_k2(g)).lambda;
    REQUIRE(std::abs(doubled - (lam + 1.0)) < 1e-9);
  }
}

TEST_CASE("interlacing of consecutive bricklayer spectra") {
  std::mt19937_64 rng(1729);
  std::uniform_int_distribution<std::uint64_t> pick(1, 20);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t n = pick(rng);
    const std::vector<double> small = full_exact_spectrum(bricklayer_graph(n, 2));
    const std::vector<double> big = full_exact_spectrum(bricklayer_graph(n + 1, 2));
    REQUIRE(small.size() == n);
    REQUIRE(big.size() == n + 1);
    for (std::size_t j = 0; j < n; ++j) {
      REQUIRE(big[j] <= small[j] + 1e-9);
      REQUIRE(small[j] <= big[j + 1] + 1e-9);
    }
  }
}

TEST_CASE("eigenvalue sits between mean and max degree") {
  for (const LabeledGraph& g : {bricklayer_graph(5, 2), bricklayer_graph(11, 2),
                                hamming_ball(5, 2), hamming_graph(2, 4), bricklayer_graph(13, 3)}) {
    const double lam = principal_eigenvalue_power(g).lambda;
    REQUIRE(lam >= g.mean_degree() - 1e-9);
    REQUIRE(lam <= static_cast<double>(g.max_degree()) + 1e-9);
  }
}

TEST_CASE("binary subgraph eigenvalues stay within +-d") {
  std::mt19937_64 rng(5150);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::uint64_t> labels;
    for (std::uint64_t l = 0; l < 32; ++l)
      if (rng() & 1) labels.push_back(l);
    if (labels.empty()) labels.push_back(0);
    const LabeledGraph g = induced_subgraph(5, 2, labels);
    for (double ev : detail::jacobi_eigenvalues(detail::dense_adjacency(g.adj)))
      REQUIRE(std::abs(ev) <= 5.0 + 1e-9);
  }
}

TEST_CASE("lanczos agrees with the polynomial route on large graphs") {
  const SpectralResult r513 = principal_eigenvalue_lanczos(bricklayer_graph(513, 2));
  REQUIRE(r513.lambda == Catch::Approx(lambda_plus_root(9)).margin(1e-9));
  REQUIRE(r513.residual <= 1e-11);
  for (double x : r513.eigenvector) REQUIRE(x >= 0.0);

  const SpectralResult r511 = principal_eigenvalue_lanczos(bricklayer_graph(511, 2));
  REQUIRE(r511.lambda == Catch::Approx(lambda_minus_root(9)).margin(1e-9));

  const SpectralResult cube = principal_eigenvalue_lanczos(hamming_graph(8, 2));
  REQUIRE(cube.lambda == Catch::Approx(8.0).margin(1e-10));
}

TEST_CASE("robustness is the eigenvalue over the mutation directions") {
  REQUIRE(robustness(hamming_graph(3, 2)) == Catch::Approx(1.0).margin(1e-10));
  REQUIRE(robustness(bricklayer_graph(4, 2)) == Catch::Approx(1.0).margin(1e-10));
  REQUIRE(robustness(bricklayer_graph(5, 2)) == Catch::Approx(kLambda5 / 3.0).margin(1e-10));
  REQUIRE(robustness_from_lambda(2.0, 4, 3) == Catch::Approx(2.0 / 12.0));
}
