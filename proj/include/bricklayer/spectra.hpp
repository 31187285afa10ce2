#pragma once

#include "bricklayer/graphs.hpp"
#include "bricklayer/polynomial.hpp"
#include "bricklayer/rational.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace bricklayer {

enum class EigMethod { power, distance_class, char_poly, lanczos };

inline const char* to_string(EigMethod m) {
  switch (m) {
    case EigMethod::power: return "power";
    case EigMethod::distance_class: return "distance_class";
    case EigMethod::char_poly: return "char_poly";
    case EigMethod::lanczos: return "lanczos";
  }
  return "?";
}

struct SpectralResult {
  double lambda = 0.0;
  std::vector<double> eigenvector;  // unit norm, entries >= 0
  double residual = 0.0;            // ||A x - lambda x||_2
  EigMethod method = EigMethod::power;
  long iterations = 0;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, SpectralResult last)
      : std::runtime_error(what), last_iterate(std::move(last)) {}
  SpectralResult last_iterate;
};

namespace detail {

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

/// y = A x restricted to the vertices listed in comp (local indexing).
inline void matvec_component(const Adjacency& adj, const std::vector<std::uint32_t>& comp,
                             const std::vector<std::int32_t>& local, const std::vector<double>& x,
                             std::vector<double>& y) {
  for (std::size_t i = 0; i < comp.size(); ++i) {
    double s = 0;
    for (std::uint32_t w : adj[comp[i]]) s += x[static_cast<std::size_t>(local[w])];
    y[i] = s;
  }
}

struct ComponentEig {
  double lambda;
  std::vector<double> x;  // local, unit norm
  double residual;
  long iterations;
};

/// Power iteration on A + I (the shift keeps the Perron value dominant on
/// bipartite subgraphs), all-ones start, Rayleigh-quotient residual test.
inline ComponentEig power_component(const Adjacency& adj, const std::vector<std::uint32_t>& comp,
                                    const std::vector<std::int32_t>& local, double tol,
                                    long max_iter) {
  const std::size_t n = comp.size();
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
  ComponentEig out{0.0, {}, 0.0, 0};
  for (long it = 1; it <= max_iter; ++it) {
    matvec_component(adj, comp, local, x, y);
    for (std::size_t i = 0; i < n; ++i) y[i] += x[i];  // (A + I) x
    const double rayleigh = dot(x, y);
    double rn = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - rayleigh * x[i];
      rn += r * r;
    }
    rn = std::sqrt(rn);
    if (rn <= tol) {
      out.lambda = rayleigh - 1.0;
      out.x = x;
      out.residual = rn;
      out.iterations = it;
      return out;
    }
    const double ny = norm2(y);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ny;
    out.lambda = rayleigh - 1.0;
    out.residual = rn;
    out.iterations = it;
  }
  out.x = x;
  throw ConvergenceError("power iteration did not reach tolerance", SpectralResult{
      out.lambda, out.x, out.residual, EigMethod::power, out.iterations});
}

/// Number of eigenvalues of the symmetric tridiagonal (alpha, beta) below x.
inline int symtri_count_less(const std::vector<double>& alpha, const std::vector<double>& beta,
                             double x) {
  int cnt = 0;
  double q = alpha[0] - x;
  if (q < 0) ++cnt;
  for (std::size_t i = 1; i < alpha.size(); ++i) {
    if (std::abs(q) < 1e-300) q = -1e-300;
    q = (alpha[i] - x) - beta[i - 1] * beta[i - 1] / q;
    if (q < 0) ++cnt;
  }
  return cnt;
}

/// Largest eigenvalue by bisection on the eigenvalue-count function.
inline double symtri_top_eigenvalue(const std::vector<double>& alpha,
                                    const std::vector<double>& beta, long* steps = nullptr) {
  const int m = static_cast<int>(alpha.size());
  double lo = alpha[0], hi = alpha[0];
  for (int i = 0; i < m; ++i) {
    const double r = (i > 0 ? std::abs(beta[i - 1]) : 0.0) +
                     (i + 1 < m ? std::abs(beta[i]) : 0.0);
    lo = std::min(lo, alpha[i] - r);
    hi = std::max(hi, alpha[i] + r);
  }
  long it = 0;
  for (; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (symtri_count_less(alpha, beta, mid) == m)
      hi = mid;
    else
      lo = mid;
  }
  if (steps) *steps = it;
  return 0.5 * (lo + hi);
}

/// Solve (T - sigma I) z = b for tridiagonal T with partial pivoting.
inline std::vector<double> symtri_shifted_solve(const std::vector<double>& alpha,
                                                const std::vector<double>& beta, double sigma,
                                                std::vector<double> b) {
  const std::size_t m = alpha.size();
  std::vector<double> dl(m, 0), dm(m, 0), du(m, 0), du2(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    dm[i] = alpha[i] - sigma;
    if (i + 1 < m) {
      du[i] = beta[i];
      dl[i + 1] = beta[i];
    }
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (std::abs(dl[i + 1]) > std::abs(dm[i])) {
      std::swap(dm[i], dl[i + 1]);
      std::swap(du[i], dm[i + 1]);
      if (i + 2 < m) {
        du2[i] = du[i + 1];
        du[i + 1] = 0;
      }
      std::swap(b[i], b[i + 1]);
    }
    if (dm[i] == 0) dm[i] = 1e-300;
    const double f = dl[i + 1] / dm[i];
    dm[i + 1] -= f * du[i];
    if (i + 2 < m) du[i + 1] -= f * du2[i];
    b[i + 1] -= f * b[i];
  }
  if (dm[m - 1] == 0) dm[m - 1] = 1e-300;
  std::vector<double> z(m);
  for (std::size_t ii = m; ii-- > 0;) {
    double s = b[ii];
    if (ii + 1 < m) s -= du[ii] * z[ii + 1];
    if (ii + 2 < m) s -= du2[ii] * z[ii + 2];
    z[ii] = s / dm[ii];
  }
  return z;
}

/// Top eigenvector of the tridiagonal by two rounds of inverse iteration.
inline std::vector<double> symtri_top_eigenvector(const std::vector<double>& alpha,
                                                  const std::vector<double>& beta, double theta) {
  const std::size_t m = alpha.size();
  std::vector<double> s(m, 1.0 / std::sqrt(static_cast<double>(m)));
  const double shift = theta * (1.0 + 1e-14) + 1e-300;
  for (int round = 0; round < 2; ++round) {
    s = symtri_shifted_solve(alpha, beta, shift, std::move(s));
    const double ns = norm2(s);
    for (double& v : s) v /= ns;
  }
  return s;
}

/// Lanczos with full reorthogonalization. The Perron value is certified by the
/// explicit residual plus eigenvector nonnegativity (the Perron vector is the
/// only nonnegative eigenvector of an irreducible nonnegative matrix).
inline ComponentEig lanczos_component(const Adjacency& adj, const std::vector<std::uint32_t>& comp,
                                      const std::vector<std::int32_t>& local, double tol) {
  const std::size_t n = comp.size();
  std::vector<std::vector<double>> basis;
  std::vector<double> alpha, beta;
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n))), w(n);
  basis.push_back(v);
  long matvecs = 0;
  ComponentEig out{0.0, {}, std::numeric_limits<double>::infinity(), 0};
  for (std::size_t j = 0; j < n; ++j) {
    matvec_component(adj, comp, local, basis[j], w);
    ++matvecs;
    const double aj = dot(w, basis[j]);
    alpha.push_back(aj);
    for (std::size_t i = 0; i < n; ++i) w[i] -= aj * basis[j][i];
    if (j > 0)
      for (std::size_t i = 0; i < n; ++i) w[i] -= beta[j - 1] * basis[j - 1][i];
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : basis) {
        const double c = dot(w, u);
        for (std::size_t i = 0; i < n; ++i) w[i] -= c * u[i];
      }
    const double bj = norm2(w);

    const double theta = symtri_top_eigenvalue(alpha, beta);
    const std::vector<double> s = symtri_top_eigenvector(alpha, beta, theta);
    const double est = bj * std::abs(s.back());
    const bool exhausted = (j + 1 == n) || bj < 1e-13;
    if (est <= 0.25 * tol || exhausted) {
      std::vector<double> x(n, 0.0);
      for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) x[i] += s[k] * basis[k][i];
      double nx = norm2(x);
      double orient = 0;
      for (double xi : x) orient += xi;
      if (orient < 0) nx = -nx;
      for (double& xi : x) xi /= nx;
      matvec_component(adj, comp, local, x, w);
      double rn = 0, xmin = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const double r = w[i] - theta * x[i];
        rn += r * r;
        xmin = std::min(xmin, x[i]);
      }
      rn = std::sqrt(rn);
      out.lambda = theta;
      out.residual = rn;
      out.iterations = matvecs;
      if (rn <= tol && xmin >= -16 * tol) {
        for (double& xi : x) xi = std::max(xi, 0.0);
        out.x = std::move(x);
        return out;
      }
      if (exhausted) {
        out.x = std::move(x);
        throw ConvergenceError("lanczos did not certify the Perron pair", SpectralResult{
            out.lambda, out.x, out.residual, EigMethod::lanczos, out.iterations});
      }
    }
    if (bj < 1e-13) break;  // invariant subspace before certification: restart below
    beta.push_back(bj);
    for (std::size_t i = 0; i < n; ++i) w[i] /= bj;
    basis.push_back(w);
  }
  throw ConvergenceError("lanczos exhausted the Krylov space", SpectralResult{
      out.lambda, out.x, out.residual, EigMethod::lanczos, out.iterations});
}

inline SpectralResult principal_eigenvalue_impl(const Adjacency& adj, double tol, long max_iter,
                                                bool use_lanczos) {
  if (adj.empty()) throw std::domain_error("principal eigenvalue of an empty graph");
  if (tol <= 0) throw std::domain_error("tolerance must be positive");
  const auto comps = connected_components(adj);
  SpectralResult best;
  best.lambda = -std::numeric_limits<double>::infinity();
  best.method = use_lanczos ? EigMethod::lanczos : EigMethod::power;
  long total_iters = 0;
  std::vector<std::int32_t> local(adj.size(), -1);
  std::vector<std::uint32_t> best_comp;
  for (const auto& comp : comps) {
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<std::int32_t>(i);
    ComponentEig ce = comp.size() == 1
                          ? ComponentEig{0.0, {1.0}, 0.0, 1}
                          : (use_lanczos ? lanczos_component(adj, comp, local, tol)
                                         : power_component(adj, comp, local, tol, max_iter));
    total_iters += ce.iterations;
    if (ce.lambda > best.lambda) {
      best.lambda = ce.lambda;
      best.residual = ce.residual;
      best_comp = comp;
      best.eigenvector.assign(adj.size(), 0.0);
      for (std::size_t i = 0; i < comp.size(); ++i) best.eigenvector[comp[i]] = ce.x[i];
    }
    for (std::uint32_t vtx : comp) local[vtx] = -1;
  }
  best.iterations = total_iters;
  return best;
}

}  // namespace detail

inline SpectralResult principal_eigenvalue_power(const Adjacency& adj, double tol = 1e-12,
                                                 long max_iter = 1000000) {
  return detail::principal_eigenvalue_impl(adj, tol, max_iter, false);
}
inline SpectralResult principal_eigenvalue_power(const LabeledGraph& g, double tol = 1e-12,
                                                 long max_iter = 1000000) {
  return principal_eigenvalue_power(g.adj, tol, max_iter);
}
inline SpectralResult principal_eigenvalue_power(const StarGraph& g, double tol = 1e-12,
                                                 long max_iter = 1000000) {
  return principal_eigenvalue_power(g.adjacency(), tol, max_iter);
}

inline SpectralResult principal_eigenvalue_lanczos(const Adjacency& adj, double tol = 1e-11) {
  return detail::principal_eigenvalue_impl(adj, tol, 0, true);
}
inline SpectralResult principal_eigenvalue_lanczos(const LabeledGraph& g, double tol = 1e-11) {
  return principal_eigenvalue_lanczos(g.adj, tol);
}

/// Power iteration for small graphs, Lanczos above 64 vertices. Lanczos runs
/// at tolerance >= 1e-11; the double-precision residual floor grows with n.
inline SpectralResult principal_eigenvalue_auto(const Adjacency& adj, double tol = 1e-12) {
  if (adj.size() <= 64) return principal_eigenvalue_power(adj, tol);
  return principal_eigenvalue_lanczos(adj, std::max(tol, 1e-11));
}
inline SpectralResult principal_eigenvalue_auto(const LabeledGraph& g, double tol = 1e-12) {
  return principal_eigenvalue_auto(g.adj, tol);
}

struct HypercubeSpectrum {
  int d = 1;
  std::vector<std::pair<int, BigInt>> pairs;  // (eigenvalue d - 2i, multiplicity C(d, i))
};

inline HypercubeSpectrum hypercube_spectrum(int d) {
  if (d < 1) throw std::domain_error("hypercube_spectrum requires d >= 1");
  HypercubeSpectrum s;
  s.d = d;
  for (int i = 0; i <= d; ++i) s.pairs.emplace_back(d - 2 * i, binomial(d, i));
  return s;
}

/// Eigenvector entries of a Hamming ball collapsed by distance from the origin.
struct DistanceProfile {
  std::vector<double> w;  // index k = Hamming distance, 0..r
};

struct BallSpectralResult {
  SpectralResult spectral;  // eigenvector holds the unit-norm distance profile
  DistanceProfile profile;
};

/// Principal eigenvalue of B_{d,r} from the (r+1)x(r+1) distance-class matrix
/// T with T[k][k-1] = k and T[k][k+1] = d-k, via its symmetrization.
inline BallSpectralResult ball_eigenvalue_reduced(int d, int r, double tol = 1e-12) {
  if (d < 1) throw std::domain_error("ball dimension must be >= 1");
  if (r < 0 || r > d) throw std::domain_error("ball radius must be in [0, d]");
  BallSpectralResult out;
  out.spectral.method = EigMethod::distance_class;
  if (r == 0) {
    out.spectral.lambda = 0.0;
    out.spectral.eigenvector = {1.0};
    out.profile.w = {1.0};
    return out;
  }
  const std::size_t m = static_cast<std::size_t>(r) + 1;
  std::vector<double> alpha(m, 0.0), beta(m - 1);
  for (std::size_t k = 0; k + 1 < m; ++k)
    beta[k] = std::sqrt(static_cast<double>((k + 1) * (static_cast<std::size_t>(d) - k)));
  long steps = 0;
  const double lambda = detail::symtri_top_eigenvalue(alpha, beta, &steps);
  // Distance-class equations solved forward from w_0 = 1.
  std::vector<double> w(m);
  w[0] = 1.0;
  w[1] = lambda / d;
  for (std::size_t k = 1; k + 1 < m; ++k)
    w[k + 1] = (lambda * w[k] - static_cast<double>(k) * w[k - 1]) / static_cast<double>(d - k);
  double nw = detail::norm2(w);
  for (double& v : w) v /= nw;
  double rn = 0;
  for (std::size_t k = 0; k < m; ++k) {
    double row = 0;
    if (k > 0) row += static_cast<double>(k) * w[k - 1];
    if (k + 1 < m) row += static_cast<double>(d - k) * w[k + 1];
    const double diff = row - lambda * w[k];
    rn += diff * diff;
  }
  out.spectral.lambda = lambda;
  out.spectral.residual = std::sqrt(rn);
  out.spectral.iterations = steps;
  out.spectral.eigenvector = w;
  out.profile.w = std::move(w);
  if (out.spectral.residual > 10 * std::max(tol, 1e-13))
    throw ConvergenceError("distance-class residual too large", out.spectral);
  return out;
}

/// Expands a distance profile to the per-vertex eigenvector of hamming_ball(d, r),
/// aligned with that graph's sorted vertex order.
inline std::vector<double> lift_distance_profile(int d, int r, const DistanceProfile& profile) {
  const LabeledGraph ball = hamming_ball(d, r);  // capacity-guarded
  std::vector<double> x(ball.vertex_count());
  for (std::size_t i = 0; i < ball.vertex_count(); ++i)
    x[i] = profile.w[static_cast<std::size_t>(__builtin_popcountll(ball.labels[i]))];
  double nx = detail::norm2(x);
  for (double& v : x) v /= nx;
  return x;
}

/// Exact characteristic polynomial of the adjacency matrix. Power-sum traces
/// come from closed-walk counting DP (sparse), coefficients from Newton's
/// identities in exact arithmetic.
inline Polynomial char_poly_exact(const Adjacency& adj, std::size_t guard = 256) {
  const std::size_t n = adj.size();
  if (n == 0) return Polynomial::constant(1);
  if (n > guard)
    throw std::length_error("char_poly_exact: " + std::to_string(n) +
                            " vertices exceeds the exact-arithmetic guard");
  std::vector<BigInt> p(n + 1, 0);  // p[m] = tr(A^m), m >= 1
  std::vector<BigInt> cur(n), nxt(n);
  const std::size_t tmax = n / 2;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(cur.begin(), cur.end(), 0);
    cur[s] = 1;  // cur = A^t e_s
    for (std::size_t t = 0; t <= tmax; ++t) {
      if (t > 0 && 2 * t <= n) {
        BigInt acc = 0;
        for (std::size_t v = 0; v < n; ++v)
          if (cur[v] != 0) acc += cur[v] * cur[v];
        p[2 * t] += acc;
      }
      if (2 * t + 1 <= n) {
        for (std::size_t v = 0; v < n; ++v) {
          BigInt acc = 0;
          for (std::uint32_t u : adj[v]) acc += cur[u];
          nxt[v] = std::move(acc);
        }
        BigInt acc = 0;
        for (std::size_t v = 0; v < n; ++v)
          if (cur[v] != 0 && nxt[v] != 0) acc += cur[v] * nxt[v];
        p[2 * t + 1] += acc;
        cur.swap(nxt);
      } else {
        break;
      }
    }
  }
  // Newton's identities: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
  std::vector<BigInt> e(n + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (i % 2 == 1)
        acc += e[k - i] * p[i];
      else
        acc -= e[k - i] * p[i];
    }
    BigInt q, rem;
    boost::multiprecision::divide_qr(acc, BigInt(k), q, rem);
    if (rem != 0) throw std::logic_error("char_poly_exact: Newton identity not divisible");
    e[k] = std::move(q);
  }
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = Rational((k % 2 == 0) ? e[k] : -e[k]);
  return Polynomial{std::move(coeffs)};
}

inline Polynomial char_poly_exact(const LabeledGraph& g, std::size_t guard = 256) {
  return char_poly_exact(g.adj, guard);
}
inline Polynomial char_poly_exact(const StarGraph& g, std::size_t guard = 256) {
  return char_poly_exact(g.adjacency(), guard);
}

/// Largest real root of the exact characteristic polynomial. The bracket
/// [mean degree - 1, max degree] always contains the principal eigenvalue.
inline double char_poly_largest_root(const LabeledGraph& g, double tol = 1e-13,
                                     std::size_t guard = 256) {
  if (g.vertex_count() == 0) throw std::domain_error("empty graph");
  const Polynomial chi = char_poly_exact(g, guard);
  const Rational lo = Rational(2 * BigInt(g.edge_count()), BigInt(g.vertex_count())) - 1;
  const Rational hi = Rational(BigInt(g.max_degree()));
  return largest_real_root(chi, lo, hi, tol);
}

/// r = lambda / (d (a - 1)).
inline double robustness_from_lambda(double lambda, int d, int a) {
  if (d < 1 || a < 2) throw std::domain_error("robustness needs d >= 1, a >= 2");
  return lambda / (static_cast<double>(d) * (a - 1));
}

inline double robustness(const LabeledGraph& g, int d = 0, int a = 0, double tol = 1e-12) {
  const int dd = d == 0 ? g.d : d;
  const int aa = a == 0 ? g.a : a;
  return robustness_from_lambda(principal_eigenvalue_auto(g, tol).lambda, dd, aa);
}

namespace detail {

/// Cyclic Jacobi sweeps; returns all eigenvalues ascending. Gap-independent,
/// intended for the small dense matrices of the search module.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> m) {
  const std::size_t n = m.size();
  if (n == 0) return {};
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += m[i][j] * m[i][j];
    if (off < 1e-30) break;
    for (std::size_t pp = 0; pp < n; ++pp)
      for (std::size_t q = pp + 1; q < n; ++q) {
        if (std::abs(m[pp][q]) < 1e-300) continue;
        const double theta = (m[q][q] - m[pp][pp]) / (2 * m[pp][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double mkp = m[k][pp], mkq = m[k][q];
          m[k][pp] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double mpk = m[pp][k], mqk = m[q][k];
          m[pp][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = m[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline std::vector<std::vector<double>> dense_adjacency(const Adjacency& adj) {
  std::vector<std::vector<double>> m(adj.size(), std::vector<double>(adj.size(), 0.0));
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::uint32_t j : adj[i]) m[i][j] = 1.0;
  return m;
}

/// Largest adjacency eigenvalue of a small graph via dense Jacobi.
inline double dense_principal_eigenvalue(const Adjacency& adj) {
  if (adj.empty()) throw std::domain_error("empty graph");
  const auto ev = jacobi_eigenvalues(dense_adjacency(adj));
  return ev.back();
}

}  // namespace detail

}  // namespace bricklayer
