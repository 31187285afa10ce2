#pragma once

#include "bricklayer/graphs.hpp"
#include "bricklayer/parallel.hpp"
#include "bricklayer/spectra.hpp"
#include "bricklayer/spectral_polys.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bricklayer {

enum class Verdict { holds_strict, holds_equal, violated };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds_strict: return "holds_strict";
    case Verdict::holds_equal: return "holds_equal";
    case Verdict::violated: return "violated";
  }
  return "?";
}

struct BoundReport {
  std::string index_name = "n";
  std::uint64_t index = 0;
  double lambda = 0;
  double bound = 0;
  double margin = 0;  // bound - lambda
  Verdict verdict = Verdict::violated;
  bool escalated = false;
  std::optional<LabeledGraph> witness;  // attached to violations
};

struct ReportSummary {
  std::uint64_t checked = 0, holds_strict = 0, holds_equal = 0, violated = 0;
};

inline ReportSummary summarize(const std::vector<BoundReport>& reports) {
  ReportSummary s;
  s.checked = reports.size();
  for (const auto& r : reports) {
    if (r.verdict == Verdict::holds_strict) ++s.holds_strict;
    if (r.verdict == Verdict::holds_equal) ++s.holds_equal;
    if (r.verdict == Verdict::violated) ++s.violated;
  }
  return s;
}

/// Exponent k with n = base^k, decided by repeated integer division.
inline std::optional<int> exact_log_base(std::uint64_t n, int base) {
  if (n == 0 || base < 2) return std::nullopt;
  int k = 0;
  while (n % static_cast<std::uint64_t>(base) == 0) {
    n /= static_cast<std::uint64_t>(base);
    ++k;
  }
  return n == 1 ? std::optional<int>(k) : std::nullopt;
}

inline constexpr double kStrictMargin = 1e-9;

namespace detail {

using HighFloat = boost::multiprecision::cpp_bin_float_50;

inline double log_base_highprec(const Rational& q, int base) {
  const HighFloat x = HighFloat(big_numerator(q)) / HighFloat(big_denominator(q));
  const HighFloat v = boost::multiprecision::log(x) / boost::multiprecision::log(HighFloat(base));
  return v.convert_to<double>();
}

}  // namespace detail

struct CertifiedComparison {
  bool holds = false;  // lhs < log_base(q) with margin >= required
  double margin = 0;
  bool escalated = false;
};

/// Certifies lhs + lhs_err < log_base(q) - required_margin. Double evaluation
/// first; comparisons landing near the decision threshold are re-evaluated at
/// 50 significant digits.
inline CertifiedComparison certified_below_log(double lhs, double lhs_err, const Rational& q,
                                               int base = 2,
                                               double required_margin = kStrictMargin) {
  if (q <= 0) throw std::domain_error("certified_below_log: nonpositive argument");
  CertifiedComparison out;
  const double logq = std::log2(to_double(q)) / std::log2(static_cast<double>(base));
  out.margin = logq - lhs;
  const double window = 64 * (lhs_err + 1e-12) + 1e-10;
  if (std::abs(out.margin - required_margin) <= window) {
    out.margin = detail::log_base_highprec(q, base) - lhs;
    out.escalated = true;
  }
  out.holds = out.margin >= required_margin + lhs_err;
  return out;
}

namespace detail {

struct LambdaValue {
  double value = 0;
  double err = 0;  // certified bound on |value - true lambda|
};

/// lambda of the bricklayer graph G_{n,2}. Materialized graphs up to 2^24
/// vertices; n = 2^d +/- 1 beyond d = 10 goes through the polynomial roots.
inline LambdaValue bricklayer_lambda(std::uint64_t n, double tol = 1e-12) {
  if (n > (std::uint64_t(1) << 10)) {
    for (int d = 11; d <= 62; ++d) {
      const std::uint64_t p = std::uint64_t(1) << d;
      if (n == p - 1) {
        const RootBracket b = lambda_minus_bracket(d, 1e-12);
        return {b.midpoint(), 1e-12};
      }
      if (n == p + 1) {
        const RootBracket b = lambda_plus_bracket(d, 1e-12);
        return {b.midpoint(), 1e-12};
      }
    }
  }
  const SpectralResult r = principal_eigenvalue_auto(bricklayer_graph(n, 2), tol);
  return {r.lambda, std::max(r.residual, 1e-13)};
}

}  // namespace detail

/// Theorem sweep: lambda_n <= log2 n for 1 <= n <= n_max, with equality
/// exactly at powers of two.
inline std::vector<BoundReport> check_theorem(std::uint64_t n_max, int threads = 1,
                                              double tol = 1e-12) {
  if (n_max < 1) throw std::domain_error("check_theorem requires n_max >= 1");
  std::vector<BoundReport> reports(n_max);
  detail::parallel_for(n_max, threads, [&](std::size_t idx) {
    const std::uint64_t n = idx + 1;
    const detail::LambdaValue lambda = detail::bricklayer_lambda(n, tol);
    BoundReport rep;
    rep.index_name = "n";
    rep.index = n;
    rep.lambda = lambda.value;
    if (const auto k = exact_log_base(n, 2)) {
      rep.bound = static_cast<double>(*k);
      rep.margin = rep.bound - lambda.value;
      rep.verdict = std::abs(rep.margin) <= kStrictMargin ? Verdict::holds_equal
                                                          : Verdict::violated;
    } else {
      const CertifiedComparison cmp = certified_below_log(lambda.value, lambda.err, Rational(n));
      rep.bound = lambda.value + cmp.margin;
      rep.margin = cmp.margin;
      rep.escalated = cmp.escalated;
      rep.verdict = cmp.holds ? Verdict::holds_strict : Verdict::violated;
    }
    if (rep.verdict == Verdict::violated && n <= 4096) rep.witness = bricklayer_graph(n, 2);
    reports[idx] = std::move(rep);
  });
  return reports;
}

struct ChainLink {
  std::string name;
  bool holds = false;
  bool exact = false;  // decided by exact rational comparison
  double margin = 0;
  bool escalated = false;
};

struct ChainReport {
  int d = 0;
  double lambda = 0;
  std::vector<ChainLink> links;
  bool conclusion_holds = false;   // every link certified
  bool asserted_by_paper = false;  // d within the hypothesis the paper states
};

namespace detail {

inline ChainLink exact_link(std::string name, const Rational& lhs, const Rational& rhs) {
  ChainLink link;
  link.name = std::move(name);
  link.exact = true;
  link.holds = lhs < rhs;
  link.margin = to_double(rhs - lhs);
  return link;
}

/// Certifies largest_root(P) < bound with zero numerical error: within the
/// isolating interval (iso_lo, iso_hi] the polynomial is positive exactly
/// above its largest root, so one exact sign evaluation decides. The true
/// margins here shrink like 2^{-d} and below; no float tolerance would do.
inline ChainLink root_link(std::string name, const Polynomial& p, const Rational& iso_lo,
                           const Rational& iso_hi, const RootBracket& root,
                           const Rational& bound) {
  ChainLink link;
  link.name = std::move(name);
  link.exact = true;
  link.holds = bound > iso_lo && bound <= iso_hi && p.sign_at(bound) > 0;
  link.margin = to_double(bound) - root.midpoint();
  return link;
}

inline ChainLink log_link(std::string name, double lhs, double lhs_err, const Rational& q) {
  const CertifiedComparison cmp = certified_below_log(lhs, lhs_err, q);
  ChainLink link;
  link.name = std::move(name);
  link.holds = cmp.holds;
  link.margin = cmp.margin;
  link.escalated = cmp.escalated;
  return link;
}

}  // namespace detail

/// Bound chain for lambda_{2^d - 1}:
///   root < d - 1/sum < d - (2/3) d/2^d <= d - 3/2^d < log2(2^d - 2).
/// The two middle comparisons are the paper's d >= 5 route and are gated on
/// that hypothesis; below d = 5 the report keeps the tangent link plus the
/// direct root-vs-log comparison.
inline ChainReport check_minus_chain(int d) {
  if (d < 2) throw std::domain_error("check_minus_chain requires d >= 2");
  ChainReport rep;
  rep.d = d;
  rep.asserted_by_paper = d >= 5;
  const RootBracket root = lambda_minus_bracket(d, 1e-12);
  rep.lambda = root.midpoint();
  const Rational tangent = tangent_bound_minus(d);

  rep.links.push_back(detail::root_link("lambda_below_tangent", P_minus(d), Rational(d - 1),
                                        Rational(d), root, tangent));

  const Rational mid1 = Rational(d) - Rational(2 * BigInt(d), 3 * pow2(d));
  rep.links.push_back(detail::exact_link("tangent_below_sum_bound", tangent, mid1));

  if (d >= 5) {
    const Rational mid2 = Rational(d) - Rational(BigInt(3), pow2(d));
    ChainLink l3 = detail::exact_link("sum_bound_below_taylor_anchor", mid1, mid2);
    l3.holds = mid1 <= mid2;
    rep.links.push_back(l3);
    rep.links.push_back(detail::log_link("taylor_anchor_below_log", to_double(mid2), 1e-12,
                                         Rational(pow2(d)) - 2));
  }
  rep.links.push_back(detail::log_link("direct_root_below_log", rep.lambda, 1e-12,
                                       Rational(pow2(d)) - 2));
  rep.conclusion_holds = true;
  for (const auto& l : rep.links) rep.conclusion_holds = rep.conclusion_holds && l.holds;
  return rep;
}

/// Bound chain for lambda_{2^d + 1}:
///   root < d + 1/(d 2^d - sum) < d + 1/((d - 3/(2d)) 2^d) <= d + (1/2)/2^d
///   < log2(2^d + 1/2).
/// All links evaluate from d = 3; the paper combines its bounds for d >= 5.
inline ChainReport check_plus_chain(int d) {
  if (d < 1) throw std::domain_error("check_plus_chain requires d >= 1");
  ChainReport rep;
  rep.d = d;
  rep.asserted_by_paper = d >= 5;
  const RootBracket root = lambda_plus_bracket(d, 1e-12);
  rep.lambda = root.midpoint();
  const Rational tangent = tangent_bound_plus(d);

  rep.links.push_back(detail::root_link("lambda_below_tangent", P_plus(d), Rational(d),
                                        Rational(d + 1), root, tangent));

  const Rational denom2 = (Rational(d) - Rational(3, 2 * d)) * Rational(pow2(d));
  if (d >= 3 && denom2 > 0) {
    const Rational mid1 = Rational(d) + 1 / denom2;
    rep.links.push_back(detail::exact_link("tangent_below_sum_bound", tangent, mid1));
    const Rational mid2 = Rational(d) + Rational(1, 2 * pow2(d));
    ChainLink l3 = detail::exact_link("sum_bound_below_taylor_anchor", mid1, mid2);
    l3.holds = mid1 <= mid2;
    rep.links.push_back(l3);
    rep.links.push_back(detail::log_link("taylor_anchor_below_log", to_double(mid2), 1e-12,
                                         Rational(pow2(d)) + Rational(1, 2)));
  }
  rep.links.push_back(detail::log_link("direct_root_below_log", rep.lambda, 1e-12,
                                       Rational(pow2(d)) + Rational(1, 2)));
  rep.conclusion_holds = true;
  for (const auto& l : rep.links) rep.conclusion_holds = rep.conclusion_holds && l.holds;
  return rep;
}

struct StaircaseReport {
  int k = 0;
  bool condition_holds = false;        // lambda_n < log2(n-1) on [2^k+2, 2^{k+1}-1]
  bool doubled_holds = false;          // lambda_{2n} < log2(2n-2) on the same n range
  bool expansion_holds = false;        // the six-term chain for each n
  bool condition_next_holds = false;   // the condition again at k+1
  double min_margin = 0;
  std::vector<std::string> failures;
};

namespace detail {

inline bool staircase_condition(std::uint64_t lo, std::uint64_t hi, double& min_margin,
                                std::vector<std::string>& failures, const char* tag,
                                int threads) {
  std::vector<double> margins(hi - lo + 1);
  std::vector<char> ok(hi - lo + 1, 0);
  parallel_for(hi - lo + 1, threads, [&](std::size_t idx) {
    const std::uint64_t n = lo + idx;
    const LambdaValue lv = bricklayer_lambda(n);
    const CertifiedComparison cmp = certified_below_log(lv.value, lv.err, Rational(n) - 1);
    margins[idx] = cmp.margin;
    ok[idx] = cmp.holds ? 1 : 0;
  });
  bool all = true;
  for (std::size_t idx = 0; idx < ok.size(); ++idx) {
    min_margin = std::min(min_margin, margins[idx]);
    if (!ok[idx]) {
      all = false;
      failures.push_back(std::string(tag) + " fails at n=" + std::to_string(lo + idx));
    }
  }
  return all;
}

}  // namespace detail

/// Numeric confirmation of one staircase step: the strengthened condition at
/// k, its doubled form, the six-term expansion chain, and the condition at k+1.
inline StaircaseReport check_staircase(int k, int threads = 1) {
  if (k < 3) throw std::domain_error("check_staircase requires k >= 3");
  StaircaseReport rep;
  rep.k = k;
  rep.min_margin = std::numeric_limits<double>::infinity();
  const std::uint64_t lo = (std::uint64_t(1) << k) + 2;
  const std::uint64_t hi = (std::uint64_t(1) << (k + 1)) - 1;

  rep.condition_holds =
      detail::staircase_condition(lo, hi, rep.min_margin, rep.failures, "condition", threads);

  std::vector<detail::LambdaValue> lam(2 * hi + 1);
  detail::parallel_for(2 * hi + 1 - (2 * lo - 2), threads, [&](std::size_t idx) {
    const std::uint64_t n = 2 * lo - 2 + idx;
    lam[n] = detail::bricklayer_lambda(n);
  });

  rep.doubled_holds = true;
  rep.expansion_holds = true;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const auto cmp = certified_below_log(lam[2 * n].value, lam[2 * n].err, Rational(2 * n) - 2);
    rep.min_margin = std::min(rep.min_margin, cmp.margin);
    if (!cmp.holds) {
      rep.doubled_holds = false;
      rep.failures.push_back("doubled inequality fails at n=" + std::to_string(n));
    }
    // lambda_{2n-2} < lambda_{2n-1} < lambda_{2n} < log2(2n-2) < log2(2n-1) < log2(2n)
    const double err3 = lam[2 * n - 2].err + lam[2 * n - 1].err;
    bool chain = lam[2 * n - 1].value - lam[2 * n - 2].value > 1e-10 + err3;
    chain = chain && lam[2 * n].value - lam[2 * n - 1].value >
                         1e-10 + lam[2 * n].err + lam[2 * n - 1].err;
    chain = chain && cmp.holds;  // lambda_{2n} < log2(2n-2) dominates the log tail
    if (!chain) {
      rep.expansion_holds = false;
      rep.failures.push_back("expansion chain fails at n=" + std::to_string(n));
    }
  }

  rep.condition_next_holds = detail::staircase_condition(
      (std::uint64_t(1) << (k + 1)) + 2, (std::uint64_t(1) << (k + 2)) - 1, rep.min_margin,
      rep.failures, "condition@k+1", threads);
  return rep;
}

struct StaircaseInductionReport {
  bool base_theorem_holds = false;    // Theorem verified for n <= 16 (char-poly route)
  bool base_condition_holds = false;  // strengthened condition at k = 3
  std::vector<ChainReport> minus_edges;
  std::vector<ChainReport> plus_edges;
  std::uint64_t certified_up_to = 0;  // Theorem certified for all n <= this
  std::vector<std::string> failures;
};

/// The staircase induction itself: numeric base at n <= 16 (via the exact
/// characteristic-polynomial oracle), polynomial-root edge certificates at
/// n = 2^d +/- 1, then interval bookkeeping from k_from up through k_to.
/// Never calls the direct theorem sweep.
inline StaircaseInductionReport staircase_induction(int k_from = 3, int k_to = 8) {
  if (k_from < 3 || k_to < k_from) throw std::domain_error("staircase_induction needs 3 <= k_from <= k_to");
  StaircaseInductionReport rep;

  rep.base_theorem_holds = true;
  for (std::uint64_t n = 1; n <= 16; ++n) {
    const double lam = char_poly_largest_root(bricklayer_graph(n, 2));
    if (const auto k = exact_log_base(n, 2)) {
      if (std::abs(lam - static_cast<double>(*k)) > kStrictMargin) {
        rep.base_theorem_holds = false;
        rep.failures.push_back("base equality fails at n=" + std::to_string(n));
      }
    } else if (!certified_below_log(lam, 1e-12, Rational(n)).holds) {
      rep.base_theorem_holds = false;
      rep.failures.push_back("base strict bound fails at n=" + std::to_string(n));
    }
  }

  rep.base_condition_holds = true;
  for (std::uint64_t n = 10; n <= 15; ++n) {
    const double lam = char_poly_largest_root(bricklayer_graph(n, 2));
    if (!certified_below_log(lam, 1e-12, Rational(n) - 1).holds) {
      rep.base_condition_holds = false;
      rep.failures.push_back("base condition fails at n=" + std::to_string(n));
    }
  }

  bool ok = rep.base_theorem_holds && rep.base_condition_holds;
  std::uint64_t certified = ok ? 16 : 0;
  for (int k = k_from; k <= k_to && ok; ++k) {
    // Theorem on [2^{k+1}, 2^{k+2}] needs the condition at k plus both edges.
    ChainReport plus = check_plus_chain(k + 1);    // n = 2^{k+1} + 1
    ChainReport minus = check_minus_chain(k + 2);  // n = 2^{k+2} - 1
    if (!plus.conclusion_holds) {
      ok = false;
      rep.failures.push_back("plus edge fails at d=" + std::to_string(k + 1));
    }
    if (!minus.conclusion_holds) {
      ok = false;
      rep.failures.push_back("minus edge fails at d=" + std::to_string(k + 2));
    }
    rep.plus_edges.push_back(std::move(plus));
    rep.minus_edges.push_back(std::move(minus));
    if (ok) certified = std::uint64_t(1) << (k + 2);
  }
  rep.certified_up_to = certified;
  return rep;
}

struct CrossoverRow {
  std::uint64_t n = 0;
  double star_lambda = 0;  // sqrt(n-1)
  double log2_n = 0;
  bool star_wins = false;
};

struct CrossoverReport {
  std::vector<CrossoverRow> rows;
  std::optional<std::uint64_t> first_star_win;
  double max_power_residual = 0;  // cross-validation of sqrt(n-1) by power iteration
};

/// Where does the star S_{n-1} overtake the bricklayer ceiling log2 n?
inline CrossoverReport star_crossover(std::uint64_t n_max) {
  if (n_max < 2) throw std::domain_error("star_crossover requires n_max >= 2");
  CrossoverReport rep;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    CrossoverRow row;
    row.n = n;
    row.star_lambda = std::sqrt(static_cast<double>(n - 1));
    row.log2_n = std::log2(static_cast<double>(n));
    row.star_wins = row.star_lambda > row.log2_n + kStrictMargin;
    if (row.star_wins && !rep.first_star_win) rep.first_star_win = n;
    if (n <= 4096) {
      const SpectralResult pw =
          principal_eigenvalue_power(star_graph(static_cast<std::uint32_t>(n - 1)), 1e-12);
      rep.max_power_residual =
          std::max(rep.max_power_residual, std::abs(pw.lambda - row.star_lambda));
    }
    rep.rows.push_back(row);
  }
  return rep;
}

/// Empirical probe of the general-alphabet bound lambda_{n,a} <= (a-1) log_a n.
/// A violation is a finding, not an error: it comes back as a report with the
/// witness graph attached.
inline std::vector<BoundReport> check_conjecture(int a, std::uint64_t n_max, int threads = 1,
                                                 double tol = 1e-12) {
  if (a < 3) throw std::domain_error("check_conjecture requires a >= 3");
  if (n_max < 1) throw std::domain_error("check_conjecture requires n_max >= 1");
  std::vector<BoundReport> reports(n_max);
  detail::parallel_for(n_max, threads, [&](std::size_t idx) {
    const std::uint64_t n = idx + 1;
    const LabeledGraph g = bricklayer_graph(n, a);
    const SpectralResult r = principal_eigenvalue_auto(g, tol);
    BoundReport rep;
    rep.index_name = "n";
    rep.index = n;
    rep.lambda = r.lambda;
    if (const auto k = exact_log_base(n, a)) {
      rep.bound = static_cast<double>((a - 1) * *k);
      rep.margin = rep.bound - r.lambda;
      rep.verdict = std::abs(rep.margin) <= kStrictMargin ? Verdict::holds_equal
                                                          : Verdict::violated;
    } else {
      const double err = std::max(r.residual, 1e-13);
      CertifiedComparison cmp =
          certified_below_log(r.lambda / (a - 1), err / (a - 1), Rational(n), a,
                              kStrictMargin / (a - 1));
      rep.bound = (r.lambda / (a - 1) + cmp.margin) * (a - 1);
      rep.margin = cmp.margin * (a - 1);
      rep.escalated = cmp.escalated;
      rep.verdict = cmp.holds ? Verdict::holds_strict : Verdict::violated;
    }
    if (rep.verdict == Verdict::violated) rep.witness = g;
    reports[idx] = std::move(rep);
  });
  return reports;
}

/// Independent exact re-check for a conjecture violation candidate: largest
/// root of the exact characteristic polynomial against the same bound.
inline bool conjecture_violation_confirmed(const LabeledGraph& g, int a) {
  const double lam = char_poly_largest_root(g);
  const std::uint64_t n = g.vertex_count();
  if (const auto k = exact_log_base(n, a))
    return std::abs(lam - static_cast<double>((a - 1) * *k)) > kStrictMargin;
  return !certified_below_log(lam / (a - 1), 1e-12, Rational(n), a, kStrictMargin / (a - 1)).holds;
}

struct ProbeRow {
  int d = 0;
  bool minus_holds = false;  // lambda_{2^d-1} < log2(2^d - N)
  bool plus_holds = false;   // lambda_{2^d+1} < log2(2^d + eps)
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  std::optional<int> least_d_minus;
  std::optional<int> least_d_plus;
  bool minus_monotone = false;  // holds from least_d_minus to the end of the range
  bool plus_monotone = false;
};

/// Monotone-trend probe of the large-d behaviour: for each d in range, is
/// lambda_{2^d-1} already below log2(2^d - N), and lambda_{2^d+1} below
/// log2(2^d + eps)?
inline ProbeReport asymptotic_probe(std::uint64_t N, double eps, int d_lo, int d_hi) {
  if (N < 1 || eps <= 0) throw std::domain_error("asymptotic_probe needs N >= 1, eps > 0");
  if (d_lo < 2 || d_hi < d_lo) throw std::domain_error("asymptotic_probe: bad d range");
  ProbeReport rep;
  const Rational eps_r = rational_from_double(eps);
  for (int d = d_lo; d <= d_hi; ++d) {
    ProbeRow row;
    row.d = d;
    const Rational target_minus = Rational(pow2(d)) - Rational(BigInt(N));
    if (target_minus > 1) {
      const RootBracket rb = lambda_minus_bracket(d, 1e-12);
      row.minus_holds = certified_below_log(rb.midpoint(), 1e-12, target_minus).holds;
    }
    const RootBracket pb = lambda_plus_bracket(d, 1e-12);
    row.plus_holds =
        certified_below_log(pb.midpoint(), 1e-12, Rational(pow2(d)) + eps_r).holds;
    if (row.minus_holds && !rep.least_d_minus) rep.least_d_minus = d;
    if (row.plus_holds && !rep.least_d_plus) rep.least_d_plus = d;
    rep.rows.push_back(row);
  }
  auto monotone = [&](std::optional<int> least, auto member) {
    if (!least) return false;
    for (const auto& row : rep.rows)
      if (row.d >= *least && !(row.*member)) return false;
    return true;
  };
  rep.minus_monotone = monotone(rep.least_d_minus, &ProbeRow::minus_holds);
  rep.plus_monotone = monotone(rep.least_d_plus, &ProbeRow::plus_holds);
  return rep;
}

}  // namespace bricklayer
