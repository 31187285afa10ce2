#pragma once

#include "bricklayer/graphs.hpp"
#include "bricklayer/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace bricklayer {

struct SearchRecord {
  int d = 0;
  std::uint64_t n = 0;
  std::optional<double> best_lambda;      // empty when nothing was explored
  std::vector<std::uint64_t> witness;     // canonical label set of a maximizer
  bool is_bricklayer = false;             // witness orbit contains {0..n-1}
  std::uint64_t explored = 0;             // canonical classes or samples
};

namespace detail {

/// Label image under a coordinate permutation: bit i of v moves to perm[i].
inline std::uint64_t permute_bits(std::uint64_t v, const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if ((v >> i) & 1u) out |= std::uint64_t(1) << perm[i];
  return out;
}

/// Lexicographic order on sorted label sets of equal size equals numeric order
/// on bit-reversed masks (low labels are the most significant positions).
inline std::uint32_t reverse_mask(std::uint32_t mask, int space) {
  std::uint32_t out = 0;
  for (int l = 0; l < space; ++l)
    if ((mask >> l) & 1u) out |= std::uint32_t(1) << (space - 1 - l);
  return out;
}

/// All label maps of Aut(Q_d) = coordinate permutations times complementations.
/// Only practical for small d; the exhaustive search uses d <= 4.
inline std::vector<std::vector<std::uint8_t>> automorphism_label_maps(int d) {
  const std::uint32_t space = std::uint32_t(1) << d;
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::uint8_t>> maps;
  do {
    std::vector<std::uint8_t> base(space);
    for (std::uint32_t v = 0; v < space; ++v)
      base[v] = static_cast<std::uint8_t>(permute_bits(v, perm));
    for (std::uint32_t m = 0; m < space; ++m) {
      std::vector<std::uint8_t> full(space);
      for (std::uint32_t v = 0; v < space; ++v) full[v] = base[v] ^ m;
      maps.push_back(std::move(full));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

}  // namespace detail

/// Lexicographically least image of the label set under Aut(Q_d). Idempotent.
/// The general path restricts complementations to those translating a member
/// of the set to the origin, which loses nothing: the minimum image always
/// contains label 0.
inline std::vector<std::uint64_t> canonical_form(std::vector<std::uint64_t> labels, int d) {
  if (d < 1 || d > 9) throw std::domain_error("canonical_form supports 1 <= d <= 9");
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw std::domain_error("duplicate labels");
  if (!labels.empty() && labels.back() >= (std::uint64_t(1) << d))
    throw std::domain_error("label out of range for 2^d");
  if (labels.empty()) return labels;

  if (d <= 4) {
    const int space = 1 << d;
    std::uint32_t mask = 0;
    for (std::uint64_t l : labels) mask |= std::uint32_t(1) << l;
    static thread_local std::vector<std::vector<std::uint8_t>> cache[5];
    auto& maps = cache[d];
    if (maps.empty()) maps = detail::automorphism_label_maps(d);
    std::uint32_t best_mask = 0, best_rev = 0;
    bool first = true;
    for (const auto& map : maps) {
      std::uint32_t img = 0;
      std::uint32_t rest = mask;
      while (rest != 0) {
        const int l = __builtin_ctz(rest);
        rest &= rest - 1;
        img |= std::uint32_t(1) << map[l];
      }
      const std::uint32_t rev = detail::reverse_mask(img, space);
      if (first || rev > best_rev) {
        best_rev = rev;
        best_mask = img;
        first = false;
      }
    }
    std::vector<std::uint64_t> out;
    out.reserve(labels.size());
    for (int l = 0; l < space; ++l)
      if ((best_mask >> l) & 1u) out.push_back(static_cast<std::uint64_t>(l));
    return out;
  }

  std::vector<int> perm(d);
  std::vector<std::uint64_t> best, candidate(labels.size());
  for (std::uint64_t s : labels) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::size_t i = 0; i < labels.size(); ++i)
        candidate[i] = detail::permute_bits(labels[i] ^ s, perm);
      std::sort(candidate.begin(), candidate.end());
      if (best.empty() || candidate < best) best = candidate;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return best;
}

namespace detail {

/// Neighbor labels of the set within Q_d, excluding members.
inline std::vector<std::uint64_t> boundary_labels(const std::vector<std::uint64_t>& labels, int d) {
  std::set<std::uint64_t> inside(labels.begin(), labels.end()), boundary;
  for (std::uint64_t l : labels)
    for (int i = 0; i < d; ++i) {
      const std::uint64_t u = l ^ (std::uint64_t(1) << i);
      if (!inside.count(u)) boundary.insert(u);
    }
  return {boundary.begin(), boundary.end()};
}

inline double set_principal_eigenvalue(const std::vector<std::uint64_t>& labels, int d) {
  const LabeledGraph g = induced_subgraph(d, 2, labels);
  if (g.vertex_count() <= 64) return dense_principal_eigenvalue(g.adj);
  return principal_eigenvalue_auto(g).lambda;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// All connected induced n-vertex subgraphs of Q_d up to automorphism, by
/// growing canonical class representatives one adjacent vertex at a time.
/// Every connected graph keeps a non-cut vertex, so each class at size k is an
/// expansion of some class at size k-1.
inline SearchRecord exhaustive_max_eig(int d, std::uint64_t n) {
  if (d < 1 || d > 4) throw std::domain_error("exhaustive search supports 1 <= d <= 4");
  if (n < 1 || n > (std::uint64_t(1) << d)) throw std::domain_error("n must be in [1, 2^d]");
  std::set<std::vector<std::uint64_t>> classes{{0}};
  for (std::uint64_t level = 1; level < n; ++level) {
    std::set<std::vector<std::uint64_t>> next;
    for (const auto& rep : classes) {
      for (std::uint64_t u : detail::boundary_labels(rep, d)) {
        std::vector<std::uint64_t> grown = rep;
        grown.push_back(u);
        next.insert(canonical_form(std::move(grown), d));
      }
    }
    classes = std::move(next);
  }
  SearchRecord rec;
  rec.d = d;
  rec.n = n;
  rec.explored = classes.size();
  constexpr double kTie = 1e-9;
  for (const auto& rep : classes) {
    const double lam = detail::set_principal_eigenvalue(rep, d);
    if (!rec.best_lambda || lam > *rec.best_lambda + kTie) {
      rec.best_lambda = lam;
      rec.witness = rep;  // set iteration is lex-ascending: first of a tie wins
    }
  }
  std::vector<std::uint64_t> iota_set(n);
  std::iota(iota_set.begin(), iota_set.end(), std::uint64_t(0));
  rec.is_bricklayer = rec.witness == iota_set;
  return rec;
}

/// Random connected growth sampling: start from a uniform vertex, repeatedly
/// add a uniform random neighbor of the current set. Deterministic given the
/// seed (each sample draws from its own splitmix-derived stream, so results
/// do not depend on scheduling).
inline SearchRecord sample_max_eig(int d, std::uint64_t n, std::uint64_t samples,
                                   std::uint64_t seed) {
  if (d < 1 || d > 20) throw std::domain_error("sample_max_eig supports 1 <= d <= 20");
  if (n < 1 || n > (std::uint64_t(1) << d)) throw std::domain_error("n must be in [1, 2^d]");
  SearchRecord rec;
  rec.d = d;
  rec.n = n;
  rec.explored = samples;
  if (samples == 0) return rec;

  const double lambda_n =
      detail::set_principal_eigenvalue([n] {
        std::vector<std::uint64_t> v(n);
        std::iota(v.begin(), v.end(), std::uint64_t(0));
        return v;
      }(), d);
  constexpr double kTie = 1e-9;
  std::vector<std::uint64_t> best_canonical;
  double best = -1.0;
  bool tied_bricklayer = false;
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::mt19937_64 rng(detail::splitmix64(seed + i));
    std::vector<std::uint64_t> labels{
        std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t(1) << d) - 1)(rng)};
    while (labels.size() < n) {
      const auto boundary = detail::boundary_labels(labels, d);
      labels.push_back(
          boundary[std::uniform_int_distribution<std::size_t>(0, boundary.size() - 1)(rng)]);
    }
    const double lam = detail::set_principal_eigenvalue(labels, d);
    if (std::abs(lam - lambda_n) <= kTie) tied_bricklayer = true;
    if (lam > best + kTie) {
      best = lam;
      best_canonical = canonical_form(std::move(labels), d);
    } else if (lam > best - kTie) {
      auto canon = canonical_form(std::move(labels), d);
      if (canon < best_canonical) best_canonical = std::move(canon);
    }
  }
  rec.best_lambda = best;
  rec.witness = std::move(best_canonical);
  rec.is_bricklayer = tied_bricklayer;
  return rec;
}

struct StarVsBricklayerRow {
  int d = 0;
  double ball_lambda = 0;   // sqrt(d), from the distance-class route
  double log2_bound = 0;    // log2(d + 1): the bricklayer ceiling at n = d + 1
  bool ball_wins = false;
};

/// For n = d+1 vertices, compares the radius-1 ball (a star) against the
/// bricklayer eigenvalue ceiling log2 n.
inline std::vector<StarVsBricklayerRow> star_vs_bricklayer_table(int d_max) {
  if (d_max < 1) throw std::domain_error("star_vs_bricklayer_table requires d >= 1");
  std::vector<StarVsBricklayerRow> rows;
  rows.reserve(d_max);
  for (int d = 1; d <= d_max; ++d) {
    StarVsBricklayerRow row;
    row.d = d;
    row.ball_lambda = ball_eigenvalue_reduced(d, 1).spectral.lambda;
    row.log2_bound = std::log2(static_cast<double>(d) + 1.0);
    row.ball_wins = row.ball_lambda > row.log2_bound + 1e-9;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bricklayer
