#pragma once

#include "bricklayer/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bricklayer {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

/// Full-materialization guard for Hamming-graph style constructions.
inline constexpr std::uint64_t kMaxGraphVertices = std::uint64_t(1) << 24;

/// Induced subgraph of the Hamming graph H_{d,a}. Vertices are integer labels
/// read as d-digit base-a strings; adjacency lists hold positional indices
/// into the sorted label vector.
struct LabeledGraph {
  int d = 1;
  int a = 2;
  std::vector<std::uint64_t> labels;  // strictly increasing
  Adjacency adj;                      // sorted neighbor indices, symmetric

  std::size_t vertex_count() const { return labels.size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj) twice += nb.size();
    return twice / 2;
  }

  std::size_t degree(std::size_t i) const { return adj[i].size(); }

  std::size_t max_degree() const {
    std::size_t m = 0;
    for (const auto& nb : adj) m = std::max(m, nb.size());
    return m;
  }

  double mean_degree() const {
    if (labels.empty()) return 0.0;
    return 2.0 * static_cast<double>(edge_count()) / static_cast<double>(labels.size());
  }

  std::vector<std::size_t> degree_sequence() const {
    std::vector<std::size_t> ds(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i) ds[i] = adj[i].size();
    std::sort(ds.begin(), ds.end());
    return ds;
  }

  bool operator==(const LabeledGraph&) const = default;
};

/// K_{1,n}: center vertex 0 adjacent to vertices 1..n.
struct StarGraph {
  std::uint32_t leaves = 1;

  Adjacency adjacency() const {
    Adjacency adj(leaves + 1);
    adj[0].resize(leaves);
    for (std::uint32_t i = 1; i <= leaves; ++i) {
      adj[0][i - 1] = i;
      adj[i] = {0};
    }
    return adj;
  }

  std::vector<std::size_t> degree_sequence() const {
    std::vector<std::size_t> ds(leaves + 1, 1);
    ds.back() = leaves;
    std::sort(ds.begin(), ds.end());
    return ds;
  }
};

namespace detail {

/// a^d, throwing once the value can no longer index labels safely.
inline std::uint64_t label_space_size(int d, int a) {
  if (d < 1) throw std::domain_error("string length d must be >= 1");
  if (a < 2) throw std::domain_error("alphabet size a must be >= 2");
  std::uint64_t v = 1;
  for (int i = 0; i < d; ++i) {
    if (v > (std::uint64_t(1) << 62) / static_cast<std::uint64_t>(a))
      throw std::length_error("label space a^d exceeds 2^62");
    v *= static_cast<std::uint64_t>(a);
  }
  return v;
}

inline void check_capacity(std::uint64_t vertices) {
  if (vertices > kMaxGraphVertices)
    throw std::length_error("graph would have " + std::to_string(vertices) +
                            " vertices; capacity guard is 2^24");
}

/// Appends all labels within the Hamming label space that differ from q in
/// exactly one base-a digit.
inline void neighbor_labels(std::uint64_t q, int d, int a, std::vector<std::uint64_t>& out) {
  out.clear();
  if (a == 2) {
    for (int i = 0; i < d; ++i) out.push_back(q ^ (std::uint64_t(1) << i));
    return;
  }
  std::uint64_t pw = 1;
  const auto ua = static_cast<std::uint64_t>(a);
  for (int i = 0; i < d; ++i) {
    const std::uint64_t digit = (q / pw) % ua;
    const std::uint64_t base = q - digit * pw;
    for (std::uint64_t v = 0; v < ua; ++v)
      if (v != digit) out.push_back(base + v * pw);
    pw *= ua;
  }
}

/// Builds the induced adjacency for a strictly increasing label vector.
inline Adjacency induced_adjacency(const std::vector<std::uint64_t>& labels, int d, int a) {
  Adjacency adj(labels.size());
  std::vector<std::uint64_t> nbr;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    neighbor_labels(labels[i], d, a, nbr);
    for (std::uint64_t q : nbr) {
      if (q <= labels[i]) continue;  // count each pair once
      const auto it = std::lower_bound(labels.begin() + i + 1, labels.end(), q);
      if (it != labels.end() && *it == q) {
        const auto j = static_cast<std::uint32_t>(it - labels.begin());
        adj[i].push_back(j);
        adj[j].push_back(static_cast<std::uint32_t>(i));
      }
    }
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

}  // namespace detail

/// True iff the base-a strings of u and v differ in exactly one digit.
inline bool labels_adjacent(std::uint64_t u, std::uint64_t v, int a) {
  if (u == v) return false;
  if (a == 2) {
    const std::uint64_t x = u ^ v;
    return (x & (x - 1)) == 0;
  }
  const auto ua = static_cast<std::uint64_t>(a);
  int mismatches = 0;
  while (u != 0 || v != 0) {
    if (u % ua != v % ua && ++mismatches > 1) return false;
    u /= ua;
    v /= ua;
  }
  return mismatches == 1;
}

/// Least d with a^d >= n.
inline int min_dimension(std::uint64_t n, int a) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  int d = 1;
  std::uint64_t v = static_cast<std::uint64_t>(a);
  while (v < n) {
    v *= static_cast<std::uint64_t>(a);
    ++d;
  }
  return d;
}

inline LabeledGraph induced_subgraph(int d, int a, std::vector<std::uint64_t> labels) {
  const std::uint64_t space = detail::label_space_size(d, a);
  detail::check_capacity(labels.size());
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw std::domain_error("duplicate vertex labels");
  if (!labels.empty() && labels.back() >= space)
    throw std::domain_error("label " + std::to_string(labels.back()) + " out of range for a^d");
  LabeledGraph g;
  g.d = d;
  g.a = a;
  g.adj = detail::induced_adjacency(labels, d, a);
  g.labels = std::move(labels);
  return g;
}

inline LabeledGraph hamming_graph(int d, int a) {
  const std::uint64_t n = detail::label_space_size(d, a);
  detail::check_capacity(n);
  std::vector<std::uint64_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::uint64_t(0));
  return induced_subgraph(d, a, std::move(labels));
}

/// G_{n,a}: the subgraph of H_{d,a} induced by labels 0..n-1, with d the least
/// dimension fitting n unless overridden upward (the override widens the
/// mutation-direction count used by robustness, never the edge set).
inline LabeledGraph bricklayer_graph(std::uint64_t n, int a = 2, int d_override = 0) {
  if (n < 1) throw std::domain_error("bricklayer graph needs n >= 1");
  detail::check_capacity(n);
  const int d_min = min_dimension(n, a);
  int d = d_override == 0 ? d_min : d_override;
  if (d < d_min) throw std::domain_error("d override too small for n labels");
  std::vector<std::uint64_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::uint64_t(0));
  return induced_subgraph(d, a, std::move(labels));
}

/// B_{d,r}: all labels of H_{d,2} with at most r one-bits. Enumerates by
/// popcount, so huge ambient cubes (d = 19 and beyond) are never materialized.
inline LabeledGraph hamming_ball(int d, int r) {
  if (d < 1 || d > 62) throw std::domain_error("hamming_ball requires 1 <= d <= 62");
  if (r < 0 || r > d) throw std::domain_error("hamming_ball radius must be in [0, d]");
  BigInt count = 0;
  for (int i = 0; i <= r; ++i) count += binomial(d, i);
  if (count > kMaxGraphVertices) throw std::length_error("hamming ball exceeds capacity guard");
  std::vector<std::uint64_t> labels;
  labels.reserve(count.convert_to<std::size_t>());
  labels.push_back(0);
  for (int w = 1; w <= r; ++w) {
    std::uint64_t m = (std::uint64_t(1) << w) - 1;
    const std::uint64_t limit = std::uint64_t(1) << d;
    while (m < limit) {
      labels.push_back(m);
      const std::uint64_t c = m & (~m + 1);  // Gosper's hack: next mask of equal weight
      const std::uint64_t rr = m + c;
      m = (((rr ^ m) >> 2) / c) | rr;
    }
  }
  return induced_subgraph(d, 2, std::move(labels));
}

inline StarGraph star_graph(std::uint32_t n) {
  if (n < 1) throw std::domain_error("star graph needs n >= 1 leaves");
  return StarGraph{n};
}

/// The induced subgraph on labels L and L + 2^d; isomorphic to G box K_2.
inline LabeledGraph cartesian_product_k2(const LabeledGraph& g) {
  if (g.a != 2) throw std::domain_error("cartesian_product_k2 requires a binary alphabet");
  if (g.d >= 62) throw std::length_error("cartesian_product_k2: dimension too large");
  const std::uint64_t top = std::uint64_t(1) << g.d;
  if (!g.labels.empty() && g.labels.back() >= top)
    throw std::domain_error("labels exceed 2^d");
  std::vector<std::uint64_t> labels;
  labels.reserve(2 * g.labels.size());
  labels.insert(labels.end(), g.labels.begin(), g.labels.end());
  for (std::uint64_t l : g.labels) labels.push_back(l + top);
  return induced_subgraph(g.d + 1, 2, std::move(labels));
}

/// Vertex-index sets of connected components, ordered by smallest member.
inline std::vector<std::vector<std::uint32_t>> connected_components(const Adjacency& adj) {
  std::vector<std::vector<std::uint32_t>> comps;
  std::vector<char> seen(adj.size(), 0);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < adj.size(); ++s) {
    if (seen[s]) continue;
    queue.assign(1, s);
    seen[s] = 1;
    std::vector<std::uint32_t> comp;
    while (!queue.empty()) {
      const std::uint32_t v = queue.back();
      queue.pop_back();
      comp.push_back(v);
      for (std::uint32_t w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline std::vector<std::vector<std::uint32_t>> connected_components(const LabeledGraph& g) {
  return connected_components(g.adj);
}

inline bool is_connected(const LabeledGraph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

}  // namespace bricklayer
