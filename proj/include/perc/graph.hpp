#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "perc/random.hpp"

namespace perc {

using VertexId = std::uint32_t;  // 1-based; 0 is reserved as "none"

struct duplicate_weight_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct disconnected_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WeightedEdge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 0.0;

  WeightedEdge() = default;
  WeightedEdge(VertexId a, VertexId b, double w) : u(std::min(a, b)), v(std::max(a, b)), weight(w) {}

  friend bool operator==(const WeightedEdge& a, const WeightedEdge& b) {
    return a.u == b.u && a.v == b.v;
  }
};

// Permutation of edge indices into the owning graph's edge list.
using EdgeOrdering = std::vector<std::uint32_t>;

class SourceSet {
 public:
  SourceSet() = default;
  explicit SourceSet(std::vector<VertexId> vs) : v_(std::move(vs)) {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    if (v_.empty()) throw std::invalid_argument("SourceSet: must be nonempty");
    if (v_.front() == 0) throw std::invalid_argument("SourceSet: vertices are 1-based");
  }
  SourceSet(std::initializer_list<VertexId> vs) : SourceSet(std::vector<VertexId>(vs)) {}

  // The set [k] = {1,...,k}.
  static SourceSet first_k(VertexId k) {
    std::vector<VertexId> vs(k);
    std::iota(vs.begin(), vs.end(), VertexId{1});
    return SourceSet(std::move(vs));
  }

  bool contains(VertexId v) const { return std::binary_search(v_.begin(), v_.end(), v); }
  std::size_t size() const { return v_.size(); }
  const std::vector<VertexId>& vertices() const { return v_; }

  void check_in_range(std::uint32_t n) const {
    if (v_.back() > n) throw std::invalid_argument("SourceSet: vertex out of range");
    if (v_.size() > n) throw std::invalid_argument("SourceSet: more sources than vertices");
  }

 private:
  std::vector<VertexId> v_;
};

// A graph with pairwise-distinct edge weights in (0,1). Either an explicit
// edge list or the implicit complete graph whose weight for {u,v} is a pure
// function of (seed, u, v), so it is never materialized unless asked.
class WeightedGraph {
 public:
  static WeightedGraph complete_uniform(std::uint32_t n, RandomSource src) {
    if (n == 0) throw std::invalid_argument("complete_uniform: n must be >= 1");
    WeightedGraph g;
    g.n_ = n;
    g.implicit_ = true;
    g.weight_seed_ = src.key();
    return g;
  }

  static WeightedGraph from_edges(std::uint32_t n, std::vector<WeightedEdge> edges) {
    if (n == 0) throw std::invalid_argument("from_edges: n must be >= 1");
    WeightedGraph g;
    g.n_ = n;
    g.implicit_ = false;
    g.edges_ = std::move(edges);
    g.validate_edges();
    return g;
  }

  std::uint32_t vertex_count() const { return n_; }
  bool implicit() const { return implicit_; }

  std::uint64_t edge_count() const {
    if (implicit_) return static_cast<std::uint64_t>(n_) * (n_ - 1) / 2;
    return edges_.size();
  }

  // Implicit-mode weight query; repeated queries agree by construction.
  double weight(VertexId u, VertexId v) const {
    if (!implicit_) throw std::logic_error("weight(u,v): explicit graphs expose edges()");
    if (u == v || u == 0 || v == 0 || u > n_ || v > n_)
      throw std::invalid_argument("weight(u,v): invalid pair");
    return pair_weight(weight_seed_, u, v);
  }

  static double pair_weight(std::uint64_t weight_seed, VertexId u, VertexId v) {
    const std::uint64_t a = std::min(u, v);
    const std::uint64_t b = std::max(u, v);
    const std::uint64_t key = (a << 32) | b;
    return unit_from_bits(mix64(weight_seed ^ mix64(key ^ 0xa24baed4963ee407ull)));
  }

  const std::vector<WeightedEdge>& edges() const {
    if (implicit_) throw std::logic_error("edges(): implicit graph; materialize() first");
    return edges_;
  }

  WeightedGraph materialize() const {
    if (!implicit_) return *this;
    std::vector<WeightedEdge> es;
    es.reserve(edge_count());
    for (VertexId u = 1; u <= n_; ++u)
      for (VertexId v = u + 1; v <= n_; ++v) es.emplace_back(u, v, weight(u, v));
    return from_edges(n_, std::move(es));
  }

 private:
  void validate_edges() {
    for (auto& e : edges_) {
      if (e.u == 0 || e.v > n_ || e.u == e.v)
        throw std::invalid_argument("edge endpoints out of range");
      if (!(e.weight > 0.0 && e.weight < 1.0))
        throw std::invalid_argument("edge weight must lie in (0,1)");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::vector<std::uint32_t> idx(edges_.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
      return std::make_pair(edges_[a].u, edges_[a].v) < std::make_pair(edges_[b].u, edges_[b].v);
    });
    for (std::size_t i = 1; i < idx.size(); ++i)
      if (edges_[idx[i - 1]] == edges_[idx[i]])
        throw std::invalid_argument("duplicate edge pair");
    std::sort(idx.begin(), idx.end(),
              [&](std::uint32_t a, std::uint32_t b) { return edges_[a].weight < edges_[b].weight; });
    for (std::size_t i = 1; i < idx.size(); ++i)
      if (edges_[idx[i - 1]].weight == edges_[idx[i]].weight)
        throw duplicate_weight_error("tied edge weights");
  }

  std::uint32_t n_ = 0;
  bool implicit_ = false;
  std::uint64_t weight_seed_ = 0;
  std::vector<WeightedEdge> edges_;
};

// The unique increasing-weight permutation of the edge list.
inline EdgeOrdering sorted_edges(const WeightedGraph& g) {
  const auto& es = g.edges();
  EdgeOrdering order(es.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return es[a].weight < es[b].weight; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (es[order[i - 1]].weight == es[order[i]].weight)
      throw duplicate_weight_error("tied edge weights");
  return order;
}

// Explicit sample of {e : U_e <= p_max}: every pair present independently
// with probability p_max, weight uniform on (0, p_max]. Runs in O(expected
// edges) via geometric index jumps rather than touching all n(n-1)/2 pairs.
inline WeightedGraph sample_critical_window(std::uint32_t n, double p_max, RandomSource src) {
  if (n == 0) throw std::invalid_argument("sample_critical_window: n must be >= 1");
  if (!(p_max > 0.0 && p_max <= 1.0))
    throw std::invalid_argument("sample_critical_window: p_max must lie in (0,1]");
  Rng rng(src);
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::vector<WeightedEdge> edges;

  auto pair_of = [n](std::uint64_t t) {
    VertexId u = 1;
    std::uint64_t row = n - 1;
    while (t >= row) {
      t -= row;
      ++u;
      --row;
    }
    return std::pair<VertexId, VertexId>(u, u + 1 + static_cast<VertexId>(t));
  };

  if (p_max == 1.0) {
    edges.reserve(total);
    for (std::uint64_t t = 0; t < total; ++t) {
      auto [u, v] = pair_of(t);
      edges.emplace_back(u, v, rng.uniform01() * p_max);
    }
  } else {
    const double log_q = std::log1p(-p_max);
    double t = -1.0;
    for (;;) {
      t += 1.0 + std::floor(std::log(rng.uniform01()) / log_q);
      if (t >= static_cast<double>(total)) break;
      auto [u, v] = pair_of(static_cast<std::uint64_t>(t));
      edges.emplace_back(u, v, rng.uniform01() * p_max);
    }
  }
  return WeightedGraph::from_edges(n, std::move(edges));
}

}  // namespace perc
