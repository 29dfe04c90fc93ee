#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "perc/forest.hpp"
#include "perc/graph.hpp"
#include "perc/union_find.hpp"

namespace perc {

enum class Verdict { accepted, rejected_cycle, rejected_source_merge };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::accepted: return "accepted";
    case Verdict::rejected_cycle: return "rejected-cycle";
    case Verdict::rejected_source_merge: return "rejected-source-merge";
  }
  return "?";
}

enum class TraceKind { kruskal, er };

struct TraceStep {
  std::uint32_t order_index = 0;  // 1-based position in the increasing-weight ordering
  WeightedEdge edge;
  Verdict verdict = Verdict::accepted;
};

// Ordered log of one constrained run; weights are strictly increasing along
// the log, and the accepted edges reconstruct the final forest (or graph).
struct ProcessTrace {
  std::uint32_t n = 0;
  TraceKind kind = TraceKind::kruskal;
  std::vector<VertexId> sources;
  std::vector<TraceStep> steps;
};

enum class DisconnectedPolicy { strict_error, partial };

// --- invasion percolation -------------------------------------------------

namespace detail {

// Streamed Prim over the implicit complete graph: O(n) memory, no edge list.
// `sentinel_sources` selects the augmented variant, where source vertices are
// claimed through rank-below-everything pseudo-edges from a virtual root
// (ordered among themselves by source label) instead of being pre-invaded.
inline Forest invade_implicit(const WeightedGraph& g, const SourceSet& sources,
                              bool sentinel_sources) {
  const std::uint32_t n = g.vertex_count();
  sources.check_in_range(n);
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<char> invaded(n + 1, 0);
  std::vector<double> best_w(n + 1, inf);
  std::vector<VertexId> best_from(n + 1, 0);
  std::vector<VertexId> owner(n + 1, 0);  // owning source once invaded
  std::vector<WeightedEdge> edges;
  edges.reserve(n);

  std::uint32_t remaining = n;
  auto relax_from = [&](VertexId x) {
    for (VertexId w = 1; w <= n; ++w) {
      if (invaded[w] || w == x) continue;
      const double cand = g.weight(x, w);
      if (cand < best_w[w]) {
        best_w[w] = cand;
        best_from[w] = x;
      } else if (cand == best_w[w]) {
        throw duplicate_weight_error("tied edge weights in implicit graph");
      }
    }
  };

  if (sentinel_sources) {
    // Claim sources in label order through the virtual root; no real edges.
    for (VertexId s : sources.vertices()) {
      invaded[s] = 1;
      owner[s] = s;
      --remaining;
    }
    for (VertexId s : sources.vertices()) relax_from(s);
  } else {
    for (VertexId s : sources.vertices()) {
      invaded[s] = 1;
      owner[s] = s;
      --remaining;
    }
    for (VertexId s : sources.vertices()) relax_from(s);
  }

  while (remaining > 0) {
    VertexId pick = 0;
    double pick_w = inf;
    for (VertexId v = 1; v <= n; ++v) {
      if (invaded[v]) continue;
      if (best_w[v] < pick_w) {
        pick_w = best_w[v];
        pick = v;
      } else if (best_w[v] < inf && best_w[v] == pick_w) {
        throw duplicate_weight_error("tied frontier weights in implicit graph");
      }
    }
    if (pick == 0) break;  // cannot happen on K_n with n >= 1
    invaded[pick] = 1;
    owner[pick] = owner[best_from[pick]];
    edges.emplace_back(best_from[pick], pick, pick_w);
    --remaining;
    relax_from(pick);
  }
  return Forest::build(n, std::move(edges), sources);
}

inline std::vector<std::vector<std::pair<VertexId, double>>> adjacency(const WeightedGraph& g) {
  std::vector<std::vector<std::pair<VertexId, double>>> adj(g.vertex_count() + 1);
  for (const auto& e : g.edges()) {
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  return adj;
}

}  // namespace detail

// Greedy growth from the source set: each step adds the smallest-weight edge
// leaving the invaded set. Output is a forest with one component per source.
inline Forest invasion_percolation(const WeightedGraph& g, const SourceSet& sources,
                                   DisconnectedPolicy policy = DisconnectedPolicy::strict_error) {
  const std::uint32_t n = g.vertex_count();
  sources.check_in_range(n);
  if (g.implicit()) return detail::invade_implicit(g, sources, false);

  auto adj = detail::adjacency(g);
  struct Frontier {
    double w;
    VertexId from, to;
    bool operator>(const Frontier& o) const { return w > o.w; }
  };
  std::priority_queue<Frontier, std::vector<Frontier>, std::greater<Frontier>> heap;
  std::vector<char> invaded(n + 1, 0);
  std::vector<VertexId> owner(n + 1, 0);
  std::vector<WeightedEdge> edges;

  for (VertexId s : sources.vertices()) {
    invaded[s] = 1;
    owner[s] = s;
  }
  for (VertexId s : sources.vertices())
    for (auto [v, w] : adj[s]) heap.push({w, s, v});

  std::uint32_t remaining = n - static_cast<std::uint32_t>(sources.size());
  while (remaining > 0 && !heap.empty()) {
    const Frontier f = heap.top();
    heap.pop();
    if (invaded[f.to]) continue;
    invaded[f.to] = 1;
    owner[f.to] = owner[f.from];
    edges.emplace_back(f.from, f.to, f.w);
    --remaining;
    for (auto [v, w] : adj[f.to])
      if (!invaded[v]) heap.push({w, f.to, v});
  }
  if (remaining > 0 && policy == DisconnectedPolicy::strict_error)
    throw disconnected_error("invasion_percolation: input graph is disconnected");
  return Forest::build(n, std::move(edges), sources);
}

// Prim's algorithm on the augmented graph: a virtual root joined to every
// source by pseudo-edges ranked below all real weights and ordered by source
// label (never represented as floats). The root edges are dropped from the
// output, which must equal invasion_percolation edge for edge.
inline Forest augmented_prim(const WeightedGraph& g, const SourceSet& sources,
                             DisconnectedPolicy policy = DisconnectedPolicy::strict_error) {
  const std::uint32_t n = g.vertex_count();
  sources.check_in_range(n);
  if (g.implicit()) return detail::invade_implicit(g, sources, true);

  // Key ordering: sentinel(label a) < sentinel(label b) iff a < b, and every
  // sentinel precedes every real weight.
  struct Key {
    bool sentinel = false;
    double w = std::numeric_limits<double>::infinity();
    VertexId label = 0;
    bool operator<(const Key& o) const {
      if (sentinel != o.sentinel) return sentinel;
      if (sentinel) return label < o.label;
      return w < o.w;
    }
  };

  auto adj = detail::adjacency(g);
  std::vector<Key> key(n + 1);
  std::vector<VertexId> parent(n + 1, 0);
  std::vector<char> in_tree(n + 1, 0);
  for (VertexId s : sources.vertices()) key[s] = Key{true, 0.0, s};

  std::vector<WeightedEdge> edges;
  for (std::uint32_t step = 0; step < n; ++step) {
    VertexId pick = 0;
    for (VertexId v = 1; v <= n; ++v) {
      if (in_tree[v]) continue;
      if (pick == 0 || key[v] < key[pick]) pick = v;
    }
    if (key[pick].w == std::numeric_limits<double>::infinity() && !key[pick].sentinel) {
      if (policy == DisconnectedPolicy::strict_error)
        throw disconnected_error("augmented_prim: input graph is disconnected");
      break;
    }
    in_tree[pick] = 1;
    if (!key[pick].sentinel) edges.emplace_back(parent[pick], pick, key[pick].w);
    for (auto [v, w] : adj[pick]) {
      if (in_tree[v]) continue;
      const Key cand{false, w, 0};
      if (cand < key[v]) {
        key[v] = cand;
        parent[v] = pick;
      }
    }
  }
  return Forest::build(n, std::move(edges), sources);
}

// --- Kruskal / Erdos-Renyi constrained processes ----------------------------

// Processes edges in increasing weight order; accepts an edge iff it joins
// two distinct components that are not both source-flagged.
inline std::pair<Forest, ProcessTrace> kruskal_constrained(const WeightedGraph& g_in,
                                                           const SourceSet& sources) {
  const WeightedGraph g = g_in.implicit() ? g_in.materialize() : g_in;
  const std::uint32_t n = g.vertex_count();
  sources.check_in_range(n);
  const auto order = sorted_edges(g);

  ProcessTrace trace;
  trace.n = n;
  trace.kind = TraceKind::kruskal;
  trace.sources = sources.vertices();
  trace.steps.reserve(order.size());

  ComponentIndex ix(n, sources);
  std::vector<WeightedEdge> accepted;
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    const WeightedEdge& e = g.edges()[order[i]];
    Verdict verdict;
    if (ix.same(e.u, e.v)) {
      verdict = Verdict::rejected_cycle;
    } else if (ix.would_merge_sources(e.u, e.v)) {
      verdict = Verdict::rejected_source_merge;
    } else {
      ix.unite(e.u, e.v);
      accepted.push_back(e);
      verdict = Verdict::accepted;
    }
    trace.steps.push_back({i + 1, e, verdict});
  }
  return {Forest::build(n, std::move(accepted), sources), std::move(trace)};
}

// Same edge ordering, but cycles are allowed: only source-merging edges are
// rejected. At every step the component partition matches Kruskal's.
inline ProcessTrace er_constrained_process(const WeightedGraph& g_in, const SourceSet& sources) {
  const WeightedGraph g = g_in.implicit() ? g_in.materialize() : g_in;
  const std::uint32_t n = g.vertex_count();
  sources.check_in_range(n);
  const auto order = sorted_edges(g);

  ProcessTrace trace;
  trace.n = n;
  trace.kind = TraceKind::er;
  trace.sources = sources.vertices();
  trace.steps.reserve(order.size());

  ComponentIndex ix(n, sources);
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    const WeightedEdge& e = g.edges()[order[i]];
    Verdict verdict;
    if (ix.would_merge_sources(e.u, e.v)) {
      verdict = Verdict::rejected_source_merge;
    } else {
      if (!ix.same(e.u, e.v)) ix.unite(e.u, e.v);
      verdict = Verdict::accepted;
    }
    trace.steps.push_back({i + 1, e, verdict});
  }
  return trace;
}

// --- continuization ---------------------------------------------------------

// p_{n,lambda} = 1/n + lambda * n^(-4/3).
inline double p_critical(std::uint64_t n, double lambda) {
  if (n == 0) throw std::invalid_argument("p_critical: n must be >= 1");
  const double nd = static_cast<double>(n);
  const double p = 1.0 / nd + lambda / (nd * std::cbrt(nd));
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p_critical: result outside (0,1)");
  return p;
}

// Accepted edges with weight <= p; the step-function snapshot of the process.
inline std::vector<WeightedEdge> snapshot_at_p(const ProcessTrace& trace, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("snapshot_at_p: p outside [0,1]");
  std::vector<WeightedEdge> out;
  for (const auto& s : trace.steps) {
    if (s.edge.weight > p) break;  // weights increase along the log
    if (s.verdict == Verdict::accepted) out.push_back(s.edge);
  }
  return out;
}

inline Forest snapshot_forest_at_p(const ProcessTrace& trace, double p) {
  if (trace.kind != TraceKind::kruskal)
    throw std::invalid_argument("snapshot_forest_at_p: trace is not a forest process");
  return Forest::build(trace.n, snapshot_at_p(trace, p),
                       SourceSet(std::vector<VertexId>(trace.sources)));
}

// --- single-source-addition coupling ----------------------------------------

struct CouplingEdge {
  std::uint32_t order_index = 0;  // position j in the increasing-weight ordering
  WeightedEdge edge;
};

// The largest-weight edge on the path from z to the unique source sharing its
// component of F(G,S): adding z as a source removes exactly this edge.
inline CouplingEdge add_source_coupling(const WeightedGraph& g, const SourceSet& sources,
                                        VertexId z) {
  if (sources.contains(z)) throw std::invalid_argument("add_source_coupling: z is already a source");
  auto [forest, trace] = kruskal_constrained(g, sources);
  if (z == 0 || z > forest.n) throw std::invalid_argument("add_source_coupling: z out of range");
  if (forest.source[z] == 0)
    throw disconnected_error("add_source_coupling: z shares no component with a source");

  std::vector<std::vector<std::pair<VertexId, std::uint32_t>>> adj(forest.n + 1);
  for (std::uint32_t i = 0; i < forest.edges.size(); ++i) {
    adj[forest.edges[i].u].emplace_back(forest.edges[i].v, i);
    adj[forest.edges[i].v].emplace_back(forest.edges[i].u, i);
  }
  // BFS from z to its source; the forest path is unique.
  const VertexId target = forest.source[z];
  std::vector<std::uint32_t> via_edge(forest.n + 1, UINT32_MAX);
  std::vector<VertexId> prev(forest.n + 1, 0);
  std::vector<VertexId> queue{z};
  prev[z] = z;
  for (std::size_t qi = 0; qi < queue.size() && prev[target] == 0; ++qi) {
    const VertexId x = queue[qi];
    for (auto [y, ei] : adj[x]) {
      if (prev[y] != 0) continue;
      prev[y] = x;
      via_edge[y] = ei;
      queue.push_back(y);
    }
  }
  double best_w = -1.0;
  std::uint32_t best_edge = UINT32_MAX;
  for (VertexId cur = target; cur != z; cur = prev[cur]) {
    const auto& e = forest.edges[via_edge[cur]];
    if (e.weight > best_w) {
      best_w = e.weight;
      best_edge = via_edge[cur];
    }
  }
  const WeightedEdge picked = forest.edges[best_edge];
  for (const auto& s : trace.steps)
    if (s.edge == picked) return {s.order_index, picked};
  throw std::logic_error("add_source_coupling: accepted edge missing from trace");
}

// --- M^i ---------------------------------------------------------------------

// Max size of a component of the constrained forest contained in the i-th
// largest component of the unconstrained forest (rank ties broken uniformly
// at random by tie_rng). Both forests must be snapshots at the same p over
// the same weights, so the constrained components refine the unconstrained.
inline std::uint32_t largest_in_component_of(const Forest& constrained,
                                             const Forest& unconstrained, std::uint32_t rank_i,
                                             Rng* tie_rng) {
  if (constrained.n != unconstrained.n)
    throw std::invalid_argument("largest_in_component_of: mismatched vertex counts");
  if (rank_i == 0) throw std::invalid_argument("largest_in_component_of: i is 1-based");
  const std::uint32_t n = constrained.n;

  // Refinement check: every constrained component maps into one host label.
  std::vector<VertexId> host_of(n + 1, 0);
  for (VertexId v = 1; v <= n; ++v) {
    const VertexId c = constrained.component[v];
    if (host_of[c] == 0)
      host_of[c] = unconstrained.component[v];
    else if (host_of[c] != unconstrained.component[v])
      throw std::logic_error("largest_in_component_of: refinement violated");
  }

  auto ranked = ranked_components(unconstrained, tie_rng);
  if (rank_i > ranked.size()) return 0;
  const VertexId host = ranked[rank_i - 1].label;

  std::vector<std::uint32_t> csize(n + 1, 0);
  for (VertexId v = 1; v <= n; ++v) ++csize[constrained.component[v]];
  std::uint32_t best = 0;
  for (VertexId c = 1; c <= n; ++c)
    if (csize[c] > 0 && host_of[c] == host) best = std::max(best, csize[c]);
  return best;
}

}  // namespace perc
