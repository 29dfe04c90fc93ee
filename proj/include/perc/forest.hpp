#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "perc/graph.hpp"
#include "perc/union_find.hpp"

namespace perc {

// An acyclic edge set over [n] with per-vertex component labels (the smallest
// vertex of the component) and, when built from a source set, the owning
// source per component (0 where a component holds no source).
struct Forest {
  std::uint32_t n = 0;
  std::vector<WeightedEdge> edges;
  std::vector<VertexId> component;  // size n+1, component[0] unused
  std::vector<VertexId> source;     // size n+1; source label of v's component

  static Forest build(std::uint32_t n, std::vector<WeightedEdge> edges,
                      const std::optional<SourceSet>& sources = std::nullopt) {
    Forest f;
    f.n = n;
    f.edges = std::move(edges);
    ComponentIndex ix = sources ? ComponentIndex(n, *sources) : ComponentIndex(n);
    for (const auto& e : f.edges)
      if (!ix.unite(e.u, e.v)) throw std::logic_error("Forest: edge set contains a cycle");
    f.component.assign(n + 1, 0);
    f.source.assign(n + 1, 0);
    std::vector<VertexId> min_label(n + 1, 0);
    for (VertexId v = 1; v <= n; ++v) {
      const VertexId r = ix.find(v);
      if (min_label[r] == 0) min_label[r] = v;  // ascending scan: first hit is the minimum
    }
    for (VertexId v = 1; v <= n; ++v) {
      const VertexId r = ix.find(v);
      f.component[v] = min_label[r];
      f.source[v] = ix.source_of(v);
    }
    return f;
  }

  std::uint32_t component_count() const { return n - static_cast<std::uint32_t>(edges.size()); }
};

// Component sizes in descending order. Sizes sum to n; ties do not affect the
// size list itself (the tie-break rules matter only for component identity).
inline std::vector<std::uint32_t> components(const Forest& f) {
  std::vector<std::uint32_t> count(f.n + 1, 0);
  for (VertexId v = 1; v <= f.n; ++v) ++count[f.component[v]];
  std::vector<std::uint32_t> sizes;
  for (VertexId v = 1; v <= f.n; ++v)
    if (count[v] > 0) sizes.push_back(count[v]);
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

struct RankedComponent {
  VertexId label = 0;  // smallest vertex of the component
  std::uint32_t size = 0;
};

// Components ordered by descending size. Without an rng, ties go to the
// smaller label; with one, ties are broken uniformly at random (the F^i rule).
inline std::vector<RankedComponent> ranked_components(const Forest& f, Rng* tie_rng = nullptr) {
  std::vector<std::uint32_t> count(f.n + 1, 0);
  for (VertexId v = 1; v <= f.n; ++v) ++count[f.component[v]];
  std::vector<RankedComponent> out;
  for (VertexId v = 1; v <= f.n; ++v)
    if (count[v] > 0) out.push_back({v, count[v]});
  if (tie_rng == nullptr) {
    std::sort(out.begin(), out.end(), [](const RankedComponent& a, const RankedComponent& b) {
      return a.size != b.size ? a.size > b.size : a.label < b.label;
    });
  } else {
    std::vector<std::uint64_t> ticket(out.size());
    for (auto& t : ticket) t = tie_rng->bits();
    std::vector<std::uint32_t> idx(out.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (out[a].size != out[b].size) return out[a].size > out[b].size;
      if (ticket[a] != ticket[b]) return ticket[a] < ticket[b];
      return out[a].label < out[b].label;
    });
    std::vector<RankedComponent> shuffled;
    shuffled.reserve(out.size());
    for (auto i : idx) shuffled.push_back(out[i]);
    out = std::move(shuffled);
  }
  return out;
}

inline std::uint32_t largest_component_size(const Forest& f) {
  auto sizes = components(f);
  return sizes.empty() ? 0 : sizes.front();
}

}  // namespace perc
