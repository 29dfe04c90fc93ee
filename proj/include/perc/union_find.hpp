#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "perc/graph.hpp"

namespace perc {

// Union-find over [n] with a per-root source tag. Constrained processes must
// never merge two source-tagged roots; unite() enforces that invariant.
class ComponentIndex {
 public:
  explicit ComponentIndex(std::uint32_t n) : parent_(n + 1), size_(n + 1, 1), source_(n + 1, 0) {
    for (std::uint32_t v = 0; v <= n; ++v) parent_[v] = v;
    count_ = n;
  }

  ComponentIndex(std::uint32_t n, const SourceSet& sources) : ComponentIndex(n) {
    sources.check_in_range(n);
    for (VertexId s : sources.vertices()) source_[s] = s;
  }

  VertexId find(VertexId v) {
    VertexId root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
      VertexId next = parent_[v];
      parent_[v] = root;
      v = next;
    }
    return root;
  }

  bool same(VertexId u, VertexId v) { return find(u) == find(v); }

  // Source tag of v's component (0 if none).
  VertexId source_of(VertexId v) { return source_[find(v)]; }

  bool would_merge_sources(VertexId u, VertexId v) {
    const VertexId ru = find(u), rv = find(v);
    return ru != rv && source_[ru] != 0 && source_[rv] != 0;
  }

  // Returns false when u and v were already joined.
  bool unite(VertexId u, VertexId v) {
    VertexId ru = find(u), rv = find(v);
    if (ru == rv) return false;
    if (source_[ru] != 0 && source_[rv] != 0)
      throw std::logic_error("ComponentIndex: union would merge two source components");
    if (size_[ru] < size_[rv]) std::swap(ru, rv);
    parent_[rv] = ru;
    size_[ru] += size_[rv];
    if (source_[rv] != 0) source_[ru] = source_[rv];
    --count_;
    return true;
  }

  std::uint32_t component_size(VertexId v) { return size_[find(v)]; }
  std::uint32_t component_count() const { return count_; }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<VertexId> source_;
  std::uint32_t count_ = 0;
};

}  // namespace perc
