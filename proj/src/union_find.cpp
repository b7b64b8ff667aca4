#include "ccmpc/union_find.hpp"

namespace ccmpc {

ComponentAssignment UnionFind::assignment() {
  const std::size_t n = parent_.size();
  std::vector<VertexId> min_of_root(n, kNoVertex);
  ComponentAssignment out;
  out.rep.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const VertexId r = find(static_cast<VertexId>(v));
    if (min_of_root[r] == kNoVertex) min_of_root[r] = static_cast<VertexId>(v);
    out.rep[v] = min_of_root[r];
  }
  return out;
}

}  // namespace ccmpc
