#include "ccmpc/priority.hpp"

namespace ccmpc {

PriorityMap PriorityMap::Sample(std::uint64_t global_seed,
                                std::uint64_t phase_index, std::size_t n) {
  std::vector<std::uint64_t> h(n);
  const std::uint64_t base = mix64(mix64(global_seed) ^ phase_index);
  for (std::size_t v = 0; v < n; ++v) h[v] = mix64(base ^ v);
  return FromHashes(std::move(h));
}

PriorityMap PriorityMap::FromHashes(std::vector<std::uint64_t> hashes) {
  PriorityMap p;
  p.hash_ = std::move(hashes);
  return p;
}

PriorityMap PriorityMap::Identity(std::size_t n) {
  std::vector<std::uint64_t> h(n);
  for (std::size_t v = 0; v < n; ++v) h[v] = v;
  return FromHashes(std::move(h));
}

}  // namespace ccmpc
