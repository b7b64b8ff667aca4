#pragma once

#include <cstdint>
#include <vector>

#include "ccmpc/graph.hpp"

namespace ccmpc {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-phase vertex hash:
//   h(seed, phase, v) = mix64(mix64(mix64(seed) ^ phase) ^ v)
// Stable across runs and platforms.
constexpr std::uint64_t priority_hash(std::uint64_t seed, std::uint64_t phase,
                                      std::uint64_t v) {
  return mix64(mix64(mix64(seed) ^ phase) ^ v);
}

// Random total order on [0, n): compare (hash, id) lexicographically. Only
// comparisons are exposed; positions in the order are never materialized.
class PriorityMap {
 public:
  PriorityMap() = default;

  static PriorityMap Sample(std::uint64_t global_seed, std::uint64_t phase_index,
                            std::size_t n);
  // Explicit hashes, for forced orderings in tests and experiments.
  static PriorityMap FromHashes(std::vector<std::uint64_t> hashes);
  // rho(v) = v.
  static PriorityMap Identity(std::size_t n);

  std::size_t size() const { return hash_.size(); }
  std::uint64_t hash(VertexId v) const { return hash_[v]; }
  const std::vector<std::uint64_t>& hashes() const { return hash_; }

  // True iff a precedes b (a has the smaller priority).
  bool less(VertexId a, VertexId b) const {
    return hash_[a] < hash_[b] || (hash_[a] == hash_[b] && a < b);
  }
  VertexId min(VertexId a, VertexId b) const { return less(b, a) ? b : a; }

 private:
  std::vector<std::uint64_t> hash_;
};

inline PriorityMap sample_priorities(std::uint64_t global_seed,
                                     std::uint64_t phase_index, std::size_t n) {
  return PriorityMap::Sample(global_seed, phase_index, n);
}

}  // namespace ccmpc
