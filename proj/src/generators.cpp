#include "ccmpc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "ccmpc/errors.hpp"

namespace ccmpc {

namespace {

constexpr std::string_view kFamilyNames[] = {
    "gnp",         "gnp_plus",    "path",           "cycle", "star",
    "complete",    "binary_tree", "caterpillar",    "disjoint_union",
};

// Uniform in [0, 1) from the top 53 bits, identical on every platform.
double Uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void CheckVertexCount(std::size_t n) {
  if (n >= kNoVertex) throw ConfigError("vertex count too large");
}

void AppendGnp(std::vector<EdgeRecord>& out, std::size_t n, double p,
               std::uint64_t seed) {
  if (n < 2 || p <= 0.0) return;
  if (p >= 1.0) {
    out.reserve(out.size() + n * (n - 1) / 2);
    for (std::size_t v = 1; v < n; ++v) {
      for (std::size_t w = 0; w < v; ++w) {
        out.push_back({static_cast<VertexId>(w), static_cast<VertexId>(v)});
      }
    }
    return;
  }
  const double expected = p * static_cast<double>(n) * (n - 1) / 2.0;
  out.reserve(out.size() + static_cast<std::size_t>(expected * 1.05) + 16);
  std::mt19937_64 rng(seed);
  const double log_q = std::log1p(-p);
  // Pairs (w, v) with w < v are visited in row-major order; each draw jumps
  // over a geometric number of absent pairs.
  std::int64_t v = 1, w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = Uniform01(rng);
    const double skip = std::floor(std::log1p(-r) / log_q);
    w += 1 + static_cast<std::int64_t>(std::min(skip, 4.0e18));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) {
      out.push_back({static_cast<VertexId>(w), static_cast<VertexId>(v)});
    }
  }
}

void AppendSpec(std::vector<EdgeRecord>& out, const GenSpec& s, VertexId base);

std::size_t SpecVertexCount(const GenSpec& s) {
  switch (s.family) {
    case Family::kCaterpillar: return s.n * (1 + s.legs);
    case Family::kDisjointUnion: {
      std::size_t total = 0;
      for (const GenSpec& part : s.parts) total += SpecVertexCount(part);
      return total;
    }
    default: return s.n;
  }
}

Graph Permuted(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::mt19937_64 rng(seed ^ 0x7065726d75746521ULL);
  // Fisher-Yates with the portable uniform, so output is library-independent.
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(Uniform01(rng) * i);
    std::swap(perm[i - 1], perm[std::min(j, i - 1)]);
  }
  std::vector<EdgeRecord> edges;
  edges.reserve(g.num_edges());
  for (EdgeRecord e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph::FromEdges(n, edges);
}

void AppendSpec(std::vector<EdgeRecord>& out, const GenSpec& s, VertexId base) {
  auto add = [&](std::size_t a, std::size_t b) {
    out.push_back({static_cast<VertexId>(base + a),
                   static_cast<VertexId>(base + b)});
  };
  const std::size_t n = s.n;
  switch (s.family) {
    case Family::kGnp:
    case Family::kGnpPlus: {
      const std::size_t first = out.size();
      AppendGnp(out, n, s.p, s.seed);
      for (std::size_t i = first; i < out.size(); ++i) {
        out[i].u += base;
        out[i].v += base;
      }
      if (s.family == Family::kGnpPlus) {
        for (EdgeRecord e : s.extra_edges) add(e.u, e.v);
      }
      break;
    }
    case Family::kPath:
      for (std::size_t v = 1; v < n; ++v) add(v - 1, v);
      break;
    case Family::kCycle:
      for (std::size_t v = 1; v < n; ++v) add(v - 1, v);
      if (n >= 3) add(n - 1, 0);
      break;
    case Family::kStar:
      for (std::size_t v = 1; v < n; ++v) add(0, v);
      break;
    case Family::kComplete:
      for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t w = 0; w < v; ++w) add(w, v);
      }
      break;
    case Family::kBinaryTree:
      for (std::size_t v = 1; v < n; ++v) add((v - 1) / 2, v);
      break;
    case Family::kCaterpillar:
      // Spine 0..n-1, then the leaves of spine vertex i.
      for (std::size_t v = 1; v < n; ++v) add(v - 1, v);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < s.legs; ++k) add(i, n + i * s.legs + k);
      }
      break;
    case Family::kDisjointUnion: {
      VertexId offset = base;
      for (const GenSpec& part : s.parts) {
        const std::size_t count = SpecVertexCount(part);
        if (part.permute) {
          Graph sub = Permuted(generate(part), part.seed);
          for (EdgeRecord e : sub.edges()) {
            out.push_back({e.u + offset, e.v + offset});
          }
        } else {
          AppendSpec(out, part, offset);
        }
        offset += static_cast<VertexId>(count);
      }
      break;
    }
  }
}

}  // namespace

std::string_view family_name(Family f) {
  return kFamilyNames[static_cast<std::size_t>(f)];
}

Family parse_family(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kFamilyNames); ++i) {
    if (kFamilyNames[i] == name) return static_cast<Family>(i);
  }
  throw ConfigError("unknown graph family '" + std::string(name) + "'");
}

void GenSpec::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError("edge probability must lie in [0, 1]");
  }
  const std::size_t total = SpecVertexCount(*this);
  CheckVertexCount(total);
  if (family == Family::kGnpPlus) {
    for (EdgeRecord e : extra_edges) {
      if (e.u >= n || e.v >= n) throw ConfigError("extra edge out of range");
    }
  }
  for (const GenSpec& part : parts) part.validate();
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  GenSpec s;
  s.family = Family::kGnp;
  s.n = n;
  s.p = p;
  s.seed = seed;
  return generate(s);
}

Graph generate(const GenSpec& spec) {
  spec.validate();
  std::vector<EdgeRecord> edges;
  AppendSpec(edges, spec, 0);
  Graph g = Graph::FromEdges(SpecVertexCount(spec), edges);
  edges.clear();
  edges.shrink_to_fit();
  if (spec.permute && spec.family != Family::kDisjointUnion) {
    return Permuted(g, spec.seed);
  }
  return g;
}

std::vector<VertexId> bfs_distances(const Graph& g, VertexId source) {
  std::vector<VertexId> dist(g.num_vertices(), kNoVertex);
  std::vector<VertexId> queue;
  queue.reserve(g.num_vertices());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (VertexId u : g.neighbors(v)) {
      if (dist[u] == kNoVertex) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

std::uint32_t diameter(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> lo(n, 0), hi(n, kNoVertex);
  std::uint32_t best = 0;
  // Bounding eccentricities per component: BFS from alternating extreme
  // candidates, tightening bounds until the maximum is pinned.
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{static_cast<VertexId>(s)};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (VertexId u : g.neighbors(comp[i])) {
        if (!seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
        }
      }
    }
    if (comp.size() == 1) continue;
    std::vector<VertexId> cand = comp;
    std::uint32_t dlo = 0, dhi = kNoVertex;
    bool pick_high = true;
    while (!cand.empty() && dlo < dhi) {
      VertexId v = cand.front();
      for (VertexId c : cand) {
        if (pick_high ? (hi[c] > hi[v] || (hi[c] == hi[v] && lo[c] < lo[v]))
                      : (lo[c] < lo[v] || (lo[c] == lo[v] && hi[c] > hi[v]))) {
          v = c;
        }
      }
      pick_high = !pick_high;
      const std::vector<VertexId> dist = bfs_distances(g, v);
      std::uint32_t ecc = 0;
      for (VertexId w : comp) ecc = std::max(ecc, dist[w]);
      lo[v] = hi[v] = ecc;
      dlo = std::max(dlo, ecc);
      dhi = 0;
      for (VertexId w : comp) {
        const std::uint32_t d = dist[w];
        lo[w] = std::max({lo[w], d, ecc - d});
        hi[w] = std::min(hi[w], ecc + d);
        dhi = std::max(dhi, hi[w]);
      }
      std::erase_if(cand, [&](VertexId w) {
        return lo[w] == hi[w] || (hi[w] <= dlo && 2 * lo[w] >= dhi);
      });
    }
    best = std::max(best, dlo);
  }
  return best;
}

std::uint32_t diameter_lower_bound(const Graph& g, std::size_t sweeps,
                                   VertexId start) {
  if (g.num_vertices() == 0) return 0;
  std::uint32_t best = 0;
  VertexId v = start;
  for (std::size_t i = 0; i < sweeps; ++i) {
    const std::vector<VertexId> dist = bfs_distances(g, v);
    VertexId far = v;
    for (std::size_t w = 0; w < dist.size(); ++w) {
      if (dist[w] != kNoVertex && dist[w] > dist[far]) {
        far = static_cast<VertexId>(w);
      }
    }
    best = std::max(best, dist[far]);
    if (far == v) break;
    v = far;
  }
  return best;
}

}  // namespace ccmpc
