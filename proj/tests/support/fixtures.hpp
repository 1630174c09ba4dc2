#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "acq/rng.hpp"
#include "acq/types.hpp"

namespace acq::testing {

inline std::vector<Vertex> shuffled_ids(std::size_t n, Rng& rng) {
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{0});
  rng.shuffle(std::span(ids));
  return ids;
}

// Random labelled tree: vertex v > 0 hangs off a uniform earlier vertex.
inline Graph random_tree(std::size_t n, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    edges.push_back(make_edge(v, static_cast<Vertex>(rng.uniform_below(v))));
  }
  return Graph(n, std::move(edges));
}

// Spine of random length, a random heavy matching, every other vertex light
// on a random spine or heavy vertex. Labels are shuffled.
inline GoodTree random_good_tree(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<Vertex> ids = shuffled_ids(n, rng);
  const std::size_t lo = std::max<std::size_t>(2, n / 4);
  const std::size_t spine_len = lo + rng.uniform_below(n - lo + 1);
  GoodTree t;
  t.n = n;
  t.spine.assign(ids.begin(), ids.begin() + spine_len);
  const std::size_t rest = n - spine_len;
  const std::size_t heavy = rng.uniform_below(std::min(spine_len, rest) + 1);
  std::vector<Vertex> positions = shuffled_ids(spine_len, rng);
  std::vector<Vertex> anchors = t.spine;
  for (std::size_t i = 0; i < heavy; ++i) {
    const Vertex u = ids[spine_len + i];
    t.heavy[positions[i]] = u;
    anchors.push_back(u);
  }
  for (std::size_t i = spine_len + heavy; i < n; ++i) {
    t.light[ids[i]] = anchors[rng.uniform_below(anchors.size())];
  }
  return t;
}

// Loose path over a shuffled ordering of [0, len).
inline LoosePath random_loose_path(std::size_t len, std::size_t r, std::uint64_t seed) {
  Rng rng(seed);
  return LoosePath(shuffled_ids(len, rng), r);
}

inline Hypergraph path_hypergraph(const LoosePath& p, std::size_t n) {
  return Hypergraph(n, p.r(), loose_path_edges(p));
}

}  // namespace acq::testing
