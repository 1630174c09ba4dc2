#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace acq {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // always stored with first < second

inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Simple undirected graph on [0, n). Edges are canonical (u < v), sorted and
// unique; construction rejects loops and out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::vector<Edge> edges);

  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph star(std::size_t leaves);  // center 0, leaves 1..leaves

  std::size_t n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(Vertex a, Vertex b) const;
  std::vector<std::vector<Vertex>> adjacency() const;
  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// r-uniform hypergraph on [0, n). Each edge is a sorted r-subset; the edge
// list is sorted lexicographically and deduplicated at construction.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::size_t n, std::size_t r,
             std::vector<std::vector<Vertex>> edges);
  explicit Hypergraph(const Graph& g);

  std::size_t n() const { return n_; }
  std::size_t r() const { return r_; }
  std::size_t edge_count() const { return r_ == 0 ? 0 : flat_.size() / r_; }

  std::span<const Vertex> edge(std::size_t i) const {
    return {flat_.data() + i * r_, r_};
  }
  std::vector<std::vector<Vertex>> edge_list() const;
  bool has_edge(std::span<const Vertex> sorted_edge) const;

  // Edge ids incident to each vertex.
  std::vector<std::vector<std::uint32_t>> incidence() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t r_ = 2;
  std::vector<Vertex> flat_;
};

// Pair {u, v} is an edge iff some hyperedge contains both.
Graph underlying_graph(const Hypergraph& h);

// Loose path (v_1, ..., v_l) with l = m(r-1) + 1; edge i covers positions
// i(r-1) .. i(r-1)+r-1 (0-indexed), so consecutive edges share one vertex.
class LoosePath {
 public:
  LoosePath() = default;
  LoosePath(std::vector<Vertex> ordering, std::size_t r);

  const std::vector<Vertex>& ordering() const { return ordering_; }
  std::size_t r() const { return r_; }
  std::size_t length() const { return ordering_.size(); }
  std::size_t edge_count() const {
    return ordering_.empty() ? 0 : (ordering_.size() - 1) / (r_ - 1);
  }

  // Window [lo, hi] of path positions covered by edge i.
  std::pair<std::size_t, std::size_t> edge_window(std::size_t i) const {
    return {i * (r_ - 1), i * (r_ - 1) + r_ - 1};
  }
  // True iff positions [lo, hi] lie inside a single edge window.
  bool window_in_one_edge(std::size_t lo, std::size_t hi) const;

  friend bool operator==(const LoosePath&, const LoosePath&) = default;

 private:
  std::vector<Vertex> ordering_;
  std::size_t r_ = 2;
};

std::vector<std::vector<Vertex>> loose_path_edges(const LoosePath& path);

// Spine (v_1..v_k); heavy u_i matched to spine index i; light vertices hang
// off a spine vertex or a heavy vertex. Heavy keys are 0-indexed spine
// positions; light values are vertex ids. `pendant` is the leftover
// fallback: a vertex hanging off a light vertex, empty for a plain good tree.
struct GoodTree {
  std::size_t n = 0;
  std::vector<Vertex> spine;
  std::map<std::size_t, Vertex> heavy;
  std::map<Vertex, Vertex> light;
  std::map<Vertex, Vertex> pendant;

  // All tree edges (spine path, heavy matching, light and pendant
  // attachments).
  Graph tree() const;

  friend bool operator==(const GoodTree&, const GoodTree&) = default;
};

// Throws kInvalidTree if the invariants fail; when `host` is given, every
// implied edge must also be an edge of `host`.
void validate_good_tree(const GoodTree& tree, const Graph* host = nullptr);

struct Matching {
  std::vector<Edge> swaps;

  bool empty() const { return swaps.empty(); }
  std::size_t size() const { return swaps.size(); }
  // Pairs pairwise vertex-disjoint, no loops, endpoints < n.
  bool is_valid(std::size_t n) const;

  friend bool operator==(const Matching&, const Matching&) = default;
};

// Lexicographic rank/unrank of sorted k-subsets of [0, n).
class KSubsetIndex {
 public:
  KSubsetIndex(std::size_t n, std::size_t k);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::uint64_t size() const { return size_; }

  // Throws kInvalidSubset on malformed input.
  std::uint64_t rank(std::span<const Vertex> subset) const;
  std::vector<Vertex> unrank(std::uint64_t rank) const;

  // Fast path: caller guarantees a sorted, in-range k-subset.
  std::uint64_t rank_unchecked(std::span<const Vertex> subset) const {
    // Colex rank of the mirrored subset x -> n-1-x, subtracted from the top.
    std::uint64_t colex = 0;
    for (std::size_t i = 0; i < k_; ++i) {
      const std::size_t mirrored = n_ - 1 - subset[k_ - 1 - i];
      colex += table_[mirrored * (k_ + 1) + i + 1];
    }
    return size_ - 1 - colex;
  }

  std::uint64_t rank_pair(Vertex a, Vertex b) const {
    const Vertex s[2] = {a < b ? a : b, a < b ? b : a};
    return rank_unchecked(s);
  }

 private:
  std::uint64_t choose(std::size_t m, std::size_t j) const {
    return table_[m * (k_ + 1) + j];
  }

  std::size_t n_;
  std::size_t k_;
  std::uint64_t size_;
  std::vector<std::uint64_t> table_;  // C(m, j) for m <= n, j <= k
};

std::uint64_t rank_k_subset(std::span<const Vertex> subset, std::size_t n,
                            std::size_t k);
std::vector<Vertex> unrank_k_subset(std::uint64_t rank, std::size_t n,
                                    std::size_t k);

}  // namespace acq
