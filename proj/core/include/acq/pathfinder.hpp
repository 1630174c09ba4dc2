#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "acq/types.hpp"

namespace acq {

// Edge probability scale c(r, delta) for which H_r(n, c / n^(r-1)) carries a
// loose path on delta*n vertices with probability >= 1 - exp(-n).
double long_path_constant(std::size_t r, double delta);

// Snapshot of the depth-first search: P (current path), U (unexplored),
// W (dead ends) and W~ (companions retired with a dead end).
struct DfsState {
  std::vector<Vertex> path;
  std::vector<Vertex> unexplored;
  std::vector<Vertex> dead;
  std::vector<Vertex> retired;
};

struct DfsOptions {
  // Seeded relabelling of the scan order; nullopt scans by vertex id.
  std::optional<std::uint64_t> shuffle_seed;
  // Called after every step; for invariant sweeps in tests.
  std::function<void(const DfsState&)> observer;
};

struct DfsResult {
  LoosePath path;  // longest loose path seen over the whole run
  std::size_t steps = 0;
};

DfsResult dfs_loose_path_run(const Hypergraph& h, const DfsOptions& options);

// Convenience form: shuffled scan order derived from `seed`.
LoosePath dfs_loose_path(const Hypergraph& h, std::uint64_t seed);

// Heavy-attachment bookkeeping: A (open spine positions), B (heavy vertices
// found so far), C (vertices not yet attached).
struct GoodTreeBuildState {
  std::vector<std::size_t> open_positions;
  std::vector<Vertex> heavy;
  std::vector<Vertex> unattached;
};

struct GoodTreeBuild {
  GoodTree tree;  // covers spine, heavy and light vertices only
  std::vector<Vertex> leftover;  // S
};

// Greedy three-phase builder over a concrete graph. `scan_order` lists the
// off-spine vertices in the order they are examined (ascending id if empty).
GoodTreeBuild build_good_spanning_tree(
    const Graph& g, const LoosePath& spine,
    std::span<const Vertex> scan_order = {},
    const std::function<void(const GoodTreeBuildState&)>& observer = {});

// Attaches leftover vertices as light vertices of a spine or heavy neighbour,
// promoting a light vertex to heavy when that opens an attachment point.
// Returns the vertices that still cannot be attached.
std::vector<Vertex> attach_leftovers(const Graph& g, GoodTreeBuild& build);

struct SpanningTreeOptions {
  std::size_t max_attempts = 64;  // DFS reseeds before giving up
  std::uint64_t seed = 0;
};

// DFS spine, builder, leftover attachment; retried with new DFS seeds until
// the good tree spans every vertex. If no attempt does, the first attempt
// whose remaining vertices all neighbour a light vertex is used with those
// vertices as pendants. Throws kStructuralAssumptionViolated.
struct SpanningGoodTree {
  GoodTree tree;
  std::size_t spine_length = 0;
  std::size_t builder_leftover = 0;  // |S| before the attachment fallback
  std::size_t attempts = 0;
};
SpanningGoodTree find_good_spanning_tree(const Graph& g,
                                         const SpanningTreeOptions& options);

// Randomised depth-first search for a loose path covering n vertices (or the
// largest N <= n with (r-1) | (N-1)). `budget` caps node expansions.
std::optional<LoosePath> find_loose_hamilton_path(const Hypergraph& h,
                                                  std::uint64_t budget,
                                                  std::uint64_t seed);

// Largest N <= n with (r - 1) dividing N - 1.
std::size_t loose_hamilton_target(std::size_t n, std::size_t r);

}  // namespace acq
