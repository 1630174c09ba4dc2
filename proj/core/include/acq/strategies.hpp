#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "acq/pathfinder.hpp"
#include "acq/types.hpp"

namespace acq {

// ----------------------------------------------------------- 1-factors

// factors[i] is a partition of [0, N) into s-subsets; every s-subset of
// [0, N) lies in exactly one factor.
struct Factorization {
  std::size_t N = 0;
  std::size_t s = 0;
  std::vector<std::vector<std::vector<Vertex>>> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Round-robin for s = 2, direct for s = 1 and s = N, otherwise the
// element-by-element integral-flow construction. Throws kNotDivisible.
Factorization baranyai(std::size_t N, std::size_t s);

// Names of violated invariants ("block_size", "partition",
// "cover_exactly_once", "factor_count"); empty when valid.
std::vector<std::string> check_factorization(const Factorization& f);

// -------------------------------------------------------------- traces

struct StrategyTrace {
  std::vector<Matching> rounds;
  bool claimed_complete = false;
  std::map<std::string, double> meta;
};

// ------------------------------------------------------------- routing

// Bound asserted for route_on_tree: rounds <= kRouteFactor * (l + 2(|S|-1))
// + kRouteSlack, l the largest source-to-target distance.
inline constexpr std::size_t kRouteFactor = 6;
inline constexpr std::size_t kRouteSlack = 4;

// Moves the agents on `sources` onto `targets` (as sets) along tree edges.
// Throws kSizeMismatch / kNotATree.
std::vector<Matching> route_on_tree(const Graph& tree,
                                    std::span<const Vertex> sources,
                                    std::span<const Vertex> targets);

// target[i] is the path position the agent now at position i must reach.
// Recursive halving over the path's consecutive vertices. Throws
// kInvalidTarget unless `target` is a permutation of [0, length).
std::vector<Matching> route_on_loose_path(const LoosePath& path,
                                          std::span<const std::size_t> target);

// Recorded constant for route_on_loose_path: rounds <= kPathRouteFactor * l.
inline constexpr double kPathRouteFactor = 12.0;

// ---------------------------------------------------------- strategies

// Recorded constant for good_tree_strategy: rounds <= kGoodTreeFactor * n.
inline constexpr double kGoodTreeFactor = 50.0;

// Teams of at most |spine| agents are routed onto the spine in turn; each
// traverses it in 2|spine| parity phases with heavy detours.
StrategyTrace good_tree_strategy(const GoodTree& tree);

// Spanning good tree of a connected graph followed by good_tree_strategy.
StrategyTrace good_spanning_tree_strategy(const Graph& g,
                                          const SpanningTreeOptions& options);

// Team schedule over a loose path: one pass per 1-factor of K_N^{k-1}.
// Matchings only use pairs inside edges of `path`, so the trace is legal
// in any hypergraph that contains the path.
StrategyTrace loose_path_strategy(const LoosePath& path, std::size_t k,
                                  std::uint64_t seed);

// Recorded constant for loose_path_strategy: rounds <= kLoosePathFactor *
// l^(k-1), l the path length.
inline constexpr double kLoosePathFactor = 20.0;

struct SparseOptions {
  // Longest of this many seeded DFS runs, preferring paths every off-path
  // vertex can attach to.
  std::size_t dfs_attempts = 64;
};

// Long DFS path plus a (k+1)-group rotation onto it.
StrategyTrace sparse_hypergraph_strategy(const Hypergraph& h, std::size_t k,
                                         std::uint64_t seed,
                                         const SparseOptions& options = {});

struct DenseOptions {
  std::uint64_t search_budget = 1'000'000;
};

// Hamilton path cut into sub-paths run in parallel, then a (k+1)-group
// rotation for whatever remains. Throws kPathUnavailable.
StrategyTrace dense_hypergraph_strategy(const Hypergraph& h, std::size_t k,
                                        double omega, double c_cut,
                                        std::uint64_t seed,
                                        const DenseOptions& options = {});

// Same, with the loose path supplied by the caller (covering at least the
// largest N <= n with (r-1) | (N-1) vertices).
StrategyTrace dense_hypergraph_strategy_on_path(const Hypergraph& h,
                                                const LoosePath& path,
                                                std::size_t k, double omega,
                                                double c_cut,
                                                std::uint64_t seed);

// Sub-path count floor((omega / c_cut)^(1/(k-1))), at least 1.
std::size_t dense_cut_count(double omega, double c_cut, std::size_t k);

// Every k-subset of [0, n) misses at least one of the k+1 residue classes.
std::vector<std::vector<Vertex>> rotation_groups(std::size_t n, std::size_t k);

}  // namespace acq
