#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "acq/types.hpp"

namespace acq {

struct SearchLimits {
  std::uint64_t max_states = 20'000'000;
  std::size_t max_n = 8;
  std::size_t max_k = 3;
};

// ceil(C(n,k) / (edge_count * C(r,k)) - 1), clamped at 0.
// Throws kUnacquaintable when no round can ever acquaint a k-subset.
std::uint64_t lower_bound(std::uint64_t n, std::uint64_t edge_count,
                          std::uint64_t r, std::uint64_t k);

// Every matching of g, the empty one first, then by size and lexicographic
// order of the swap lists.
std::vector<Matching> enumerate_matchings(const Graph& g);

// Minimum number of rounds by breadth-first search over (placement, ledger)
// states. Throws kSearchBudgetExceeded when the instance or the explored
// state count exceeds `limits`, kUnacquaintable if completion is impossible.
std::size_t exact_ac(const Hypergraph& structure, std::size_t k,
                     const SearchLimits& limits = {});

}  // namespace acq
