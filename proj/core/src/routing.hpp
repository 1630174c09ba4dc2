#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace acq::detail {

using LocalPair = std::pair<std::uint32_t, std::uint32_t>;
using LocalRound = std::vector<LocalPair>;

// Rooted tree on local ids [0, m): parent[root] == root, `order` lists
// every vertex with parents before children.
struct LocalTree {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> order;
  std::vector<std::vector<std::uint32_t>> children;

  static LocalTree path(std::size_t m);
};

// Moves tokens (unlabelled) from `token` onto `target` by swapping a token
// with a token-free neighbour; each move lowers the total edge demand by
// one. Deeper tokens move first.
std::vector<LocalRound> route_tokens(const LocalTree& tree,
                                     std::vector<char> token,
                                     const std::vector<char>& target);

// Permutation routing on the path 0..m-1 by recursive halving.
// dest[i] is where the item now at position i must end up.
std::vector<LocalRound> route_permutation_on_path(std::vector<std::size_t> dest);

}  // namespace acq::detail
