#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "acq/types.hpp"

namespace acq {

// A permutation e_1..e_N of all C(n, 2) vertex pairs.
struct EdgeSequence {
  std::size_t n = 0;
  std::vector<Edge> order;

  friend bool operator==(const EdgeSequence&, const EdgeSequence&) = default;
};

// Pairs visited in lexicographic order, one uniform draw each.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

// r-subsets visited in lexicographic order, one uniform draw each; for r = 2
// this consumes the generator exactly like gen_gnp.
Hypergraph gen_hrnp(std::size_t n, std::size_t r, double p,
                    std::uint64_t seed);

// Fisher-Yates over the lexicographic pair list.
EdgeSequence gen_process(std::size_t n, std::uint64_t seed);

// Minimal m such that the first m edges connect all n vertices.
std::size_t connectivity_time(const EdgeSequence& seq);

Graph snapshot(const EdgeSequence& seq, std::size_t m);

}  // namespace acq
