#include "acq/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "acq/error.hpp"

namespace acq {

namespace {

__extension__ typedef unsigned __int128 Wide;

Wide wide_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

void collect(const std::vector<Edge>& edges, std::size_t i,
             std::vector<char>& used, std::vector<Edge>& chosen,
             std::vector<Matching>& out) {
  if (i == edges.size()) {
    out.push_back(Matching{chosen});
    return;
  }
  collect(edges, i + 1, used, chosen, out);
  const auto [a, b] = edges[i];
  if (used[a] || used[b]) return;
  used[a] = used[b] = 1;
  chosen.push_back(edges[i]);
  collect(edges, i + 1, used, chosen, out);
  chosen.pop_back();
  used[a] = used[b] = 0;
}

struct StateKey {
  std::uint64_t placement;
  std::uint64_t ledger;
  bool operator==(const StateKey&) const = default;
};

struct StateHash {
  std::size_t operator()(const StateKey& s) const {
    std::uint64_t h = s.placement * 0x9E3779B97F4A7C15ULL;
    h ^= s.ledger + 0xBF58476D1CE4E5B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Agent at each vertex, packed four bits per vertex.
std::uint64_t pack(const std::vector<std::uint8_t>& at) {
  std::uint64_t code = 0;
  for (std::size_t v = at.size(); v-- > 0;) code = (code << 4) | at[v];
  return code;
}

}  // namespace

std::uint64_t lower_bound(std::uint64_t n, std::uint64_t edge_count,
                          std::uint64_t r, std::uint64_t k) {
  const Wide total = wide_binomial(n, k);
  const Wide per_round = static_cast<Wide>(edge_count) * wide_binomial(r, k);
  if (per_round == 0) {
    if (total == 0) return 0;
    throw Error(ErrorKind::kUnacquaintable,
                "no edge can hold " + std::to_string(k) + " agents");
  }
  if (total <= per_round) return 0;
  return static_cast<std::uint64_t>((total - 1) / per_round);
}

std::vector<Matching> enumerate_matchings(const Graph& g) {
  std::vector<Matching> out;
  std::vector<char> used(g.n(), 0);
  std::vector<Edge> chosen;
  collect(g.edges(), 0, used, chosen, out);
  std::stable_sort(out.begin(), out.end(), [](const Matching& a, const Matching& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.swaps < b.swaps;
  });
  return out;
}

std::size_t exact_ac(const Hypergraph& structure, std::size_t k,
                     const SearchLimits& limits) {
  const std::size_t n = structure.n();
  const std::size_t r = structure.r();
  if (n > limits.max_n || k > limits.max_k || n > 16) {
    throw Error(ErrorKind::kSearchBudgetExceeded,
                "instance n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                    " exceeds the search caps");
  }
  if (k < 1) throw Error(ErrorKind::kInvalidArity, "k must be positive");
  if (k > n) return 0;

  // Bit index of every k-set of agents, addressed by its agent mask.
  std::vector<int> bit_of(std::size_t{1} << n, -1);
  int bits = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) == k) bit_of[mask] = bits++;
  }
  if (bits > 64) {
    throw Error(ErrorKind::kSearchBudgetExceeded,
                std::to_string(bits) + " k-subsets do not fit the 64-bit ledger");
  }
  const std::uint64_t full = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  if (k > r) throw Error(ErrorKind::kUnacquaintable, "k exceeds the edge size");

  // k-subsets of each edge, as vertex masks.
  std::vector<std::vector<std::uint32_t>> edge_ksets;
  for (std::size_t e = 0; e < structure.edge_count(); ++e) {
    const auto edge = structure.edge(e);
    std::vector<std::uint32_t> sets;
    for (std::uint32_t pick = 0; pick < (1U << r); ++pick) {
      if (static_cast<std::size_t>(__builtin_popcount(pick)) != k) continue;
      std::uint32_t vm = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (pick & (1U << i)) vm |= 1U << edge[i];
      }
      sets.push_back(vm);
    }
    edge_ksets.push_back(std::move(sets));
  }
  auto ledger_of = [&](const std::vector<std::uint8_t>& at) {
    std::uint64_t led = 0;
    for (const auto& sets : edge_ksets) {
      for (std::uint32_t vm : sets) {
        std::uint32_t am = 0;
        for (std::uint32_t v = 0; v < n; ++v) {
          if (vm & (1U << v)) am |= 1U << at[v];
        }
        led |= std::uint64_t{1} << bit_of[am];
      }
    }
    return led;
  };

  // Moves: non-empty matchings of the underlying graph.
  std::vector<Matching> moves = enumerate_matchings(underlying_graph(structure));
  moves.erase(moves.begin());

  std::vector<std::uint8_t> start(n);
  std::iota(start.begin(), start.end(), std::uint8_t{0});
  const std::uint64_t initial = ledger_of(start);
  if (initial == full) return 0;

  std::unordered_set<StateKey, StateHash> seen;
  std::vector<std::pair<std::vector<std::uint8_t>, std::uint64_t>> layer{{start, initial}};
  seen.insert({pack(start), initial});
  for (std::size_t depth = 1; !layer.empty(); ++depth) {
    decltype(layer) next;
    for (const auto& [at, led] : layer) {
      for (const Matching& m : moves) {
        auto moved = at;
        for (auto [a, b] : m.swaps) std::swap(moved[a], moved[b]);
        const std::uint64_t grown = led | ledger_of(moved);
        if (grown == full) return depth;
        if (seen.insert({pack(moved), grown}).second) {
          if (seen.size() > limits.max_states) {
            throw Error(ErrorKind::kSearchBudgetExceeded,
                        "more than " + std::to_string(limits.max_states) + " states");
          }
          next.emplace_back(std::move(moved), grown);
        }
      }
    }
    layer = std::move(next);
  }
  throw Error(ErrorKind::kUnacquaintable, "state space exhausted without completion");
}

}  // namespace acq
