#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "acq/types.hpp"

namespace acq {

// Dense bit-vector over all k-subsets of agents, indexed by KSubsetIndex.
class AcquaintanceLedger {
 public:
  // Largest ledger accepted at init.
  static constexpr std::uint64_t kMaxBits = std::uint64_t{1} << 27;

  AcquaintanceLedger(std::size_t agents, std::size_t k);

  const KSubsetIndex& index() const { return index_; }
  std::uint64_t size() const { return index_.size(); }
  std::uint64_t count() const { return count_; }
  bool full() const { return count_ == index_.size(); }

  bool test(std::uint64_t rank) const {
    return (words_[rank >> 6] >> (rank & 63)) & 1U;
  }
  bool set(std::uint64_t rank) {
    std::uint64_t& w = words_[rank >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (rank & 63);
    if (w & bit) return false;
    w |= bit;
    ++count_;
    return true;
  }
  bool acquainted(std::span<const Vertex> sorted_agents) const {
    return test(index_.rank_unchecked(sorted_agents));
  }
  // Every agent subset marked here is also marked in `other`.
  bool subset_of(const AcquaintanceLedger& other) const;

  // Marks every k-subset of `agents` (any order, size >= k).
  void mark_all_k_subsets(std::span<const Vertex> agents);

 private:
  KSubsetIndex index_;
  std::vector<std::uint64_t> words_;
  std::uint64_t count_ = 0;
};

struct EngineOptions {
  bool track_visits = false;
};

// Agents, their positions, and the k-acquaintance ledger. Agent i starts on
// vertex i.
class SimState {
 public:
  SimState(const Hypergraph& structure, std::size_t k,
           EngineOptions options = {});

  const Hypergraph& structure() const { return structure_; }
  std::size_t n() const { return structure_.n(); }
  std::size_t k() const { return k_; }
  std::size_t round() const { return round_; }

  Vertex position_of(Vertex agent) const { return pos_[agent]; }
  Vertex agent_at(Vertex vertex) const { return inv_[vertex]; }
  std::span<const Vertex> positions() const { return pos_; }
  std::span<const Vertex> occupants() const { return inv_; }

  const AcquaintanceLedger& ledger() const { return ledger_; }
  bool is_complete() const { return ledger_.full(); }

  bool legal_swap(Vertex a, Vertex b) const;

  // Throws kNotAMatching / kIllegalSwap without modifying the state.
  void apply(const Matching& m);

  bool tracks_visits() const { return track_visits_; }
  bool visited(Vertex agent, Vertex vertex) const;
  std::size_t visited_count(Vertex agent) const;

 private:
  void mark_edge(std::uint32_t edge_id);
  void visit(Vertex agent, Vertex vertex);

  Hypergraph structure_;
  std::size_t k_;
  std::vector<std::vector<Vertex>> adjacency_;  // underlying graph, sorted
  std::vector<std::vector<std::uint32_t>> incidence_;
  std::vector<Vertex> pos_;
  std::vector<Vertex> inv_;
  AcquaintanceLedger ledger_;
  std::size_t round_ = 0;

  bool track_visits_ = false;
  std::size_t visit_words_ = 0;
  std::vector<std::uint64_t> visits_;

  // Scratch for apply().
  std::vector<std::uint32_t> edge_stamp_;
  std::vector<std::uint32_t> vertex_stamp_;
  std::uint32_t stamp_ = 0;
  std::vector<Vertex> scratch_agents_;
};

SimState init(const Hypergraph& structure, std::size_t k,
              EngineOptions options = {});
void apply_matching(SimState& state, const Matching& m);
bool is_complete(const SimState& state);

struct TraceReport {
  bool completed = false;
  std::optional<std::size_t> completion_round;
  std::vector<std::uint64_t> ledger_counts;  // [0] is the initial count

  friend bool operator==(const TraceReport&, const TraceReport&) = default;
};

// Replays `rounds` from the initial placement. Errors carry the 1-based
// round index in their message.
TraceReport run_trace(const Hypergraph& structure, std::size_t k,
                      std::span<const Matching> rounds,
                      EngineOptions options = {});

}  // namespace acq
