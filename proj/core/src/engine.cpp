#include "acq/engine.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "acq/error.hpp"

namespace acq {

AcquaintanceLedger::AcquaintanceLedger(std::size_t agents, std::size_t k)
    : index_(agents, k) {
  if (index_.size() > kMaxBits) {
    throw Error(ErrorKind::kCapacityExceeded,
                "C(" + std::to_string(agents) + "," + std::to_string(k) +
                    ") exceeds the dense ledger cap of 2^27 bits");
  }
  words_.assign((index_.size() + 63) / 64, 0);
}

bool AcquaintanceLedger::subset_of(const AcquaintanceLedger& other) const {
  if (other.words_.size() != words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

void AcquaintanceLedger::mark_all_k_subsets(std::span<const Vertex> agents) {
  const std::size_t k = index_.k();
  const std::size_t m = agents.size();
  if (m < k) return;
  std::vector<Vertex> sorted(agents.begin(), agents.end());
  std::sort(sorted.begin(), sorted.end());
  if (k == 2) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        set(index_.rank_pair(sorted[a], sorted[b]));
    return;
  }
  // Walk index combinations of sorted[] in lexicographic order.
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Vertex> subset(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = sorted[idx[i]];
    set(index_.rank_unchecked(subset));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

SimState::SimState(const Hypergraph& structure, std::size_t k,
                   EngineOptions options)
    : structure_(structure),
      k_(k),
      ledger_((k >= 2 && k <= structure.r()) ? structure.n() : 0,
              (k >= 2 && k <= structure.r()) ? k : 0),
      track_visits_(options.track_visits) {
  if (k < 2 || k > structure.r()) {
    throw Error(ErrorKind::kInvalidArity,
                "need 2 <= k <= r, got k=" + std::to_string(k) +
                    " r=" + std::to_string(structure.r()));
  }
  const std::size_t n = structure.n();
  pos_.resize(n);
  std::iota(pos_.begin(), pos_.end(), 0);
  inv_ = pos_;
  incidence_ = structure.incidence();
  adjacency_ = underlying_graph(structure).adjacency();
  edge_stamp_.assign(structure.edge_count(), 0);
  vertex_stamp_.assign(n, 0);
  for (std::size_t e = 0; e < structure.edge_count(); ++e) {
    mark_edge(static_cast<std::uint32_t>(e));
  }
  if (track_visits_) {
    visit_words_ = (n + 63) / 64;
    visits_.assign(n * visit_words_, 0);
    for (Vertex a = 0; a < n; ++a) visit(a, a);
  }
}

bool SimState::legal_swap(Vertex a, Vertex b) const {
  if (a >= n() || b >= n() || a == b) return false;
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

void SimState::mark_edge(std::uint32_t edge_id) {
  const auto e = structure_.edge(edge_id);
  if (structure_.r() == 2 && k_ == 2) {
    ledger_.set(ledger_.index().rank_pair(inv_[e[0]], inv_[e[1]]));
    return;
  }
  scratch_agents_.clear();
  for (Vertex v : e) scratch_agents_.push_back(inv_[v]);
  ledger_.mark_all_k_subsets(scratch_agents_);
}

void SimState::apply(const Matching& m) {
  if (++stamp_ == 0) {
    std::fill(vertex_stamp_.begin(), vertex_stamp_.end(), 0);
    std::fill(edge_stamp_.begin(), edge_stamp_.end(), 0);
    stamp_ = 1;
  }
  for (const auto& [a, b] : m.swaps) {
    if (a >= n() || b >= n() || a == b) {
      throw Error(ErrorKind::kNotAMatching,
                  "pair {" + std::to_string(a) + "," + std::to_string(b) +
                      "} is not a pair of distinct vertices");
    }
    if (vertex_stamp_[a] == stamp_ || vertex_stamp_[b] == stamp_) {
      throw Error(ErrorKind::kNotAMatching,
                  "pair {" + std::to_string(a) + "," + std::to_string(b) +
                      "} shares an endpoint with another pair");
    }
    vertex_stamp_[a] = stamp_;
    vertex_stamp_[b] = stamp_;
  }
  for (const auto& [a, b] : m.swaps) {
    if (!legal_swap(a, b)) {
      throw Error(ErrorKind::kIllegalSwap,
                  "pair {" + std::to_string(a) + "," + std::to_string(b) +
                      "} is not an edge of the underlying graph");
    }
  }
  for (const auto& [a, b] : m.swaps) {
    const Vertex x = inv_[a];
    const Vertex y = inv_[b];
    inv_[a] = y;
    inv_[b] = x;
    pos_[x] = b;
    pos_[y] = a;
    if (track_visits_) {
      visit(x, b);
      visit(y, a);
    }
  }
  // Only edges with a changed occupant can contribute new subsets.
  for (const auto& [a, b] : m.swaps) {
    for (Vertex v : {a, b}) {
      for (std::uint32_t e : incidence_[v]) {
        if (edge_stamp_[e] == stamp_) continue;
        edge_stamp_[e] = stamp_;
        mark_edge(e);
      }
    }
  }
  ++round_;
}

void SimState::visit(Vertex agent, Vertex vertex) {
  visits_[agent * visit_words_ + (vertex >> 6)] |= std::uint64_t{1}
                                                   << (vertex & 63);
}

bool SimState::visited(Vertex agent, Vertex vertex) const {
  if (!track_visits_) return false;
  return (visits_[agent * visit_words_ + (vertex >> 6)] >> (vertex & 63)) & 1U;
}

std::size_t SimState::visited_count(Vertex agent) const {
  if (!track_visits_) return 0;
  std::size_t total = 0;
  for (std::size_t w = 0; w < visit_words_; ++w) {
    total += static_cast<std::size_t>(
        __builtin_popcountll(visits_[agent * visit_words_ + w]));
  }
  return total;
}

SimState init(const Hypergraph& structure, std::size_t k,
              EngineOptions options) {
  return SimState(structure, k, options);
}

void apply_matching(SimState& state, const Matching& m) { state.apply(m); }

bool is_complete(const SimState& state) { return state.is_complete(); }

TraceReport run_trace(const Hypergraph& structure, std::size_t k,
                      std::span<const Matching> rounds,
                      EngineOptions options) {
  SimState state(structure, k, options);
  TraceReport report;
  report.ledger_counts.reserve(rounds.size() + 1);
  report.ledger_counts.push_back(state.ledger().count());
  if (state.is_complete()) report.completion_round = 0;
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    try {
      state.apply(rounds[i]);
    } catch (const Error& e) {
      throw Error(e.kind(), "round " + std::to_string(i + 1) + ": " + e.detail());
    }
    report.ledger_counts.push_back(state.ledger().count());
    if (!report.completion_round && state.is_complete()) {
      report.completion_round = i + 1;
    }
  }
  report.completed = report.completion_round.has_value();
  return report;
}

}  // namespace acq
