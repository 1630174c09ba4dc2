#include "acq/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "acq/engine.hpp"
#include "acq/error.hpp"
#include "acq/rng.hpp"
#include "routing.hpp"

namespace acq {

namespace {

using detail::LocalRound;

class Placement {
 public:
  explicit Placement(std::size_t n) : pos_(n), inv_(n) {
    std::iota(pos_.begin(), pos_.end(), Vertex{0});
    std::iota(inv_.begin(), inv_.end(), Vertex{0});
  }

  Vertex agent_at(Vertex v) const { return inv_[v]; }
  Vertex position_of(Vertex a) const { return pos_[a]; }

  void apply(const Matching& m) {
    for (auto [a, b] : m.swaps) {
      std::swap(inv_[a], inv_[b]);
      pos_[inv_[a]] = a;
      pos_[inv_[b]] = b;
    }
  }

 private:
  std::vector<Vertex> pos_;
  std::vector<Vertex> inv_;
};

// Appends non-empty rounds, keeping the placement (and optional engine
// state) in step.
void append(StrategyTrace& out, Placement& pl, const std::vector<Matching>& rounds,
            SimState* state = nullptr) {
  for (const Matching& m : rounds) {
    if (m.empty()) continue;
    pl.apply(m);
    if (state != nullptr) state->apply(m);
    out.rounds.push_back(m);
  }
}

void merge_parallel(std::vector<Matching>& into, const std::vector<Matching>& from) {
  if (into.size() < from.size()) into.resize(from.size());
  for (std::size_t t = 0; t < from.size(); ++t) {
    into[t].swaps.insert(into[t].swaps.end(), from[t].swaps.begin(),
                         from[t].swaps.end());
  }
}

void check_arity(std::size_t k, std::size_t r) {
  if (k < 2 || k > r) {
    throw Error(ErrorKind::kInvalidArity,
                "k=" + std::to_string(k) + " outside [2, " + std::to_string(r) + "]");
  }
}

// --------------------------------------------------- team schedule on P

struct TeamBlock {
  std::size_t start = 0;
  std::vector<std::uint32_t> members;  // labels, in path order at formation
};

// Works in path-position space; labels are the agents' starting positions.
class TeamSchedule {
 public:
  TeamSchedule(const LoosePath& path, std::size_t k)
      : path_(path), k_(k), len_(path.length()),
        label_at_(len_), pos_of_(len_), key_(len_, 0), mark_(len_, 0) {
    std::iota(label_at_.begin(), label_at_.end(), 0U);
    std::iota(pos_of_.begin(), pos_of_.end(), std::size_t{0});
  }

  const std::vector<LocalRound>& rounds() const { return rounds_; }

  std::size_t route(const std::vector<std::size_t>& dest_of_label) {
    std::vector<std::size_t> dest(len_);
    for (std::size_t i = 0; i < len_; ++i) dest[i] = dest_of_label[label_at_[i]];
    const auto rounds = detail::route_permutation_on_path(std::move(dest));
    for (const auto& round : rounds) record(round);
    return rounds.size();
  }

  // 2L parity phases; adjacent teams pass each other, each full team
  // meeting every member of the other on a single edge of P.
  std::size_t traverse(std::vector<TeamBlock> blocks) {
    const std::size_t before = rounds_.size();
    const std::size_t phases = 2 * blocks.size();
    for (std::size_t phase = 0; phase < phases; ++phase) {
      struct Job {
        std::size_t left;  // index into blocks
        std::size_t lo, hi;
      };
      std::vector<std::vector<Job>> batches;
      for (std::size_t i = phase % 2; i + 1 < blocks.size(); i += 2) {
        Job job{i, blocks[i].start,
                blocks[i + 1].start + blocks[i + 1].members.size()};
        bool grow_left = true;
        while (!has_window(job.lo, job.hi)) {
          if ((grow_left && job.lo > 0) || job.hi == len_) {
            --job.lo;
          } else {
            ++job.hi;
          }
          grow_left = !grow_left;
        }
        bool placed = false;
        for (auto& batch : batches) {
          const bool clash = std::any_of(batch.begin(), batch.end(), [&](const Job& o) {
            return job.lo < o.hi && o.lo < job.hi;
          });
          if (!clash) {
            batch.push_back(job);
            placed = true;
            break;
          }
        }
        if (!placed) batches.push_back({job});
      }
      for (const auto& batch : batches) {
        std::vector<LocalRound> merged;
        for (const Job& job : batch) {
          std::vector<LocalRound> own;
          pass_by(blocks[job.left], blocks[job.left + 1], job.lo, job.hi, own);
          if (merged.size() < own.size()) merged.resize(own.size());
          for (std::size_t t = 0; t < own.size(); ++t) {
            merged[t].insert(merged[t].end(), own[t].begin(), own[t].end());
          }
        }
        for (auto& round : merged) rounds_.push_back(std::move(round));
      }
      for (std::size_t i = phase % 2; i + 1 < blocks.size(); i += 2) {
        const std::size_t start = blocks[i].start;
        std::swap(blocks[i], blocks[i + 1]);
        blocks[i].start = start;
        blocks[i + 1].start = start + blocks[i].members.size();
      }
    }
    return rounds_.size() - before;
  }

  // Unconditional parity swaps along the whole path: every agent walks
  // every position.
  std::size_t sweep() {
    for (std::size_t phase = 0; phase < 2 * len_; ++phase) {
      LocalRound round;
      for (std::size_t i = phase % 2; i + 1 < len_; i += 2) {
        round.emplace_back(static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(i + 1));
      }
      if (!round.empty()) record(round);
    }
    return 2 * len_;
  }

 private:
  void swap_positions(std::size_t a, std::size_t b) {
    std::swap(label_at_[a], label_at_[b]);
    pos_of_[label_at_[a]] = a;
    pos_of_[label_at_[b]] = b;
  }

  void record(const LocalRound& round) {
    for (auto [a, b] : round) swap_positions(a, b);
    rounds_.push_back(round);
  }

  bool has_window(std::size_t lo, std::size_t hi) const {
    for (std::size_t z = lo; z + k_ <= hi; ++z) {
      if (path_.window_in_one_edge(z, z + k_ - 1)) return true;
    }
    return false;
  }

  std::size_t pick_window(std::size_t lo, std::size_t hi, std::size_t centre) const {
    std::size_t best = lo;
    std::size_t best_gap = SIZE_MAX;
    for (std::size_t z = lo; z + k_ <= hi; ++z) {
      if (!path_.window_in_one_edge(z, z + k_ - 1)) continue;
      const std::size_t mid2 = 2 * z + k_ - 1;  // twice the window centre
      const std::size_t gap = mid2 > 2 * centre ? mid2 - 2 * centre : 2 * centre - mid2;
      if (gap < best_gap) {
        best = z;
        best_gap = gap;
      }
    }
    return best;
  }

  bool met(const std::vector<std::uint32_t>& labels) const {
    std::size_t lo = SIZE_MAX, hi = 0;
    for (auto l : labels) {
      lo = std::min(lo, pos_of_[l]);
      hi = std::max(hi, pos_of_[l]);
    }
    return hi - lo + 1 <= path_.r() && path_.window_in_one_edge(lo, hi);
  }

  // Odd-even transposition sort of [lo, hi) by key_, stopping early once
  // `done` holds at a round boundary.
  void sort_region(std::size_t lo, std::size_t hi, const std::function<bool()>& done,
                   std::vector<LocalRound>& out) {
    std::size_t parity = 0;
    std::size_t idle = 0;
    while (idle < 2) {
      LocalRound round;
      for (std::size_t i = lo + parity; i + 1 < hi; i += 2) {
        if (key_[label_at_[i]] > key_[label_at_[i + 1]]) {
          swap_positions(i, i + 1);
          round.emplace_back(static_cast<std::uint32_t>(i),
                             static_cast<std::uint32_t>(i + 1));
        }
      }
      parity ^= 1;
      if (round.empty()) {
        ++idle;
        continue;
      }
      idle = 0;
      out.push_back(std::move(round));
      if (done && done()) return;
    }
  }

  void pass_by(const TeamBlock& x, const TeamBlock& y, std::size_t lo,
               std::size_t hi, std::vector<LocalRound>& out) {
    const std::vector<std::uint32_t> region(label_at_.begin() + static_cast<long>(lo),
                                            label_at_.begin() + static_cast<long>(hi));
    const std::vector<std::uint32_t>& xs = x.members;
    const std::vector<std::uint32_t>& ys = y.members;
    const std::size_t z = pick_window(lo, hi, y.start);

    std::vector<std::vector<std::uint32_t>> meetings;
    if (xs.size() == k_ - 1) {
      for (auto l : ys) {
        meetings.push_back(xs);
        meetings.back().push_back(l);
      }
    }
    if (ys.size() == k_ - 1) {
      for (auto l : xs) {
        meetings.push_back(ys);
        meetings.back().push_back(l);
      }
    }
    for (const auto& meeting : meetings) {
      if (met(meeting)) continue;
      ++stamp_;
      for (auto l : meeting) mark_[l] = stamp_;
      std::size_t inside = z;
      std::size_t outside = lo;
      for (std::size_t i = lo; i < hi; ++i) {
        const auto l = label_at_[i];
        if (mark_[l] == stamp_) {
          key_[l] = inside++;
        } else {
          if (outside == z) outside = z + k_;
          key_[l] = outside++;
        }
      }
      sort_region(lo, hi, [&] { return met(meeting); }, out);
    }

    for (std::size_t i = lo; i < x.start; ++i) key_[region[i - lo]] = i;
    std::size_t at = x.start;
    for (auto l : ys) key_[l] = at++;
    for (auto l : xs) key_[l] = at++;
    for (std::size_t i = at; i < hi; ++i) key_[region[i - lo]] = i;
    sort_region(lo, hi, {}, out);
  }

  const LoosePath& path_;
  std::size_t k_;
  std::size_t len_;
  std::vector<std::uint32_t> label_at_;
  std::vector<std::size_t> pos_of_;
  std::vector<std::size_t> key_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::vector<LocalRound> rounds_;
};

// ---------------------------------------------- bringing agents onto P

struct PathAttachment {
  std::vector<char> on_path;
  std::vector<std::size_t> path_pos;             // valid when on_path
  std::vector<std::vector<std::size_t>> attach;  // off-path v -> positions
};

PathAttachment attachments(const Hypergraph& h, const LoosePath& path) {
  const std::size_t n = h.n();
  PathAttachment a;
  a.on_path.assign(n, 0);
  a.path_pos.assign(n, 0);
  a.attach.assign(n, {});
  for (std::size_t i = 0; i < path.length(); ++i) {
    a.on_path[path.ordering()[i]] = 1;
    a.path_pos[path.ordering()[i]] = i;
  }
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const auto edge = h.edge(e);
    for (Vertex w : edge) {
      if (a.on_path[w]) continue;
      for (Vertex v : edge) {
        if (a.on_path[v]) a.attach[w].push_back(a.path_pos[v]);
      }
    }
  }
  for (auto& list : a.attach) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return a;
}

// Moves every agent of `wanted` (|wanted| == |P|) onto P. Each wave
// matches off-path holders of wanted agents to distinct path vertices,
// routes unwanted path agents onto those vertices, then swaps across.
std::vector<Matching> bring_onto_path(const LoosePath& path, const PathAttachment& at,
                                      Placement& pl, const std::vector<char>& wanted,
                                      std::size_t& waves) {
  const auto& ord = path.ordering();
  const std::size_t len = path.length();
  const std::size_t n = wanted.size();
  std::vector<Matching> out;
  auto emit = [&](const std::vector<Matching>& rounds) {
    for (const auto& m : rounds) {
      if (m.empty()) continue;
      pl.apply(m);
      out.push_back(m);
    }
  };

  for (;;) {
    std::vector<Vertex> incoming;
    for (Vertex w = 0; w < n; ++w) {
      if (!at.on_path[w] && wanted[pl.agent_at(w)]) incoming.push_back(w);
    }
    if (incoming.empty()) break;
    ++waves;

    std::vector<long> match_pos(len, -1);
    std::vector<std::uint32_t> seen(len, 0);
    std::uint32_t stamp = 0;
    std::function<bool(Vertex)> augment = [&](Vertex w) {
      for (std::size_t p : at.attach[w]) {
        if (seen[p] == stamp) continue;
        seen[p] = stamp;
        if (match_pos[p] < 0 || augment(static_cast<Vertex>(match_pos[p]))) {
          match_pos[p] = static_cast<long>(w);
          return true;
        }
      }
      return false;
    };
    for (Vertex w : incoming) {
      ++stamp;
      augment(w);
    }

    // Unwanted path agents go to the matched positions, the rest keep
    // their relative order.
    std::vector<std::size_t> dest(len);
    std::vector<std::size_t> slots, free_slots;
    for (std::size_t p = 0; p < len; ++p) {
      (match_pos[p] >= 0 ? slots : free_slots).push_back(p);
    }
    std::size_t next_slot = 0, next_free = 0;
    for (std::size_t p = 0; p < len; ++p) {
      const bool leaving = !wanted[pl.agent_at(ord[p])] && next_slot < slots.size();
      dest[p] = leaving ? slots[next_slot++] : free_slots[next_free++];
    }
    emit(route_on_loose_path(path, dest));

    Matching wave;
    for (std::size_t p = 0; p < len; ++p) {
      if (match_pos[p] >= 0) {
        wave.swaps.push_back(make_edge(static_cast<Vertex>(match_pos[p]), ord[p]));
      }
    }
    emit({wave});
  }
  return out;
}

std::vector<char> rotation_set(std::size_t n, std::size_t len,
                               const std::vector<Vertex>& excluded) {
  std::vector<char> wanted(n, 1);
  for (Vertex a : excluded) wanted[a] = 0;
  std::size_t count = n - excluded.size();
  for (Vertex a : excluded) {
    if (count >= len) break;
    wanted[a] = 1;
    ++count;
  }
  return wanted;
}

}  // namespace

// ------------------------------------------------------------ good tree

StrategyTrace good_tree_strategy(const GoodTree& tree) {
  validate_good_tree(tree);
  const std::size_t n = tree.n;
  const std::size_t kappa = tree.spine.size();
  StrategyTrace out;
  out.claimed_complete = true;
  out.meta["n"] = static_cast<double>(n);
  out.meta["spine_length"] = static_cast<double>(kappa);
  out.meta["heavy"] = static_cast<double>(tree.heavy.size());
  out.meta["light"] = static_cast<double>(tree.light.size());
  out.meta["pendant"] = static_cast<double>(tree.pendant.size());
  out.meta["C_gt"] = kGoodTreeFactor;
  if (n <= 2) {
    out.meta["teams"] = 0;
    return out;
  }

  const Graph t = tree.tree();
  Placement pl(n);
  std::vector<char> on_spine(n, 0);
  for (Vertex v : tree.spine) on_spine[v] = 1;
  std::vector<std::vector<Vertex>> teams{tree.spine};
  for (Vertex a = 0; a < n; ++a) {
    if (on_spine[a]) continue;
    if (teams.back().size() == kappa || teams.size() == 1) teams.emplace_back();
    teams.back().push_back(a);
  }

  Matching odd, even, detour;
  for (std::size_t i = 0; i + 1 < kappa; ++i) {
    (i % 2 == 0 ? odd : even).swaps.push_back(make_edge(tree.spine[i], tree.spine[i + 1]));
  }
  for (auto [pos, u] : tree.heavy) detour.swaps.push_back(make_edge(tree.spine[pos], u));

  // Pendant vertices are seen from their light vertex: the team agent steps
  // from the light vertex's anchor into it and back. Light vertices sharing
  // an anchor take turns.
  std::vector<Matching> deep_spine, deep_heavy;
  {
    std::vector<char> hook(n, 0);
    for (auto [v, x] : tree.pendant) hook[x] = 1;
    std::map<Vertex, std::size_t> turns;
    for (auto [x, y] : tree.light) {
      if (!hook[x]) continue;
      auto& rounds = on_spine[y] ? deep_spine : deep_heavy;
      const std::size_t turn = turns[y]++;
      if (rounds.size() <= turn) rounds.resize(turn + 1);
      rounds[turn].swaps.push_back(make_edge(x, y));
    }
  }
  auto out_and_back = [](const std::vector<Matching>& rounds) {
    std::vector<Matching> seq;
    for (const Matching& m : rounds) {
      seq.push_back(m);
      seq.push_back(m);
    }
    return seq;
  };
  const std::vector<Matching> spine_visits = out_and_back(deep_spine);
  const std::vector<Matching> heavy_visits = out_and_back(deep_heavy);

  std::size_t route_rounds = 0;
  std::size_t traversal_rounds = 0;
  for (std::size_t ti = 0; ti < teams.size(); ++ti) {
    if (ti > 0) {
      std::vector<char> member(n, 0);
      std::vector<Vertex> sources;
      for (Vertex a : teams[ti]) {
        member[a] = 1;
        sources.push_back(pl.position_of(a));
      }
      for (Vertex v : tree.spine) {
        if (sources.size() == kappa) break;
        if (!member[pl.agent_at(v)]) sources.push_back(v);
      }
      const auto rounds = route_on_tree(t, sources, tree.spine);
      route_rounds += rounds.size();
      append(out, pl, rounds);
    }
    const std::size_t before = out.rounds.size();
    for (std::size_t phase = 1; phase <= 2 * kappa; ++phase) {
      append(out, pl, {phase % 2 == 1 ? odd : even});
      append(out, pl, spine_visits);
      if (!detour.empty()) {
        append(out, pl, {detour});
        append(out, pl, heavy_visits);
        append(out, pl, {detour});
      }
    }
    traversal_rounds += out.rounds.size() - before;
  }
  out.meta["teams"] = static_cast<double>(teams.size());
  out.meta["route_rounds"] = static_cast<double>(route_rounds);
  out.meta["traversal_rounds"] = static_cast<double>(traversal_rounds);
  out.meta["rounds_per_vertex"] =
      static_cast<double>(out.rounds.size()) / static_cast<double>(n);
  return out;
}

StrategyTrace good_spanning_tree_strategy(const Graph& g,
                                          const SpanningTreeOptions& options) {
  const SpanningGoodTree found = find_good_spanning_tree(g, options);
  StrategyTrace out = good_tree_strategy(found.tree);
  out.meta["dfs_spine_length"] = static_cast<double>(found.spine_length);
  out.meta["builder_leftover"] = static_cast<double>(found.builder_leftover);
  out.meta["attempts"] = static_cast<double>(found.attempts);
  return out;
}

// ----------------------------------------------------------- loose path

StrategyTrace loose_path_strategy(const LoosePath& path, std::size_t k,
                                  std::uint64_t seed) {
  check_arity(k, path.r());
  const std::size_t len = path.length();
  StrategyTrace out;
  out.claimed_complete = true;
  out.meta["length"] = static_cast<double>(len);
  out.meta["k"] = static_cast<double>(k);
  if (path.edge_count() <= 1) return out;  // one edge holds everyone

  const std::size_t s = k - 1;
  const std::size_t big_n = (len + s - 1) / s * s;
  const Factorization f = baranyai(big_n, s);

  TeamSchedule schedule(path, k);
  Rng rng(seed);
  std::size_t route_rounds = 0;
  std::size_t traverse_rounds = 0;
  for (const auto& factor : f.factors) {
    std::vector<std::vector<std::uint32_t>> teams;
    for (const auto& block : factor) {
      std::vector<std::uint32_t> team;
      for (Vertex v : block) {
        if (v < len) team.push_back(v);
      }
      if (!team.empty()) teams.push_back(std::move(team));
    }
    rng.shuffle(std::span(teams));

    std::vector<std::size_t> dest(len);
    std::vector<TeamBlock> blocks;
    std::size_t at = 0;
    for (const auto& team : teams) {
      blocks.push_back({at, team});
      for (auto l : team) dest[l] = at++;
    }
    route_rounds += schedule.route(dest);
    traverse_rounds += schedule.traverse(std::move(blocks));
  }
  const std::size_t sweep_rounds = k >= 3 ? schedule.sweep() : 0;

  const auto& ord = path.ordering();
  for (const auto& round : schedule.rounds()) {
    Matching m;
    for (auto [a, b] : round) m.swaps.push_back(make_edge(ord[a], ord[b]));
    out.rounds.push_back(std::move(m));
  }
  const double scale = std::pow(static_cast<double>(len), static_cast<double>(k - 1));
  out.meta["factors"] = static_cast<double>(f.factors.size());
  out.meta["route_rounds"] = static_cast<double>(route_rounds);
  out.meta["traverse_rounds"] = static_cast<double>(traverse_rounds);
  out.meta["sweep_rounds"] = static_cast<double>(sweep_rounds);
  out.meta["C_lp"] = static_cast<double>(out.rounds.size()) / scale;
  return out;
}

// ----------------------------------------------------------- rotations

std::vector<std::vector<Vertex>> rotation_groups(std::size_t n, std::size_t k) {
  std::vector<std::vector<Vertex>> groups(k + 1);
  for (Vertex a = 0; a < n; ++a) groups[a % (k + 1)].push_back(a);
  return groups;
}

std::size_t dense_cut_count(double omega, double c_cut, std::size_t k) {
  if (!(omega > 0) || !(c_cut > 0) || k < 2) {
    throw Error(ErrorKind::kConfig, "omega and C_cut must be positive, k >= 2");
  }
  const double m = std::floor(std::pow(omega / c_cut, 1.0 / static_cast<double>(k - 1)) + 1e-9);
  return m < 1 ? 1 : static_cast<std::size_t>(m);
}

StrategyTrace sparse_hypergraph_strategy(const Hypergraph& h, std::size_t k,
                                         std::uint64_t seed,
                                         const SparseOptions& options) {
  check_arity(k, h.r());
  const std::size_t n = h.n();
  LoosePath best;
  bool best_attached = false;
  for (std::size_t a = 0; a < std::max<std::size_t>(1, options.dfs_attempts); ++a) {
    LoosePath p = dfs_loose_path(h, mix_seed(seed, a));
    if (p.edge_count() == 0) continue;
    const PathAttachment at = attachments(h, p);
    bool attached = true;
    for (Vertex w = 0; w < n && attached; ++w) {
      attached = at.on_path[w] || !at.attach[w].empty();
    }
    if ((attached && !best_attached) ||
        (attached == best_attached && p.length() > best.length())) {
      best = std::move(p);
      best_attached = attached;
    }
  }
  const std::size_t len = best.length();
  if (len == n) {
    StrategyTrace out = loose_path_strategy(best, k, seed);
    out.meta["path_length"] = static_cast<double>(len);
    out.meta["groups"] = 1;
    return out;
  }
  if (best.edge_count() == 0) {
    throw Error(ErrorKind::kStructuralAssumptionViolated, "no hyperedges to build a path from");
  }
  const PathAttachment at = attachments(h, best);
  for (Vertex w = 0; w < n; ++w) {
    if (!at.on_path[w] && at.attach[w].empty()) {
      throw Error(ErrorKind::kStructuralAssumptionViolated,
                  "vertex " + std::to_string(w) + " lies in no edge meeting the path");
    }
  }
  const auto groups = rotation_groups(n, k);
  for (const auto& g : groups) {
    if (n - g.size() > len) {
      throw Error(ErrorKind::kStructuralAssumptionViolated,
                  "path of length " + std::to_string(len) + " cannot hold the " +
                      std::to_string(n - g.size()) + " agents outside a group");
    }
  }

  StrategyTrace out;
  out.claimed_complete = true;
  Placement pl(n);
  std::size_t waves = 0;
  std::size_t onboard_rounds = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto wanted = rotation_set(n, len, groups[i]);
    const auto onboard = bring_onto_path(best, at, pl, wanted, waves);
    onboard_rounds += onboard.size();
    out.rounds.insert(out.rounds.end(), onboard.begin(), onboard.end());
    append(out, pl, loose_path_strategy(best, k, mix_seed(seed, 100 + i)).rounds);
  }
  out.meta["path_length"] = static_cast<double>(len);
  out.meta["groups"] = static_cast<double>(groups.size());
  out.meta["onboard_rounds"] = static_cast<double>(onboard_rounds);
  out.meta["onboard_waves"] = static_cast<double>(waves);
  return out;
}

StrategyTrace dense_hypergraph_strategy(const Hypergraph& h, std::size_t k,
                                        double omega, double c_cut,
                                        std::uint64_t seed,
                                        const DenseOptions& options) {
  check_arity(k, h.r());
  const auto path = find_loose_hamilton_path(h, options.search_budget, seed);
  if (!path) {
    throw Error(ErrorKind::kPathUnavailable,
                "no loose Hamilton path found within budget " +
                    std::to_string(options.search_budget));
  }
  return dense_hypergraph_strategy_on_path(h, *path, k, omega, c_cut, seed);
}

StrategyTrace dense_hypergraph_strategy_on_path(const Hypergraph& h,
                                                const LoosePath& path,
                                                std::size_t k, double omega,
                                                double c_cut,
                                                std::uint64_t seed) {
  check_arity(k, h.r());
  const std::size_t n = h.n();
  const std::size_t r = h.r();
  if (path.r() != r || path.length() < loose_hamilton_target(n, r)) {
    throw Error(ErrorKind::kPathUnavailable, "supplied path is not near-Hamilton");
  }
  for (auto e : loose_path_edges(path)) {
    std::sort(e.begin(), e.end());
    if (!h.has_edge(e)) {
      throw Error(ErrorKind::kPathUnavailable, "supplied path uses a non-edge");
    }
  }
  const std::size_t len = path.length();
  const std::size_t edges = path.edge_count();
  const std::size_t m = std::max<std::size_t>(
      1, std::min(dense_cut_count(omega, c_cut, k), (edges + 1) / 2));
  const std::size_t kept = edges - (m - 1);
  const auto& ord = path.ordering();

  StrategyTrace out;
  out.claimed_complete = true;
  Placement pl(n);
  SimState state(h, k);

  std::vector<Matching> unit_rounds;
  std::size_t start = 0;
  std::size_t longest = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t e = kept / m + (j < kept % m ? 1 : 0);
    const std::vector<Vertex> piece(ord.begin() + static_cast<long>(start),
                                    ord.begin() + static_cast<long>(start + e * (r - 1) + 1));
    longest = std::max(longest, piece.size());
    merge_parallel(unit_rounds,
                   loose_path_strategy(LoosePath(piece, r), k, mix_seed(seed, j)).rounds);
    start += (e + 1) * (r - 1);
  }
  append(out, pl, unit_rounds, &state);
  const std::size_t unit_stage = out.rounds.size();

  std::size_t rotations = 0;
  std::size_t waves = 0;
  if (!state.is_complete()) {
    const PathAttachment at = attachments(h, path);
    const auto groups = rotation_groups(n, k);
    const AcquaintanceLedger& ledger = state.ledger();
    for (std::size_t i = 0; i < groups.size(); ++i) {
      std::vector<char> in_group(n, 0);
      for (Vertex a : groups[i]) in_group[a] = 1;
      bool needed = false;
      for (std::uint64_t rank = 0; rank < ledger.size() && !needed; ++rank) {
        if (ledger.test(rank)) continue;
        const auto agents = ledger.index().unrank(rank);
        needed = std::none_of(agents.begin(), agents.end(),
                              [&](Vertex a) { return in_group[a] != 0; });
      }
      if (!needed) continue;
      ++rotations;
      const auto wanted = rotation_set(n, len, groups[i]);
      for (const Matching& mm : bring_onto_path(path, at, pl, wanted, waves)) {
        state.apply(mm);
        out.rounds.push_back(mm);
      }
      append(out, pl, loose_path_strategy(path, k, mix_seed(seed, 100 + i)).rounds, &state);
    }
  }
  out.claimed_complete = state.is_complete();
  out.meta["sub_paths"] = static_cast<double>(m);
  out.meta["sub_path_length"] = static_cast<double>(longest);
  out.meta["passive"] = static_cast<double>((m - 1) * (r - 2) + (n - len));
  out.meta["unit_stage_rounds"] = static_cast<double>(unit_stage);
  out.meta["rotation_rounds"] = static_cast<double>(out.rounds.size() - unit_stage);
  out.meta["rotations"] = static_cast<double>(rotations);
  return out;
}

}  // namespace acq
