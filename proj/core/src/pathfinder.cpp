#include "acq/pathfinder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "acq/error.hpp"
#include "acq/rng.hpp"

namespace acq {

double long_path_constant(std::size_t r, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorKind::kInvalidDelta,
                "delta=" + std::to_string(delta) + " is outside (0,1)");
  }
  if (r < 2) {
    throw Error(ErrorKind::kInvalidUniformity, "uniformity must be >= 2");
  }
  const double rm1 = static_cast<double>(r - 1);
  const double factorial = std::tgamma(rm1 + 1.0);
  const double numerator = 2.0 * factorial * std::log(4.0);
  const double denominator = ((1.0 - delta) / (2.0 * rm1)) *
                             std::pow((1.0 - delta) / 2.0, rm1);
  return numerator / denominator;
}

// ------------------------------------------------------- DFS loose path

namespace {

enum class Bin : std::uint8_t { kPath, kUnexplored, kDead, kRetired };

class LoosePathSearch {
 public:
  LoosePathSearch(const Hypergraph& h, const DfsOptions& options)
      : h_(h), options_(options), r_(h.r()) {
    const std::size_t n = h.n();
    scan_.resize(n);
    std::iota(scan_.begin(), scan_.end(), 0);
    if (options.shuffle_seed) {
      Rng rng(*options.shuffle_seed);
      rng.shuffle(std::span<Vertex>(scan_));
    }
    rank_.resize(n);
    for (std::size_t i = 0; i < n; ++i) rank_[scan_[i]] = static_cast<Vertex>(i);
    incidence_ = h.incidence();
    sorted_.assign(n, false);
    cursor_.assign(n, 0);
    bin_.assign(n, Bin::kUnexplored);
    unexplored_ = n;
  }

  DfsResult run() {
    DfsResult result;
    const std::size_t n = h_.n();
    if (n == 0) {
      result.path = LoosePath({}, r_);
      return result;
    }
    restart();
    best_ = path_;
    notify();
    while (true) {
      if (path_.empty()) {
        if (unexplored_ == 0) break;
        restart();
        ++result.steps;
        notify();
        continue;
      }
      if (unexplored_ < r_ - 1) break;  // no further extension possible
      if (!extend()) retreat();
      ++result.steps;
      if (path_.size() > best_.size()) best_ = path_;
      notify();
    }
    result.path = LoosePath(best_, r_);
    return result;
  }

 private:
  void restart() {
    while (bin_[scan_[next_start_]] != Bin::kUnexplored) ++next_start_;
    const Vertex v = scan_[next_start_];
    move(v, Bin::kPath);
    path_.push_back(v);
  }

  void move(Vertex v, Bin to) {
    if (bin_[v] == Bin::kUnexplored) --unexplored_;
    bin_[v] = to;
  }

  // Candidate edges of v sorted by the scan ranks of e \ {v}.
  void prepare(Vertex v) {
    if (sorted_[v]) return;
    sorted_[v] = true;
    auto key = [&](std::uint32_t e) {
      std::vector<Vertex> ranks;
      ranks.reserve(r_ - 1);
      for (Vertex u : h_.edge(e))
        if (u != v) ranks.push_back(rank_[u]);
      std::sort(ranks.begin(), ranks.end());
      return ranks;
    };
    auto& list = incidence_[v];
    std::vector<std::pair<std::vector<Vertex>, std::uint32_t>> keyed;
    keyed.reserve(list.size());
    for (std::uint32_t e : list) keyed.emplace_back(key(e), e);
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < list.size(); ++i) list[i] = keyed[i].second;
  }

  bool extend() {
    const Vertex end = path_.back();
    prepare(end);
    auto& list = incidence_[end];
    auto& cur = cursor_[end];
    // Edges skipped here stay unusable: U only shrinks.
    for (; cur < list.size(); ++cur) {
      const auto e = h_.edge(list[cur]);
      bool usable = true;
      for (Vertex u : e) {
        if (u != end && bin_[u] != Bin::kUnexplored) {
          usable = false;
          break;
        }
      }
      if (!usable) continue;
      std::vector<Vertex> f;
      for (Vertex u : e)
        if (u != end) f.push_back(u);
      std::sort(f.begin(), f.end(),
                [&](Vertex a, Vertex b) { return rank_[a] < rank_[b]; });
      for (Vertex u : f) {
        move(u, Bin::kPath);
        path_.push_back(u);
      }
      return true;
    }
    return false;
  }

  void retreat() {
    const std::size_t len = path_.size();
    move(path_.back(), Bin::kDead);
    path_.pop_back();
    ++dead_;
    if (len != 1) {
      for (std::size_t i = 0; i + 2 < r_; ++i) {
        move(path_.back(), Bin::kRetired);
        path_.pop_back();
        ++retired_;
      }
    }
  }

  void notify() const {
    if (!options_.observer) return;
    DfsState s;
    s.path = path_;
    for (Vertex v = 0; v < h_.n(); ++v) {
      switch (bin_[v]) {
        case Bin::kUnexplored: s.unexplored.push_back(v); break;
        case Bin::kDead: s.dead.push_back(v); break;
        case Bin::kRetired: s.retired.push_back(v); break;
        case Bin::kPath: break;
      }
    }
    options_.observer(s);
  }

  const Hypergraph& h_;
  const DfsOptions& options_;
  std::size_t r_;
  std::vector<Vertex> scan_;
  std::vector<Vertex> rank_;
  std::vector<std::vector<std::uint32_t>> incidence_;
  std::vector<bool> sorted_;
  std::vector<std::size_t> cursor_;
  std::vector<Bin> bin_;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_;
  std::size_t unexplored_ = 0;
  std::size_t next_start_ = 0;
  std::size_t dead_ = 0;
  std::size_t retired_ = 0;
};

}  // namespace

DfsResult dfs_loose_path_run(const Hypergraph& h, const DfsOptions& options) {
  return LoosePathSearch(h, options).run();
}

LoosePath dfs_loose_path(const Hypergraph& h, std::uint64_t seed) {
  DfsOptions options;
  options.shuffle_seed = seed;
  return dfs_loose_path_run(h, options).path;
}

// ----------------------------------------------------- good-tree builder

GoodTreeBuild build_good_spanning_tree(
    const Graph& g, const LoosePath& spine, std::span<const Vertex> scan_order,
    const std::function<void(const GoodTreeBuildState&)>& observer) {
  const std::size_t n = g.n();
  const auto& order = spine.ordering();
  if (spine.r() != 2 || order.empty()) {
    throw Error(ErrorKind::kInvalidSpine, "spine must be a non-empty 2-path");
  }
  std::vector<long> spine_pos(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= n) {
      throw Error(ErrorKind::kInvalidSpine, "spine vertex out of range");
    }
    spine_pos[order[i]] = static_cast<long>(i);
    if (i > 0 && !g.has_edge(order[i - 1], order[i])) {
      throw Error(ErrorKind::kInvalidSpine,
                  "spine step {" + std::to_string(order[i - 1]) + "," +
                      std::to_string(order[i]) + "} is not an edge");
    }
  }

  std::vector<Vertex> candidates;
  if (scan_order.empty()) {
    for (Vertex v = 0; v < n; ++v)
      if (spine_pos[v] < 0) candidates.push_back(v);
  } else {
    candidates.assign(scan_order.begin(), scan_order.end());
  }

  const auto adj = g.adjacency();
  std::vector<char> open(order.size(), 1);
  std::size_t open_count = order.size();
  // Discovery index of each heavy vertex, -1 otherwise.
  std::vector<long> heavy_rank(n, -1);
  std::vector<Vertex> heavy_list;

  GoodTreeBuild out;
  out.tree.n = n;
  out.tree.spine = order;

  auto report = [&](std::span<const Vertex> pending) {
    if (!observer) return;
    GoodTreeBuildState s;
    for (std::size_t i = 0; i < open.size(); ++i)
      if (open[i]) s.open_positions.push_back(i);
    s.heavy = heavy_list;
    s.unattached.assign(pending.begin(), pending.end());
    observer(s);
  };

  auto attach_to_heavy = [&](Vertex v) {
    long best = -1;
    for (Vertex w : adj[v]) {
      if (heavy_rank[w] >= 0 && (best < 0 || heavy_rank[w] < best)) {
        best = heavy_rank[w];
      }
    }
    if (best < 0) return false;
    out.tree.light[v] = heavy_list[static_cast<std::size_t>(best)];
    return true;
  };

  // Phase (i): open spine positions first, then heavy vertices.
  std::vector<Vertex> unattached;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const Vertex v = candidates[c];
    if (v >= n || spine_pos[v] >= 0) {
      throw Error(ErrorKind::kInvalidSpine, "scan order must list off-spine "
                                            "vertices only");
    }
    long hit = -1;
    for (Vertex w : adj[v]) {
      const long p = spine_pos[w];
      if (p >= 0 && open[static_cast<std::size_t>(p)] && (hit < 0 || p < hit)) {
        hit = p;
      }
    }
    if (hit >= 0) {
      open[static_cast<std::size_t>(hit)] = 0;
      --open_count;
      heavy_rank[v] = static_cast<long>(heavy_list.size());
      heavy_list.push_back(v);
      out.tree.heavy[static_cast<std::size_t>(hit)] = v;
    } else if (!attach_to_heavy(v)) {
      unattached.push_back(v);
    }
    if (observer) {
      std::vector<Vertex> pending = unattached;
      pending.insert(pending.end(), candidates.begin() + static_cast<long>(c) + 1,
                     candidates.end());
      report(pending);
    }
  }
  (void)open_count;

  // Phase (ii): retry against the full heavy set.
  for (Vertex v : unattached) {
    if (!attach_to_heavy(v)) out.leftover.push_back(v);
  }
  report(out.leftover);
  return out;
}

std::vector<Vertex> attach_leftovers(const Graph& g, GoodTreeBuild& build) {
  GoodTree& t = build.tree;
  const std::size_t n = g.n();
  const auto adj = g.adjacency();
  enum class Role : std::uint8_t { kNone, kSpine, kHeavy, kLight };
  std::vector<Role> role(n, Role::kNone);
  std::vector<long> spine_pos(n, -1);
  for (std::size_t i = 0; i < t.spine.size(); ++i) {
    role[t.spine[i]] = Role::kSpine;
    spine_pos[t.spine[i]] = static_cast<long>(i);
  }
  for (const auto& [pos, u] : t.heavy) role[u] = Role::kHeavy;
  for (const auto& [v, to] : t.light) role[v] = Role::kLight;

  std::vector<Vertex> pending = build.leftover;
  bool progress = true;
  while (progress && !pending.empty()) {
    progress = false;
    std::vector<Vertex> still;
    for (Vertex s : pending) {
      Vertex anchor = 0;
      bool found = false;
      for (Vertex w : adj[s]) {
        if (role[w] == Role::kSpine || role[w] == Role::kHeavy) {
          anchor = w;
          found = true;
          break;
        }
      }
      if (!found) {
        // A light neighbour hanging off an unmatched spine position can be
        // promoted to heavy, which makes it a valid anchor.
        for (Vertex w : adj[s]) {
          if (role[w] != Role::kLight) continue;
          const Vertex parent = t.light.at(w);
          if (role[parent] != Role::kSpine) continue;
          const auto pos = static_cast<std::size_t>(spine_pos[parent]);
          if (t.heavy.count(pos)) continue;
          t.light.erase(w);
          t.heavy[pos] = w;
          role[w] = Role::kHeavy;
          anchor = w;
          found = true;
          break;
        }
      }
      if (found) {
        t.light[s] = anchor;
        role[s] = Role::kLight;
        progress = true;
      } else {
        still.push_back(s);
      }
    }
    pending = std::move(still);
  }
  build.leftover = pending;
  return pending;
}

SpanningGoodTree find_good_spanning_tree(const Graph& g,
                                         const SpanningTreeOptions& options) {
  if (g.n() == 0) {
    throw Error(ErrorKind::kInvalidStructure, "empty graph");
  }
  if (!g.is_connected()) {
    throw Error(ErrorKind::kStructuralAssumptionViolated,
                "graph is not connected");
  }
  const Hypergraph h(g);
  const auto adj = g.adjacency();
  std::optional<SpanningGoodTree> fallback;
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    const LoosePath spine =
        dfs_loose_path(h, mix_seed(options.seed, attempt));
    GoodTreeBuild build = build_good_spanning_tree(g, spine);
    const std::size_t before = build.leftover.size();
    const std::vector<Vertex> rest = attach_leftovers(g, build);
    SpanningGoodTree found;
    found.spine_length = spine.length();
    found.builder_leftover = before;
    found.attempts = attempt + 1;
    if (rest.empty()) {
      found.tree = std::move(build.tree);
      return found;
    }
    if (fallback) continue;
    bool hangs = true;
    for (Vertex v : rest) {
      const auto hook = std::find_if(adj[v].begin(), adj[v].end(), [&](Vertex x) {
        return build.tree.light.count(x) > 0;
      });
      if (hook == adj[v].end()) {
        hangs = false;
        break;
      }
      build.tree.pendant[v] = *hook;
    }
    if (hangs) {
      found.tree = std::move(build.tree);
      fallback = std::move(found);
    }
  }
  if (fallback) {
    fallback->attempts = options.max_attempts;
    return *fallback;
  }
  throw Error(ErrorKind::kStructuralAssumptionViolated,
              "no good spanning tree found in " +
                  std::to_string(options.max_attempts) + " attempts");
}

// ------------------------------------------------- loose Hamilton search

std::size_t loose_hamilton_target(std::size_t n, std::size_t r) {
  if (n == 0) return 0;
  return ((n - 1) / (r - 1)) * (r - 1) + 1;
}

namespace {

class HamiltonSearch {
 public:
  HamiltonSearch(const Hypergraph& h, std::uint64_t budget, std::uint64_t seed)
      : h_(h),
        r_(h.r()),
        target_(loose_hamilton_target(h.n(), h.r())),
        budget_(budget),
        rng_(seed),
        incidence_(h.incidence()),
        used_(h.n(), 0) {}

  std::optional<LoosePath> run() {
    if (target_ == 0) return std::nullopt;
    std::vector<Vertex> starts(h_.n());
    std::iota(starts.begin(), starts.end(), 0);
    rng_.shuffle(std::span<Vertex>(starts));
    if (target_ == 1) return LoosePath({starts.front()}, r_);
    for (Vertex s : starts) {
      if (spent_ >= budget_) break;
      if (search_from(s)) return LoosePath(path_, r_);
    }
    return std::nullopt;
  }

 private:
  struct Step {
    std::uint32_t edge;
    Vertex endpoint;
  };

  // Extensions available at v that avoid used vertices (and `extra`).
  std::size_t free_degree(Vertex v, std::span<const Vertex> extra) const {
    std::size_t d = 0;
    for (std::uint32_t e : incidence_[v]) {
      bool ok = true;
      for (Vertex u : h_.edge(e)) {
        if (u == v) continue;
        if (used_[u] || std::find(extra.begin(), extra.end(), u) != extra.end()) {
          ok = false;
          break;
        }
      }
      d += ok ? 1 : 0;
    }
    return d;
  }

  std::vector<Step> candidates(Vertex end) {
    const bool last = path_.size() + (r_ - 1) == target_;
    std::vector<std::pair<std::pair<std::size_t, std::uint64_t>, Step>> scored;
    std::vector<Vertex> f;
    for (std::uint32_t e : incidence_[end]) {
      f.clear();
      bool ok = true;
      for (Vertex u : h_.edge(e)) {
        if (u == end) continue;
        if (used_[u]) {
          ok = false;
          break;
        }
        f.push_back(u);
      }
      if (!ok) continue;
      for (Vertex w : f) {
        std::size_t score = 0;
        if (!last) {
          score = free_degree(w, f);
          if (score == 0) continue;  // immediate dead end
        }
        scored.push_back({{score, rng_.next()}, Step{e, w}});
      }
    }
    std::sort(scored.begin(), scored.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Step> out;
    out.reserve(scored.size());
    for (auto& s : scored) out.push_back(s.second);
    return out;
  }

  void push(const Step& s) {
    const Vertex end = path_.back();
    for (Vertex u : h_.edge(s.edge)) {
      if (u == end || u == s.endpoint) continue;
      path_.push_back(u);
      used_[u] = 1;
    }
    path_.push_back(s.endpoint);
    used_[s.endpoint] = 1;
  }

  void pop() {
    for (std::size_t i = 0; i + 1 < r_; ++i) {
      used_[path_.back()] = 0;
      path_.pop_back();
    }
  }

  bool search_from(Vertex start) {
    path_.assign(1, start);
    used_[start] = 1;
    struct Frame {
      std::vector<Step> options;
      std::size_t next = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({candidates(start)});
    while (!stack.empty()) {
      if (path_.size() == target_) return true;
      Frame& top = stack.back();
      if (top.next == top.options.size() || spent_ >= budget_) {
        stack.pop_back();
        if (!stack.empty()) pop();
        continue;
      }
      push(top.options[top.next++]);
      ++spent_;
      if (path_.size() == target_) return true;
      stack.push_back({candidates(path_.back())});
    }
    used_[start] = 0;
    path_.clear();
    return false;
  }

  const Hypergraph& h_;
  std::size_t r_;
  std::size_t target_;
  std::uint64_t budget_;
  std::uint64_t spent_ = 0;
  Rng rng_;
  std::vector<std::vector<std::uint32_t>> incidence_;
  std::vector<char> used_;
  std::vector<Vertex> path_;
};

}  // namespace

std::optional<LoosePath> find_loose_hamilton_path(const Hypergraph& h,
                                                  std::uint64_t budget,
                                                  std::uint64_t seed) {
  return HamiltonSearch(h, budget, seed).run();
}

}  // namespace acq
