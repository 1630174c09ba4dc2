#include "routing.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "acq/error.hpp"
#include "acq/strategies.hpp"

namespace acq {
namespace detail {

LocalTree LocalTree::path(std::size_t m) {
  LocalTree t;
  t.parent.resize(m);
  t.order.resize(m);
  t.children.assign(m, {});
  for (std::uint32_t i = 0; i < m; ++i) {
    t.parent[i] = i == 0 ? 0 : i - 1;
    t.order[i] = i;
    if (i + 1 < m) t.children[i].push_back(i + 1);
  }
  return t;
}

std::vector<LocalRound> route_tokens(const LocalTree& tree,
                                     std::vector<char> token,
                                     const std::vector<char>& target) {
  const std::size_t m = tree.parent.size();
  std::vector<std::uint32_t> depth(m, 0);
  for (std::uint32_t v : tree.order) {
    if (tree.parent[v] != v) depth[v] = depth[tree.parent[v]] + 1;
  }
  // demand[v] = tokens minus targets in the subtree of v: positive means
  // tokens must leave upward across (v, parent), negative means enter.
  std::vector<std::int64_t> demand(m, 0);
  for (auto it = tree.order.rbegin(); it != tree.order.rend(); ++it) {
    const std::uint32_t v = *it;
    demand[v] += (token[v] ? 1 : 0) - (target[v] ? 1 : 0);
    if (tree.parent[v] != v) demand[tree.parent[v]] += demand[v];
  }
  std::int64_t potential = 0;
  std::vector<std::uint32_t> tokens;
  for (std::uint32_t v = 0; v < m; ++v) {
    if (tree.parent[v] != v) potential += std::abs(demand[v]);
    if (token[v]) tokens.push_back(v);
  }

  std::vector<LocalRound> rounds;
  std::vector<std::uint32_t> used(m, 0);
  std::uint32_t stamp = 0;
  while (potential > 0) {
    ++stamp;
    std::sort(tokens.begin(), tokens.end(), [&](std::uint32_t a, std::uint32_t b) {
      return depth[a] != depth[b] ? depth[a] > depth[b] : a < b;
    });
    LocalRound round;
    for (std::uint32_t& u : tokens) {
      if (used[u] == stamp) continue;
      std::uint32_t to = u;
      const std::uint32_t p = tree.parent[u];
      if (p != u && demand[u] > 0 && !token[p] && used[p] != stamp) {
        to = p;
        --demand[u];
      } else {
        for (std::uint32_t c : tree.children[u]) {
          if (demand[c] < 0 && !token[c] && used[c] != stamp) {
            to = c;
            ++demand[c];
            break;
          }
        }
      }
      if (to == u) continue;
      used[u] = used[to] = stamp;
      round.emplace_back(std::min(u, to), std::max(u, to));
      u = to;
    }
    if (round.empty()) throw std::logic_error("route_tokens: no progress");
    for (auto [a, b] : round) std::swap(token[a], token[b]);
    potential -= static_cast<std::int64_t>(round.size());
    rounds.push_back(std::move(round));
  }
  return rounds;
}

std::vector<LocalRound> route_permutation_on_path(std::vector<std::size_t> dest) {
  const std::size_t m = dest.size();
  std::vector<LocalRound> out;
  std::vector<std::pair<std::size_t, std::size_t>> segments{{0, m}};
  while (!segments.empty()) {
    std::vector<std::pair<std::size_t, std::size_t>> next;
    std::vector<LocalRound> level;
    for (auto [lo, hi] : segments) {
      const std::size_t len = hi - lo;
      if (len < 2) continue;
      const std::size_t mid = lo + (len + 1) / 2;
      std::vector<char> token(len), target(len);
      for (std::size_t i = 0; i < len; ++i) {
        token[i] = dest[lo + i] < mid;
        target[i] = lo + i < mid;
      }
      if (token != target) {
        const auto rounds = route_tokens(LocalTree::path(len), token, target);
        if (level.size() < rounds.size()) level.resize(rounds.size());
        for (std::size_t t = 0; t < rounds.size(); ++t) {
          for (auto [a, b] : rounds[t]) {
            level[t].emplace_back(static_cast<std::uint32_t>(lo + a),
                                  static_cast<std::uint32_t>(lo + b));
          }
        }
      }
      next.emplace_back(lo, mid);
      next.emplace_back(mid, hi);
    }
    for (const LocalRound& round : level) {
      for (auto [a, b] : round) std::swap(dest[a], dest[b]);
      out.push_back(round);
    }
    segments = std::move(next);
  }
  return out;
}

}  // namespace detail

std::vector<Matching> route_on_tree(const Graph& tree,
                                    std::span<const Vertex> sources,
                                    std::span<const Vertex> targets) {
  if (sources.size() != targets.size()) {
    throw Error(ErrorKind::kSizeMismatch,
                std::to_string(sources.size()) + " sources vs " +
                    std::to_string(targets.size()) + " targets");
  }
  const std::size_t n = tree.n();
  if (n == 0 || tree.edge_count() != n - 1 || !tree.is_connected()) {
    throw Error(ErrorKind::kNotATree, "graph is not a spanning tree");
  }
  std::vector<char> token(n, 0), target(n, 0);
  auto mark = [&](std::span<const Vertex> vs, std::vector<char>& flags,
                  const char* what) {
    for (Vertex v : vs) {
      if (v >= n || flags[v]) {
        throw Error(ErrorKind::kSizeMismatch,
                    std::string(what) + " must be distinct vertices of the tree");
      }
      flags[v] = 1;
    }
  };
  mark(sources, token, "sources");
  mark(targets, target, "targets");
  if (token == target) return {};

  detail::LocalTree local;
  local.parent.assign(n, 0);
  local.children.assign(n, {});
  const auto adj = tree.adjacency();
  std::vector<char> seen(n, 0);
  std::queue<std::uint32_t> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    const std::uint32_t u = q.front();
    q.pop();
    local.order.push_back(u);
    for (Vertex w : adj[u]) {
      if (seen[w]) continue;
      seen[w] = 1;
      local.parent[w] = u;
      local.children[u].push_back(w);
      q.push(w);
    }
  }

  std::vector<Matching> out;
  for (const auto& round : detail::route_tokens(local, token, target)) {
    Matching m;
    for (auto [a, b] : round) m.swaps.push_back(make_edge(a, b));
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matching> route_on_loose_path(const LoosePath& path,
                                          std::span<const std::size_t> target) {
  const std::size_t len = path.length();
  if (target.size() != len) {
    throw Error(ErrorKind::kInvalidTarget,
                "target has " + std::to_string(target.size()) +
                    " entries for a path of length " + std::to_string(len));
  }
  std::vector<char> hit(len, 0);
  for (std::size_t t : target) {
    if (t >= len || hit[t]) {
      throw Error(ErrorKind::kInvalidTarget, "target is not a bijection");
    }
    hit[t] = 1;
  }
  const auto& ord = path.ordering();
  std::vector<Matching> out;
  for (const auto& round : detail::route_permutation_on_path(
           std::vector<std::size_t>(target.begin(), target.end()))) {
    Matching m;
    for (auto [a, b] : round) m.swaps.push_back(make_edge(ord[a], ord[b]));
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace acq
