#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace acq::detail {

// Dinic's algorithm on integer capacities; flows are integral.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : graph_(static_cast<std::size_t>(nodes)) {}

  // Returns an id for flow_on().
  int add_edge(int from, int to, std::int64_t capacity) {
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({to, capacity});
    graph_[static_cast<std::size_t>(from)].push_back(id);
    edges_.push_back({from, 0});
    graph_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
  }

  std::int64_t flow_on(int edge_id) const {
    return edges_[static_cast<std::size_t>(edge_id ^ 1)].capacity;
  }

  std::int64_t run(int source, int sink) {
    std::int64_t total = 0;
    while (bfs(source, sink)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (std::int64_t pushed =
                 dfs(source, sink, std::numeric_limits<std::int64_t>::max())) {
        total += pushed;
      }
    }
    return total;
  }

 private:
  struct Arc {
    int to;
    std::int64_t capacity;
  };

  bool bfs(int source, int sink) {
    level_.assign(graph_.size(), -1);
    iter_.assign(graph_.size(), 0);
    std::queue<int> q;
    level_[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int id : graph_[static_cast<std::size_t>(u)]) {
        const Arc& a = edges_[static_cast<std::size_t>(id)];
        if (a.capacity > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
          level_[static_cast<std::size_t>(a.to)] =
              level_[static_cast<std::size_t>(u)] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
  }

  std::int64_t dfs(int u, int sink, std::int64_t limit) {
    if (u == sink) return limit;
    auto& it = iter_[static_cast<std::size_t>(u)];
    const auto& out = graph_[static_cast<std::size_t>(u)];
    for (; it < out.size(); ++it) {
      const int id = out[it];
      Arc& a = edges_[static_cast<std::size_t>(id)];
      if (a.capacity <= 0 || level_[static_cast<std::size_t>(a.to)] !=
                                 level_[static_cast<std::size_t>(u)] + 1) {
        continue;
      }
      const std::int64_t pushed = dfs(a.to, sink, std::min(limit, a.capacity));
      if (pushed > 0) {
        a.capacity -= pushed;
        edges_[static_cast<std::size_t>(id ^ 1)].capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> graph_;
  std::vector<Arc> edges_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace acq::detail
