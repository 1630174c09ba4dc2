#include "acq/types.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "acq/error.hpp"

namespace acq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidSubset: return "InvalidSubset";
    case ErrorKind::kInvalidStructure: return "InvalidStructure";
    case ErrorKind::kInvalidProbability: return "InvalidProbability";
    case ErrorKind::kInvalidUniformity: return "InvalidUniformity";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kInvalidDelta: return "InvalidDelta";
    case ErrorKind::kInvalidSpine: return "InvalidSpine";
    case ErrorKind::kInvalidArity: return "InvalidArity";
    case ErrorKind::kNotAMatching: return "NotAMatching";
    case ErrorKind::kIllegalSwap: return "IllegalSwap";
    case ErrorKind::kSizeMismatch: return "SizeMismatch";
    case ErrorKind::kNotATree: return "NotATree";
    case ErrorKind::kInvalidTree: return "InvalidTree";
    case ErrorKind::kNotDivisible: return "NotDivisible";
    case ErrorKind::kInvalidTarget: return "InvalidTarget";
    case ErrorKind::kStructuralAssumptionViolated:
      return "StructuralAssumptionViolated";
    case ErrorKind::kPathUnavailable: return "PathUnavailable";
    case ErrorKind::kUnacquaintable: return "Unacquaintable";
    case ErrorKind::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::kCapacityExceeded: return "CapacityExceeded";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kConfig: return "ConfigError";
    case ErrorKind::kIo: return "IoError";
  }
  return "Unknown";
}

__extension__ typedef unsigned __int128 Wide;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(result);
}

// ---------------------------------------------------------------- Graph

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  for (auto& e : edges) {
    if (e.first == e.second) {
      throw Error(ErrorKind::kInvalidStructure,
                  "self-loop at vertex " + std::to_string(e.first));
    }
    if (e.first >= n || e.second >= n) {
      throw Error(ErrorKind::kInvalidStructure,
                  "edge endpoint out of range for n=" + std::to_string(n));
    }
    e = make_edge(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph Graph::cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, std::move(edges));
}

Graph Graph::star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, std::move(edges));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const auto& [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  const auto adj = adjacency();
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n_;
}

// ----------------------------------------------------------- Hypergraph

Hypergraph::Hypergraph(std::size_t n, std::size_t r,
                       std::vector<std::vector<Vertex>> edges)
    : n_(n), r_(r) {
  if (r < 2) {
    throw Error(ErrorKind::kInvalidUniformity, "uniformity must be >= 2");
  }
  for (auto& e : edges) {
    if (e.size() != r) {
      throw Error(ErrorKind::kInvalidStructure,
                  "edge of size " + std::to_string(e.size()) +
                      " in a " + std::to_string(r) + "-uniform hypergraph");
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorKind::kInvalidStructure, "edge with repeated vertex");
    }
    if (e.back() >= n) {
      throw Error(ErrorKind::kInvalidStructure,
                  "edge vertex out of range for n=" + std::to_string(n));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  flat_.reserve(edges.size() * r);
  for (const auto& e : edges) flat_.insert(flat_.end(), e.begin(), e.end());
}

Hypergraph::Hypergraph(const Graph& g) : n_(g.n()), r_(2) {
  flat_.reserve(g.edge_count() * 2);
  for (const auto& [u, v] : g.edges()) {
    flat_.push_back(u);
    flat_.push_back(v);
  }
}

std::vector<std::vector<Vertex>> Hypergraph::edge_list() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i < edge_count(); ++i) {
    auto e = edge(i);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

bool Hypergraph::has_edge(std::span<const Vertex> sorted_edge) const {
  if (sorted_edge.size() != r_) return false;
  std::size_t lo = 0;
  std::size_t hi = edge_count();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto e = edge(mid);
    if (std::lexicographical_compare(e.begin(), e.end(), sorted_edge.begin(),
                                     sorted_edge.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < edge_count() &&
         std::equal(sorted_edge.begin(), sorted_edge.end(), edge(lo).begin());
}

std::vector<std::vector<std::uint32_t>> Hypergraph::incidence() const {
  std::vector<std::vector<std::uint32_t>> inc(n_);
  for (std::size_t i = 0; i < edge_count(); ++i) {
    for (Vertex v : edge(i)) inc[v].push_back(static_cast<std::uint32_t>(i));
  }
  return inc;
}

Graph underlying_graph(const Hypergraph& h) {
  std::vector<Edge> pairs;
  pairs.reserve(h.edge_count() * h.r() * (h.r() - 1) / 2);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto e = h.edge(i);
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b)
        pairs.emplace_back(e[a], e[b]);
  }
  return Graph(h.n(), std::move(pairs));
}

// ------------------------------------------------------------ LoosePath

LoosePath::LoosePath(std::vector<Vertex> ordering, std::size_t r)
    : ordering_(std::move(ordering)), r_(r) {
  if (r < 2) {
    throw Error(ErrorKind::kInvalidUniformity, "uniformity must be >= 2");
  }
  if (!ordering_.empty() && (ordering_.size() - 1) % (r - 1) != 0) {
    throw Error(ErrorKind::kInvalidStructure,
                "loose path length " + std::to_string(ordering_.size()) +
                    " is not k(r-1)+1 for r=" + std::to_string(r));
  }
  std::vector<Vertex> sorted = ordering_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::kInvalidStructure, "loose path repeats a vertex");
  }
}

bool LoosePath::window_in_one_edge(std::size_t lo, std::size_t hi) const {
  if (hi >= ordering_.size() || lo > hi || edge_count() == 0) return false;
  const std::size_t step = r_ - 1;
  const std::size_t i = std::min(lo / step, edge_count() - 1);
  return hi <= i * step + step;
}

std::vector<std::vector<Vertex>> loose_path_edges(const LoosePath& path) {
  std::vector<std::vector<Vertex>> out;
  out.reserve(path.edge_count());
  for (std::size_t i = 0; i < path.edge_count(); ++i) {
    const auto [lo, hi] = path.edge_window(i);
    out.emplace_back(path.ordering().begin() + static_cast<std::ptrdiff_t>(lo),
                     path.ordering().begin() + static_cast<std::ptrdiff_t>(hi) + 1);
  }
  return out;
}

// ------------------------------------------------------------- GoodTree

Graph GoodTree::tree() const {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < spine.size(); ++i)
    edges.emplace_back(spine[i], spine[i + 1]);
  for (const auto& [pos, u] : heavy) edges.emplace_back(spine.at(pos), u);
  for (const auto& [v, to] : light) edges.emplace_back(v, to);
  for (const auto& [v, to] : pendant) edges.emplace_back(v, to);
  return Graph(n, std::move(edges));
}

void validate_good_tree(const GoodTree& t, const Graph* host) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorKind::kInvalidTree, why);
  };
  if (t.spine.empty()) fail("empty spine");
  enum class Role : std::uint8_t { kNone, kSpine, kHeavy, kLight, kPendant };
  std::vector<Role> role(t.n, Role::kNone);
  auto claim = [&](Vertex v, Role r) {
    if (v >= t.n) fail("vertex out of range");
    if (role[v] != Role::kNone) fail("vertex " + std::to_string(v) +
                                     " appears twice");
    role[v] = r;
  };
  for (Vertex v : t.spine) claim(v, Role::kSpine);
  for (const auto& [pos, u] : t.heavy) {
    if (pos >= t.spine.size()) fail("heavy attached past spine end");
    claim(u, Role::kHeavy);
  }
  for (const auto& [v, to] : t.light) claim(v, Role::kLight);
  for (const auto& [v, to] : t.light) {
    if (to >= t.n || (role[to] != Role::kSpine && role[to] != Role::kHeavy)) {
      fail("light vertex " + std::to_string(v) +
           " not attached to spine or heavy vertex");
    }
  }
  for (const auto& [v, to] : t.pendant) claim(v, Role::kPendant);
  for (const auto& [v, to] : t.pendant) {
    if (to >= t.n || role[to] != Role::kLight) {
      fail("pendant vertex " + std::to_string(v) +
           " not attached to a light vertex");
    }
  }
  for (Vertex v = 0; v < t.n; ++v) {
    if (role[v] == Role::kNone) {
      fail("vertex " + std::to_string(v) + " not covered by the tree");
    }
  }
  const Graph g = t.tree();
  if (g.edge_count() != t.n - 1 || !g.is_connected()) fail("not a tree");
  if (host != nullptr) {
    if (host->n() != t.n) fail("host size mismatch");
    for (const auto& [u, v] : g.edges()) {
      if (!host->has_edge(u, v)) {
        fail("tree edge {" + std::to_string(u) + "," + std::to_string(v) +
             "} missing from host graph");
      }
    }
  }
}

// ------------------------------------------------------------- Matching

bool Matching::is_valid(std::size_t n) const {
  std::set<Vertex> used;
  for (const auto& [a, b] : swaps) {
    if (a == b || a >= n || b >= n) return false;
    if (!used.insert(a).second || !used.insert(b).second) return false;
  }
  return true;
}

// --------------------------------------------------------- KSubsetIndex

KSubsetIndex::KSubsetIndex(std::size_t n, std::size_t k)
    : n_(n), k_(k), size_(binomial(n, k)), table_((n + 1) * (k + 1), 0) {
  for (std::size_t m = 0; m <= n; ++m) {
    table_[m * (k + 1)] = 1;
    for (std::size_t j = 1; j <= k && j <= m; ++j) {
      const std::uint64_t a = table_[(m - 1) * (k + 1) + j - 1];
      const std::uint64_t b = table_[(m - 1) * (k + 1) + j];
      table_[m * (k + 1) + j] = a + b;
    }
  }
}

std::uint64_t KSubsetIndex::rank(std::span<const Vertex> subset) const {
  if (subset.size() != k_ || k_ > n_) {
    throw Error(ErrorKind::kInvalidSubset,
                "expected a " + std::to_string(k_) + "-subset of [0," +
                    std::to_string(n_) + ")");
  }
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= n_ || (i > 0 && subset[i - 1] >= subset[i])) {
      throw Error(ErrorKind::kInvalidSubset,
                  "subset must be strictly increasing with elements < " +
                      std::to_string(n_));
    }
  }
  if (k_ == 0) return 0;
  return rank_unchecked(subset);
}

std::vector<Vertex> KSubsetIndex::unrank(std::uint64_t rank) const {
  if (rank >= size_) {
    throw Error(ErrorKind::kInvalidSubset,
                "rank " + std::to_string(rank) + " out of range");
  }
  std::vector<Vertex> out(k_);
  std::uint64_t colex = size_ - 1 - rank;
  std::size_t upper = n_;
  for (std::size_t i = k_; i-- > 0;) {
    // Largest d < upper with C(d, i+1) <= colex.
    std::size_t d = upper - 1;
    while (choose(d, i + 1) > colex) --d;
    colex -= choose(d, i + 1);
    out[k_ - 1 - i] = static_cast<Vertex>(n_ - 1 - d);
    upper = d;
  }
  return out;
}

std::uint64_t rank_k_subset(std::span<const Vertex> subset, std::size_t n,
                            std::size_t k) {
  return KSubsetIndex(n, k).rank(subset);
}

std::vector<Vertex> unrank_k_subset(std::uint64_t rank, std::size_t n,
                                    std::size_t k) {
  return KSubsetIndex(n, k).unrank(rank);
}

}  // namespace acq
