#include "acq/generators.hpp"

#include <numeric>
#include <string>

#include "acq/error.hpp"
#include "acq/rng.hpp"

namespace acq {
namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kInvalidProbability,
                "p=" + std::to_string(p) + " is outside [0,1]");
  }
}

// Advances a sorted r-subset of [0, n) to its lexicographic successor.
bool next_combination(std::vector<Vertex>& c, std::size_t n) {
  const std::size_t r = c.size();
  std::size_t i = r;
  while (i > 0 && c[i - 1] == n - r + i - 1) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
  return true;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p);
  if (n == 0) {
    throw Error(ErrorKind::kInvalidStructure, "n must be >= 1");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

Hypergraph gen_hrnp(std::size_t n, std::size_t r, double p,
                    std::uint64_t seed) {
  check_probability(p);
  if (r < 2 || r > n) {
    throw Error(ErrorKind::kInvalidUniformity,
                "need 2 <= r <= n, got r=" + std::to_string(r) +
                    " n=" + std::to_string(n));
  }
  Rng rng(seed);
  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> c(r);
  std::iota(c.begin(), c.end(), 0);
  do {
    if (rng.bernoulli(p)) edges.push_back(c);
  } while (next_combination(c, n));
  return Hypergraph(n, r, std::move(edges));
}

EdgeSequence gen_process(std::size_t n, std::uint64_t seed) {
  if (n < 2) {
    throw Error(ErrorKind::kInvalidStructure, "edge process needs n >= 2");
  }
  EdgeSequence seq;
  seq.n = n;
  seq.order.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) seq.order.emplace_back(u, v);
  Rng rng(seed);
  rng.shuffle(std::span<Edge>(seq.order));
  return seq;
}

std::size_t connectivity_time(const EdgeSequence& seq) {
  if (seq.n <= 1) return 0;
  DisjointSets sets(seq.n);
  std::size_t components = seq.n;
  for (std::size_t m = 0; m < seq.order.size(); ++m) {
    if (sets.unite(seq.order[m].first, seq.order[m].second) &&
        --components == 1) {
      return m + 1;
    }
  }
  throw Error(ErrorKind::kInvalidStructure,
              "edge sequence never connects the vertex set");
}

Graph snapshot(const EdgeSequence& seq, std::size_t m) {
  if (m > seq.order.size()) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "m=" + std::to_string(m) + " exceeds N=" +
                    std::to_string(seq.order.size()));
  }
  return Graph(seq.n, std::vector<Edge>(seq.order.begin(),
                                        seq.order.begin() +
                                            static_cast<std::ptrdiff_t>(m)));
}

}  // namespace acq
