#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "acq/error.hpp"
#include "acq/strategies.hpp"
#include "max_flow.hpp"

namespace acq {

namespace {

using Block = std::vector<Vertex>;
using Factor = std::vector<Block>;

std::vector<Factor> round_robin(std::size_t n) {
  std::vector<Factor> out;
  const auto m = static_cast<Vertex>(n - 1);
  for (Vertex round = 0; round < m; ++round) {
    Factor f;
    f.push_back({round, m});
    for (Vertex i = 1; i <= (m - 1) / 2; ++i) {
      const Vertex a = (round + i) % m;
      const Vertex b = (round + m - i) % m;
      f.push_back({std::min(a, b), std::max(a, b)});
    }
    out.push_back(std::move(f));
  }
  return out;
}

// Adds elements 0..N-1 one at a time. Before element j the blocks of each
// factor partition [0, j); a block holding A can still be completed in
// C(N-j-1, s-|A|-1) ways, and a max flow picks which block of every factor
// receives j so those counts stay exact.
std::vector<Factor> flow_construction(std::size_t n, std::size_t s) {
  const std::size_t m = binomial(n - 1, s - 1);
  const std::size_t q = n / s;
  std::vector<Factor> factors(m, Factor(q));

  for (std::size_t j = 0; j < n; ++j) {
    std::map<Block, int> content_id;
    std::vector<const Block*> contents;
    std::vector<std::vector<std::pair<int, std::int64_t>>> counts(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (const Block& b : factors[i]) {
        if (b.size() >= s) continue;
        auto [it, fresh] =
            content_id.try_emplace(b, static_cast<int>(contents.size()));
        if (fresh) contents.push_back(&it->first);
        auto& row = counts[i];
        auto hit = std::find_if(row.begin(), row.end(),
                                [&](const auto& e) { return e.first == it->second; });
        if (hit == row.end()) {
          row.emplace_back(it->second, 1);
        } else {
          ++hit->second;
        }
      }
    }

    const int source = 0;
    const int sink = 1;
    const int factor_base = 2;
    const int content_base = factor_base + static_cast<int>(m);
    detail::MaxFlow flow(content_base + static_cast<int>(contents.size()));
    std::vector<bool> usable(contents.size());
    for (std::size_t c = 0; c < contents.size(); ++c) {
      const std::size_t size = contents[c]->size();
      const std::uint64_t cap = binomial(n - j - 1, s - size - 1);
      usable[c] = cap > 0;
      if (usable[c]) {
        flow.add_edge(content_base + static_cast<int>(c), sink,
                      static_cast<std::int64_t>(cap));
      }
    }
    std::vector<std::vector<std::pair<int, int>>> arcs(m);  // (content, id)
    for (std::size_t i = 0; i < m; ++i) {
      flow.add_edge(source, factor_base + static_cast<int>(i), 1);
      for (auto [c, count] : counts[i]) {
        if (!usable[static_cast<std::size_t>(c)]) continue;
        arcs[i].emplace_back(
            c, flow.add_edge(factor_base + static_cast<int>(i),
                             content_base + c, count));
      }
    }
    if (flow.run(source, sink) != static_cast<std::int64_t>(m)) {
      throw std::logic_error("baranyai: flow step fell short");
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (auto [c, id] : arcs[i]) {
        if (flow.flow_on(id) == 0) continue;
        const Block& want = *contents[static_cast<std::size_t>(c)];
        for (Block& b : factors[i]) {
          if (b == want) {
            b.push_back(static_cast<Vertex>(j));
            break;
          }
        }
        break;
      }
    }
  }
  return factors;
}

}  // namespace

Factorization baranyai(std::size_t N, std::size_t s) {
  if (s == 0 || N == 0 || N % s != 0) {
    throw Error(ErrorKind::kNotDivisible,
                std::to_string(s) + " does not divide " + std::to_string(N));
  }
  Factorization out{N, s, {}};
  if (s == N) {
    Block all(N);
    for (std::size_t v = 0; v < N; ++v) all[v] = static_cast<Vertex>(v);
    out.factors.push_back({all});
  } else if (s == 1) {
    Factor f;
    for (std::size_t v = 0; v < N; ++v) f.push_back({static_cast<Vertex>(v)});
    out.factors.push_back(std::move(f));
  } else if (s == 2) {
    out.factors = round_robin(N);
  } else {
    out.factors = flow_construction(N, s);
  }
  for (Factor& f : out.factors) std::sort(f.begin(), f.end());
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

std::vector<std::string> check_factorization(const Factorization& f) {
  std::vector<std::string> bad;
  const std::size_t n = f.N;
  const std::size_t s = f.s;
  if (s == 0 || n == 0 || s > n) return {"block_size"};

  bool sizes_ok = true;
  bool partition_ok = true;
  for (const Factor& factor : f.factors) {
    std::vector<int> seen(n, 0);
    for (const Block& b : factor) {
      if (b.size() != s) sizes_ok = false;
      for (Vertex v : b) {
        if (v >= n || seen[v]++ > 0) partition_ok = false;
      }
    }
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(n)) {
      partition_ok = false;
    }
  }
  if (!sizes_ok) bad.emplace_back("block_size");
  if (!partition_ok) bad.emplace_back("partition");

  if (sizes_ok) {
    const KSubsetIndex index(n, s);
    std::map<std::uint64_t, int> hits;
    std::vector<std::uint8_t> dense;
    const bool use_dense = index.size() <= (std::uint64_t{1} << 26);
    if (use_dense) dense.assign(index.size(), 0);
    bool once = true;
    for (const Factor& factor : f.factors) {
      for (Block b : factor) {
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end() ||
            b.back() >= n) {
          once = false;
          continue;
        }
        const std::uint64_t rank = index.rank_unchecked(b);
        const int count = use_dense ? ++dense[rank] : ++hits[rank];
        if (count > 1) once = false;
      }
    }
    const std::uint64_t covered =
        use_dense ? static_cast<std::uint64_t>(
                        std::count_if(dense.begin(), dense.end(),
                                      [](std::uint8_t c) { return c > 0; }))
                  : hits.size();
    if (!once || covered != index.size()) bad.emplace_back("cover_exactly_once");
  }
  if (f.factors.size() != binomial(n - 1, s - 1)) {
    bad.emplace_back("factor_count");
  }
  return bad;
}

}  // namespace acq
