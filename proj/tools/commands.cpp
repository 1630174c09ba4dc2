#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "acq/engine.hpp"
#include "acq/error.hpp"
#include "acq/generators.hpp"
#include "acq/json_io.hpp"
#include "acq/oracle.hpp"
#include "acq/pathfinder.hpp"
#include "acq/rng.hpp"
#include "json.hpp"

namespace acq::cli {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void config_error(const std::string& what) {
  throw Error(ErrorKind::kConfig, what);
}

std::uint64_t parse_uint(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    config_error("not a non-negative integer: '" + s + "'");
  }
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    config_error("integer out of range: '" + s + "'");
  }
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      out.push_back(parse_uint(item));
      continue;
    }
    const auto second = item.find(':', colon + 1);
    const std::uint64_t lo = parse_uint(item.substr(0, colon));
    const std::uint64_t hi = parse_uint(item.substr(
        colon + 1, second == std::string::npos ? std::string::npos : second - colon - 1));
    const std::uint64_t step =
        second == std::string::npos ? 1 : parse_uint(item.substr(second + 1));
    if (step == 0 || hi < lo) config_error("bad range '" + item + "'");
    for (std::uint64_t v = lo; v <= hi; v += step) out.push_back(v);
  }
  return out;
}

Graph graph_of(const Hypergraph& h) {
  if (h.r() != 2) config_error("strategy needs a graph (r = 2)");
  return underlying_graph(h);
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

template <typename T>
std::string opt(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

}  // namespace

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  for (auto v : parse_list(text)) out.push_back(static_cast<std::size_t>(v));
  return out;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) { return parse_list(text); }

void validate(const ExperimentConfig& cfg) {
  if (cfg.model != "gnp" && cfg.model != "gnm-process" && cfg.model != "hrnp") {
    config_error("unknown model '" + cfg.model + "'");
  }
  if (cfg.seeds.empty()) config_error("seed list is empty");
  if (cfg.n.empty()) config_error("n list is empty");
  for (auto n : cfg.n) {
    if (n < 2) config_error("n must be at least 2");
  }
  if (cfg.model == "hrnp") {
    if (cfg.r < 2) config_error("r must be at least 2");
    if (cfg.k < 2 || cfg.k > cfg.r) config_error("k must lie in [2, r]");
    for (auto n : cfg.n) {
      if (n < cfg.r) config_error("n must be at least r");
    }
  } else if (cfg.r != 2 || cfg.k != 2) {
    config_error("graph models need r = 2 and k = 2");
  }
  if (cfg.model != "gnm-process") {
    if (cfg.p && cfg.omega) config_error("give at most one of --p and --omega");
    if (!cfg.p && !cfg.omega && cfg.model == "gnp") config_error("gnp needs --p or --omega");
    if (cfg.p && (*cfg.p < 0 || *cfg.p > 1)) config_error("p must lie in [0, 1]");
    if (cfg.omega && !(*cfg.omega > 0)) config_error("omega must be positive");
  }
  static const std::set<std::string> strategies{"auto", "good-tree", "loose-path",
                                                "sparse", "dense"};
  if (!strategies.count(cfg.strategy)) config_error("unknown strategy '" + cfg.strategy + "'");
  if (cfg.strategy == "dense" && !cfg.omega) config_error("dense strategy needs --omega");
  if (!(cfg.delta > 0 && cfg.delta < 1)) config_error("delta must lie in (0, 1)");
  if (!(cfg.c_cut > 0)) config_error("c-cut must be positive");
}

double edge_probability(const ExperimentConfig& cfg, std::size_t n) {
  if (cfg.p) return *cfg.p;
  const double nn = static_cast<double>(n);
  if (!cfg.omega) {
    return std::min(1.0, long_path_constant(cfg.r, cfg.delta) /
                             std::pow(nn, static_cast<double>(cfg.r - 1)));
  }
  const double p = *cfg.omega * std::log(nn) / std::pow(nn, static_cast<double>(cfg.r - 1));
  return std::min(1.0, p);
}

Hypergraph named_instance(const std::string& name) {
  if (name.size() < 2) config_error("unknown instance '" + name + "'");
  const std::size_t size = static_cast<std::size_t>(parse_uint(name.substr(1)));
  switch (name[0]) {
    case 'K': return Hypergraph(Graph::complete(size));
    case 'P': return Hypergraph(Graph::path(size));
    case 'C': return Hypergraph(Graph::cycle(size));
    case 'S': return Hypergraph(Graph::star(size));
    default: config_error("unknown instance '" + name + "'");
  }
}

StrategyTrace build_strategy(const Hypergraph& h, const std::string& strategy,
                             std::size_t k, std::uint64_t seed,
                             const ExperimentConfig& cfg) {
  std::string which = strategy;
  if (which == "auto") which = h.r() == 2 && k == 2 ? "good-tree" : "sparse";
  if (which == "good-tree") {
    if (k != 2) config_error("good-tree strategy needs k = 2");
    return good_spanning_tree_strategy(graph_of(h), {64, seed});
  }
  if (which == "loose-path") {
    const auto path = find_loose_hamilton_path(h, 1'000'000, seed);
    if (!path || path->length() != h.n()) {
      throw Error(ErrorKind::kPathUnavailable, "no spanning loose path found");
    }
    StrategyTrace out = loose_path_strategy(*path, k, seed);
    out.meta["path_length"] = static_cast<double>(path->length());
    return out;
  }
  if (which == "sparse") return sparse_hypergraph_strategy(h, k, seed);
  if (which == "dense") {
    if (!cfg.omega) config_error("dense strategy needs --omega");
    return dense_hypergraph_strategy(h, k, *cfg.omega, cfg.c_cut, seed);
  }
  config_error("unknown strategy '" + strategy + "'");
}

// ----------------------------------------------------------------- bench

BenchRow bench_row(const ExperimentConfig& cfg, std::size_t n, std::uint64_t seed) {
  BenchRow row;
  row.model = cfg.model;
  row.n = n;
  row.r = cfg.r;
  row.k = cfg.k;
  row.seed = seed;
  if (cfg.model != "gnm-process") {
    row.p_or_omega = cfg.omega ? *cfg.omega : edge_probability(cfg, n);
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    Hypergraph h;
    if (cfg.model == "gnm-process") {
      const EdgeSequence seq = gen_process(n, seed);
      row.M = connectivity_time(seq);
      h = Hypergraph(snapshot(seq, *row.M));
    } else if (cfg.model == "gnp") {
      h = Hypergraph(gen_gnp(n, edge_probability(cfg, n), seed));
    } else {
      h = gen_hrnp(n, cfg.r, edge_probability(cfg, n), seed);
    }
    if (h.edge_count() > 0) row.lower_bound = lower_bound(n, h.edge_count(), cfg.r, cfg.k);
    const StrategyTrace trace = build_strategy(h, cfg.strategy, cfg.k, seed, cfg);
    if (auto it = trace.meta.find("dfs_spine_length"); it != trace.meta.end()) {
      row.path_len = static_cast<std::size_t>(it->second);
      row.leftover = static_cast<std::size_t>(trace.meta.at("builder_leftover"));
    } else if (auto pl = trace.meta.find("path_length"); pl != trace.meta.end()) {
      row.path_len = static_cast<std::size_t>(pl->second);
      row.leftover = n - *row.path_len;
    } else if (auto sp = trace.meta.find("sub_path_length"); sp != trace.meta.end()) {
      row.path_len = n - static_cast<std::size_t>(trace.meta.at("passive"));
      row.leftover = static_cast<std::size_t>(trace.meta.at("passive"));
    }
    const TraceReport report = run_trace(h, cfg.k, trace.rounds);
    row.rounds = trace.rounds.size();
    row.complete = report.completed;
    if (!report.completed) row.error = "trace did not complete";
  } catch (const Error& e) {
    row.error = e.what();
  }
  row.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start).count();
  return row;
}

std::string format_row(const BenchRow& row) {
  std::ostringstream out;
  out << row.model << ',' << row.n << ',' << fmt_double(row.p_or_omega) << ','
      << row.r << ',' << row.k << ',' << row.seed << ',' << opt(row.M) << ','
      << opt(row.path_len) << ',' << opt(row.leftover) << ',' << opt(row.rounds)
      << ',' << opt(row.lower_bound) << ',' << fmt_double(row.runtime_ms) << ','
      << (row.complete ? "true" : "false") << ',' << csv_escape(row.error);
  return out.str();
}

std::size_t worker_count() {
  std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("ACQ_LAB_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(cap, &end, 10);
    if (end != cap && *end == '\0' && v > 0) workers = std::min<std::size_t>(workers, v);
  }
  return workers;
}

std::vector<BenchRow> run_bench(const ExperimentConfig& cfg) {
  validate(cfg);
  std::vector<std::pair<std::size_t, std::uint64_t>> jobs;
  for (auto n : cfg.n) {
    for (auto s : cfg.seeds) jobs.emplace_back(n, s);
  }
  std::sort(jobs.begin(), jobs.end());
  jobs.erase(std::unique(jobs.begin(), jobs.end()), jobs.end());
  std::vector<BenchRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      rows[i] = bench_row(cfg, jobs[i].first, jobs[i].second);
    }
  };
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(1, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& row : rows) out += format_row(row) + "\n";
  return out;
}

// ------------------------------------------------------------------- gen

std::vector<std::pair<std::string, std::string>> generate(const ExperimentConfig& cfg) {
  validate(cfg);
  if (cfg.out.empty()) config_error("gen needs --out <directory>");
  std::error_code ec;
  std::filesystem::create_directories(cfg.out, ec);
  if (ec) throw Error(ErrorKind::kIo, "cannot create " + cfg.out + ": " + ec.message());
  std::vector<std::pair<std::string, std::string>> written;
  for (auto n : cfg.n) {
    for (auto seed : cfg.seeds) {
      const std::string base = cfg.out + "/" + cfg.model + "_n" + std::to_string(n) +
                               "_s" + std::to_string(seed);
      if (cfg.model == "gnm-process") {
        const EdgeSequence seq = gen_process(n, seed);
        const std::size_t m = connectivity_time(seq);
        write_file(base + ".json", to_json(seq));
        written.emplace_back(base + ".json", "M=" + std::to_string(m));
      } else if (cfg.model == "gnp") {
        const Graph g = gen_gnp(n, edge_probability(cfg, n), seed);
        write_file(base + ".json", to_json(g));
        written.emplace_back(base + ".json", "edges=" + std::to_string(g.edge_count()));
      } else {
        const Hypergraph h = gen_hrnp(n, cfg.r, edge_probability(cfg, n), seed);
        write_file(base + ".json", to_json(h));
        written.emplace_back(base + ".json", "edges=" + std::to_string(h.edge_count()));
      }
    }
  }
  return written;
}

// ------------------------------------------------------------------- run

RunOutcome run_structure(const Hypergraph& h, const ExperimentConfig& cfg,
                         std::uint64_t seed, std::vector<Matching>* trace_out) {
  const StrategyTrace trace = build_strategy(h, cfg.strategy, cfg.k, seed, cfg);
  const TraceReport report = run_trace(h, cfg.k, trace.rounds);
  Json j;
  j["rounds"] = trace.rounds.size();
  j["complete"] = report.completed;
  if (h.edge_count() > 0) {
    j["lower_bound"] = lower_bound(h.n(), h.edge_count(), h.r(), cfg.k);
  } else {
    j["lower_bound"] = nullptr;
  }
  j["completion_round"] =
      report.completion_round ? Json(*report.completion_round) : Json(nullptr);
  j["constants"] = Json::object();
  for (const auto& [key, value] : trace.meta) j["constants"][key] = value;
  if (trace_out != nullptr) *trace_out = trace.rounds;
  return {j.dump(), report.completed};
}

std::string oracle_report(const std::string& instance, const Hypergraph& h,
                          std::size_t k) {
  Json j;
  j["instance"] = instance;
  j["k"] = k;
  j["exact"] = exact_ac(h, k);
  j["lower_bound"] = lower_bound(h.n(), h.edge_count(), h.r(), k);
  return j.dump();
}

// ---------------------------------------------------------------- verify

std::vector<Graph> connected_graphs_up_to_iso(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::pair<Vertex, Vertex>, std::size_t> pair_index;
  for (std::size_t i = 0; i < pairs.size(); ++i) pair_index[pairs[i]] = i;

  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::uint64_t canon = mask;
    for (const auto& p : perms) {
      std::uint64_t image = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1U) {
          image |= std::uint64_t{1} << pair_index[make_edge(p[pairs[i].first], p[pairs[i].second])];
        }
      }
      canon = std::min(canon, image);
    }
    if (!seen.insert(canon).second) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (canon >> i & 1U) edges.push_back(pairs[i]);
    }
    Graph g(n, edges);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<CheckResult> verify(const std::optional<std::string>& fixture) {
  std::vector<CheckResult> results;
  auto check = [&](const std::string& name, auto&& body) {
    CheckResult r{name, true, {}};
    try {
      body(r);
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  };

  check("oracle_table", [](CheckResult& r) {
    const std::vector<std::pair<std::string, std::size_t>> table{
        {"P3", 1}, {"C4", 1}, {"S3", 2}, {"K4", 0}};
    for (const auto& [name, want] : table) {
      const std::size_t got = exact_ac(named_instance(name), 2);
      if (got != want) {
        r.ok = false;
        r.detail += name + "=" + std::to_string(got) + " (want " + std::to_string(want) + ") ";
      }
    }
  });

  check("oracle_dominance_n_le_5", [](CheckResult& r) {
    std::size_t graphs = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
      for (const Graph& g : connected_graphs_up_to_iso(n)) {
        ++graphs;
        const Hypergraph h(g);
        const std::uint64_t lb = lower_bound(n, g.edge_count(), 2, 2);
        const std::size_t exact = exact_ac(h, 2);
        const StrategyTrace t = good_spanning_tree_strategy(g, {64, 0});
        const bool done = run_trace(h, 2, t.rounds).completed;
        if (lb > exact || exact > t.rounds.size() || !done) {
          r.ok = false;
          r.detail = "graph " + to_json(g) + ": lb=" + std::to_string(lb) +
                     " exact=" + std::to_string(exact) +
                     " strategy=" + std::to_string(t.rounds.size());
          return;
        }
      }
    }
    r.detail = std::to_string(graphs) + " graphs";
  });

  check("factorizations", [](CheckResult& r) {
    std::size_t count = 0;
    for (std::size_t big_n = 1; big_n <= 24; ++big_n) {
      for (std::size_t s = 1; s <= big_n; ++s) {
        if (big_n % s != 0 || binomial(big_n, s) > 20'000) continue;
        const auto bad = check_factorization(baranyai(big_n, s));
        ++count;
        if (!bad.empty()) {
          r.ok = false;
          r.detail = "N=" + std::to_string(big_n) + " s=" + std::to_string(s) + ": " + bad.front();
          return;
        }
      }
    }
    r.detail = std::to_string(count) + " factorizations";
  });

  if (fixture) {
    check("factorization_fixture", [&](CheckResult& r) {
      const auto bad = check_factorization(factorization_from_json(read_file(*fixture)));
      if (!bad.empty()) {
        r.ok = false;
        for (const auto& b : bad) r.detail += (r.detail.empty() ? "" : ",") + b;
      }
    });
  }

  check("ledger_monotone_fuzz", [](CheckResult& r) {
    Rng rng(2024);
    std::size_t applied = 0;
    for (std::size_t trial = 0; trial < 40; ++trial) {
      const std::size_t n = 6 + rng.uniform_below(7);
      const std::size_t rr = 2 + rng.uniform_below(2);
      const std::size_t k = 2 + rng.uniform_below(rr - 1);
      const Hypergraph h = gen_hrnp(n, rr, rr == 2 ? 0.5 : 0.2, rng.next());
      const auto edges = underlying_graph(h).edges();
      SimState state(h, k);
      for (std::size_t step = 0; step < 250; ++step) {
        std::vector<Edge> shuffled = edges;
        rng.shuffle(std::span(shuffled));
        std::vector<char> used(n, 0);
        Matching m;
        for (auto [a, b] : shuffled) {
          if (used[a] || used[b] || !rng.bernoulli(0.5)) continue;
          used[a] = used[b] = 1;
          m.swaps.emplace_back(a, b);
        }
        const auto before = state.ledger().count();
        const AcquaintanceLedger snapshot_ledger = state.ledger();
        state.apply(m);
        ++applied;
        if (state.ledger().count() < before || !snapshot_ledger.subset_of(state.ledger())) {
          r.ok = false;
          r.detail = "ledger shrank";
          return;
        }
        const Vertex a = static_cast<Vertex>(rng.uniform_below(n));
        const Vertex b = static_cast<Vertex>(rng.uniform_below(n));
        if (a != b && !state.legal_swap(a, b)) {
          const std::vector<Vertex> before_pos(state.positions().begin(),
                                               state.positions().end());
          bool rejected = false;
          try {
            state.apply(Matching{{make_edge(a, b)}});
          } catch (const Error& e) {
            rejected = e.kind() == ErrorKind::kIllegalSwap;
          }
          if (!rejected || !std::equal(before_pos.begin(), before_pos.end(),
                                       state.positions().begin())) {
            r.ok = false;
            r.detail = "illegal swap accepted";
            return;
          }
        }
      }
      std::vector<char> hit(n, 0);
      for (Vertex v = 0; v < n; ++v) hit[state.agent_at(v)]++;
      if (std::count(hit.begin(), hit.end(), 1) != static_cast<long>(n)) {
        r.ok = false;
        r.detail = "positions are not a bijection";
        return;
      }
    }
    r.detail = std::to_string(applied) + " matchings";
  });
  return results;
}

}  // namespace acq::cli
