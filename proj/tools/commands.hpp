#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acq/strategies.hpp"
#include "acq/types.hpp"

namespace acq::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvariant = 1,
  kExitConfig = 2,
  kExitIo = 3,
};

struct ExperimentConfig {
  std::string model = "gnp";  // gnp | gnm-process | hrnp
  std::vector<std::size_t> n;
  std::optional<double> p;
  std::optional<double> omega;  // p = omega * ln n / n^(r-1)
  std::size_t r = 2;
  std::size_t k = 2;
  std::vector<std::uint64_t> seeds;
  std::string strategy = "auto";  // auto | good-tree | loose-path | sparse | dense
  double delta = 0.5;
  double c_cut = 4.0;
  std::string out;
};

// "200,500,1000" or "lo:hi[:step]" (inclusive). Throws kConfig.
std::vector<std::size_t> parse_sizes(const std::string& text);
std::vector<std::uint64_t> parse_seeds(const std::string& text);

// Throws kConfig naming the offending field.
void validate(const ExperimentConfig& cfg);

// Edge probability for one n under the config's p / omega schedule.
double edge_probability(const ExperimentConfig& cfg, std::size_t n);

// Named small structures: K<n>, P<n>, C<n>, S<n> (star with n leaves).
Hypergraph named_instance(const std::string& name);

// Strategy applied to a concrete structure; `strategy` as in the config.
StrategyTrace build_strategy(const Hypergraph& h, const std::string& strategy,
                             std::size_t k, std::uint64_t seed,
                             const ExperimentConfig& cfg);

struct BenchRow {
  std::string model;
  std::size_t n = 0;
  double p_or_omega = 0;
  std::size_t r = 2;
  std::size_t k = 2;
  std::uint64_t seed = 0;
  std::optional<std::size_t> M;
  std::optional<std::size_t> path_len;
  std::optional<std::size_t> leftover;
  std::optional<std::size_t> rounds;
  std::optional<std::uint64_t> lower_bound;
  double runtime_ms = 0;
  bool complete = false;
  std::string error;
};

inline constexpr const char* kCsvHeader =
    "model,n,p_or_omega,r,k,seed,M,path_len,leftover,rounds,lower_bound,"
    "runtime_ms,complete,error";

BenchRow bench_row(const ExperimentConfig& cfg, std::size_t n, std::uint64_t seed);
std::string format_row(const BenchRow& row);

// Worker count: hardware concurrency capped by ACQ_LAB_THREADS.
std::size_t worker_count();

// Rows sorted by (n, seed) whatever the worker count.
std::vector<BenchRow> run_bench(const ExperimentConfig& cfg);
std::string bench_csv(const std::vector<BenchRow>& rows);

// Writes one JSON file per (n, seed) into cfg.out; returns the paths and a
// human-readable note per file.
std::vector<std::pair<std::string, std::string>> generate(const ExperimentConfig& cfg);

// Report JSON {rounds, complete, lower_bound, completion_round, constants}.
struct RunOutcome {
  std::string report;
  bool complete = false;
};
RunOutcome run_structure(const Hypergraph& h, const ExperimentConfig& cfg,
                         std::uint64_t seed, std::vector<Matching>* trace = nullptr);

// {instance, k, exact, lower_bound}
std::string oracle_report(const std::string& instance, const Hypergraph& h,
                          std::size_t k);

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

// Oracle table, dominance on connected graphs n <= 5, factorization checks
// (plus an optional fixture file), ledger monotonicity fuzz.
std::vector<CheckResult> verify(const std::optional<std::string>& fixture);

// Connected graphs on n vertices, one per isomorphism class.
std::vector<Graph> connected_graphs_up_to_iso(std::size_t n);

int main_entry(int argc, char** argv);

}  // namespace acq::cli
