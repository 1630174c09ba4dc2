#include <iostream>

#include "CLI11.hpp"
#include "acq/engine.hpp"
#include "acq/error.hpp"
#include "acq/generators.hpp"
#include "acq/json_io.hpp"
#include "commands.hpp"

namespace acq::cli {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfig:
    case ErrorKind::kInvalidArity:
    case ErrorKind::kInvalidProbability:
    case ErrorKind::kInvalidUniformity:
    case ErrorKind::kInvalidDelta:
    case ErrorKind::kNotDivisible:
      return kExitConfig;
    case ErrorKind::kIo:
    case ErrorKind::kParse:
      return kExitIo;
    default:
      return kExitInvariant;
  }
}

struct RawOptions {
  std::string n;
  std::string seeds = "0";
  std::string in;
  std::string instance;
  std::string fixture;
  std::size_t big_n = 0;
  std::size_t s = 0;
};

Hypergraph load_structure(const RawOptions& raw) {
  if (!raw.instance.empty()) return named_instance(raw.instance);
  if (raw.in.empty()) throw Error(ErrorKind::kConfig, "give --in <file> or --instance <name>");
  const std::string text = read_file(raw.in);
  if (text.find("\"order\"") != std::string::npos) {
    const EdgeSequence seq = edge_sequence_from_json(text);
    return Hypergraph(snapshot(seq, connectivity_time(seq)));
  }
  return hypergraph_from_json(text);
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
}

}  // namespace

int main_entry(int argc, char** argv) {
  CLI::App app{"acquaintance-time simulation laboratory", "acqlab"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  RawOptions raw;
  double p = -1;
  double omega = -1;

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model, "gnp | gnm-process | hrnp");
    sub->add_option("--n", raw.n, "sizes: a,b,c or lo:hi[:step]")->required();
    sub->add_option("--p", p, "edge probability");
    sub->add_option("--omega", omega, "p = omega * ln n / n^(r-1)");
    sub->add_option("--r", cfg.r, "uniformity");
    sub->add_option("--seeds", raw.seeds, "seeds: a,b,c or lo:hi[:step]");
  };
  auto add_strategy = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "acquaintance arity");
    sub->add_option("--strategy", cfg.strategy, "auto | good-tree | loose-path | sparse | dense");
    sub->add_option("--delta", cfg.delta, "long-path fraction");
    sub->add_option("--c-cut", cfg.c_cut, "dense cut constant");
  };

  CLI::App* gen = app.add_subcommand("gen", "write random structures as JSON");
  add_model(gen);
  gen->add_option("--out", cfg.out, "output directory")->required();

  CLI::App* run = app.add_subcommand("run", "build a strategy trace and replay it");
  run->add_option("--in", raw.in, "structure JSON");
  run->add_option("--instance", raw.instance, "K<n> | P<n> | C<n> | S<n>");
  run->add_option("--seeds", raw.seeds, "first value is used");
  run->add_option("--omega", omega, "density for the dense strategy");
  run->add_option("--out", cfg.out, "write the trace here");
  add_strategy(run);

  CLI::App* oracle = app.add_subcommand("oracle", "exact acquaintance time by search");
  oracle->add_option("--in", raw.in, "structure JSON");
  oracle->add_option("--instance", raw.instance, "K<n> | P<n> | C<n> | S<n>");
  oracle->add_option("--k", cfg.k, "acquaintance arity");

  CLI::App* bench = app.add_subcommand("bench", "ensemble experiment to CSV");
  add_model(bench);
  add_strategy(bench);
  bench->add_option("--out", cfg.out, "CSV path (stdout if absent)");

  CLI::App* factorize = app.add_subcommand("factorize", "1-factorization of the s-subsets of [N]");
  factorize->add_option("--N", raw.big_n, "ground set size")->required();
  factorize->add_option("--s", raw.s, "block size")->required();
  factorize->add_option("--out", cfg.out, "JSON path (stdout if absent)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
  verify_cmd->add_option("--fixture", raw.fixture, "factorization JSON to check as well");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (p >= 0) cfg.p = p;
    if (omega >= 0) cfg.omega = omega;
    const auto seeds = parse_seeds(raw.seeds);
    cfg.seeds = seeds;

    if (gen->parsed()) {
      cfg.n = parse_sizes(raw.n);
      for (const auto& [path, note] : generate(cfg)) std::cout << path << ' ' << note << '\n';
      return kExitOk;
    }
    if (run->parsed()) {
      if (seeds.empty()) throw Error(ErrorKind::kConfig, "seed list is empty");
      const Hypergraph h = load_structure(raw);
      std::vector<Matching> trace;
      const RunOutcome outcome = run_structure(h, cfg, seeds.front(), &trace);
      if (!cfg.out.empty()) write_file(cfg.out, trace_to_json(trace));
      std::cout << outcome.report << '\n';
      return outcome.complete ? kExitOk : kExitInvariant;
    }
    if (oracle->parsed()) {
      const Hypergraph h = load_structure(raw);
      const std::string name = raw.instance.empty() ? raw.in : raw.instance;
      std::cout << oracle_report(name, h, cfg.k) << '\n';
      return kExitOk;
    }
    if (bench->parsed()) {
      cfg.n = parse_sizes(raw.n);
      const auto rows = run_bench(cfg);
      emit(cfg.out, bench_csv(rows));
      int code = kExitOk;
      for (const auto& row : rows) {
        if (row.complete && row.rounds && row.lower_bound && *row.rounds < *row.lower_bound) {
          std::cerr << "row n=" << row.n << " seed=" << row.seed << " beats the lower bound\n";
          code = kExitInvariant;
        }
      }
      return code;
    }
    if (factorize->parsed()) {
      emit(cfg.out, to_json(baranyai(raw.big_n, raw.s)) + "\n");
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      std::optional<std::string> fixture;
      if (!raw.fixture.empty()) fixture = raw.fixture;
      bool ok = true;
      for (const auto& check : verify(fixture)) {
        std::cout << (check.ok ? "PASS " : "FAIL ") << check.name;
        if (!check.detail.empty()) std::cout << "  " << check.detail;
        std::cout << '\n';
        ok = ok && check.ok;
      }
      return ok ? kExitOk : kExitInvariant;
    }
  } catch (const Error& e) {
    std::cerr << "acqlab: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "acqlab: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitConfig;
}

}  // namespace acq::cli
