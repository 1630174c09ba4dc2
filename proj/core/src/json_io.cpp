#include "acq/json_io.hpp"

#include <fstream>
#include <sstream>

#include "acq/error.hpp"
#include "json.hpp"

namespace acq {

namespace {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

// Wraps nlohmann type errors (missing keys, wrong types) as kParse.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

Json edge_json(const Edge& e) { return Json::array({e.first, e.second}); }

Edge edge_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::kParse, "expected [u,v]");
  return {j[0].get<Vertex>(), j[1].get<Vertex>()};
}

}  // namespace

std::string to_json(const Hypergraph& h) {
  Json j;
  j["n"] = h.n();
  j["r"] = h.r();
  j["edges"] = h.edge_list();
  return j.dump();
}

std::string to_json(const Graph& g) { return to_json(Hypergraph(g)); }

std::string to_json(const EdgeSequence& s) {
  Json j;
  j["n"] = s.n;
  j["order"] = Json::array();
  for (const Edge& e : s.order) j["order"].push_back(edge_json(e));
  return j.dump();
}

std::string to_json(const LoosePath& p) {
  Json j;
  j["r"] = p.r();
  j["ordering"] = p.ordering();
  return j.dump();
}

std::string to_json(const GoodTree& t) {
  Json j;
  j["n"] = t.n;
  j["spine"] = t.spine;
  j["heavy"] = Json::object();
  for (auto [pos, u] : t.heavy) j["heavy"][std::to_string(pos)] = u;
  j["light"] = Json::object();
  for (auto [v, a] : t.light) j["light"][std::to_string(v)] = a;
  if (!t.pendant.empty()) {
    j["pendant"] = Json::object();
    for (auto [v, a] : t.pendant) j["pendant"][std::to_string(v)] = a;
  }
  return j.dump();
}

std::string to_json(const Factorization& f) {
  Json j;
  j["N"] = f.N;
  j["s"] = f.s;
  j["factors"] = f.factors;
  return j.dump();
}

std::string to_json(const TraceReport& report) {
  Json j;
  j["completed"] = report.completed;
  j["completion_round"] =
      report.completion_round ? Json(*report.completion_round) : Json(nullptr);
  j["ledger_counts"] = report.ledger_counts;
  return j.dump();
}

std::string trace_to_json(std::span<const Matching> rounds) {
  Json j = Json::array();
  for (const Matching& m : rounds) {
    Json round = Json::array();
    for (const Edge& e : m.swaps) round.push_back(edge_json(e));
    j.push_back(std::move(round));
  }
  return j.dump();
}

Hypergraph hypergraph_from_json(std::string_view text) {
  const Json j = parse(text);
  return guarded([&] {
    return Hypergraph(j.at("n").get<std::size_t>(), j.at("r").get<std::size_t>(),
                      j.at("edges").get<std::vector<std::vector<Vertex>>>());
  });
}

Graph graph_from_json(std::string_view text) {
  const Hypergraph h = hypergraph_from_json(text);
  if (h.r() != 2) throw Error(ErrorKind::kParse, "graph requires r = 2");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    edges.emplace_back(h.edge(i)[0], h.edge(i)[1]);
  }
  return Graph(h.n(), std::move(edges));
}

EdgeSequence edge_sequence_from_json(std::string_view text) {
  const Json j = parse(text);
  return guarded([&] {
    EdgeSequence s;
    s.n = j.at("n").get<std::size_t>();
    for (const Json& e : j.at("order")) {
      const Edge edge = edge_from(e);
      if (edge.first == edge.second || edge.first >= s.n || edge.second >= s.n) {
        throw Error(ErrorKind::kInvalidStructure, "bad edge in sequence");
      }
      s.order.push_back(make_edge(edge.first, edge.second));
    }
    return s;
  });
}

LoosePath loose_path_from_json(std::string_view text) {
  const Json j = parse(text);
  return guarded([&] {
    return LoosePath(j.at("ordering").get<std::vector<Vertex>>(),
                     j.contains("r") ? j.at("r").get<std::size_t>() : 2);
  });
}

GoodTree good_tree_from_json(std::string_view text) {
  const Json j = parse(text);
  return guarded([&] {
    GoodTree t;
    t.spine = j.at("spine").get<std::vector<Vertex>>();
    for (const auto& [key, value] : j.at("heavy").items()) {
      t.heavy[std::stoul(key)] = value.get<Vertex>();
    }
    for (const auto& [key, value] : j.at("light").items()) {
      t.light[static_cast<Vertex>(std::stoul(key))] = value.get<Vertex>();
    }
    if (j.contains("pendant")) {
      for (const auto& [key, value] : j.at("pendant").items()) {
        t.pendant[static_cast<Vertex>(std::stoul(key))] = value.get<Vertex>();
      }
    }
    t.n = j.contains("n") ? j.at("n").get<std::size_t>()
                          : t.spine.size() + t.heavy.size() + t.light.size() +
                                t.pendant.size();
    validate_good_tree(t);
    return t;
  });
}

Factorization factorization_from_json(std::string_view text) {
  const Json j = parse(text);
  return guarded([&] {
    Factorization f;
    f.N = j.at("N").get<std::size_t>();
    f.s = j.at("s").get<std::size_t>();
    f.factors = j.at("factors").get<std::vector<std::vector<std::vector<Vertex>>>>();
    return f;
  });
}

std::vector<Matching> trace_from_json(std::string_view text) {
  const Json j = parse(text);
  return guarded([&] {
    if (!j.is_array()) throw Error(ErrorKind::kParse, "trace must be a list of rounds");
    std::vector<Matching> rounds;
    for (const Json& round : j) {
      Matching m;
      for (const Json& e : round) m.swaps.push_back(edge_from(e));
      rounds.push_back(std::move(m));
    }
    return rounds;
  });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::kIo, "cannot read " + path);
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot open " + path + " for writing");
  out << contents;
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path);
}

}  // namespace acq
