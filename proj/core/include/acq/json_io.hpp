#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acq/engine.hpp"
#include "acq/generators.hpp"
#include "acq/strategies.hpp"
#include "acq/types.hpp"

namespace acq {

// Compact canonical JSON. Parsers throw kParse on malformed text and the
// domain error of the constructor on invalid content.

std::string to_json(const Hypergraph& h);  // {"n","r","edges"}
std::string to_json(const Graph& g);       // same shape with r = 2
std::string to_json(const EdgeSequence& s);
std::string to_json(const LoosePath& p);   // {"r","ordering"}
std::string to_json(const GoodTree& t);    // {"n","spine","heavy","light"}
std::string to_json(const Factorization& f);
std::string to_json(const TraceReport& report);
std::string trace_to_json(std::span<const Matching> rounds);

Hypergraph hypergraph_from_json(std::string_view text);
Graph graph_from_json(std::string_view text);  // requires r = 2
EdgeSequence edge_sequence_from_json(std::string_view text);
LoosePath loose_path_from_json(std::string_view text);
GoodTree good_tree_from_json(std::string_view text);
Factorization factorization_from_json(std::string_view text);
std::vector<Matching> trace_from_json(std::string_view text);

// Whole-file helpers; throw kIo.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace acq
