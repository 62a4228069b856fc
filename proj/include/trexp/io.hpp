#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "trexp/cleaning.hpp"
#include "trexp/embed.hpp"
#include "trexp/extremal.hpp"
#include "trexp/graph.hpp"
#include "trexp/tree.hpp"
#include "trexp/triple_system.hpp"

namespace trexp {

using Json = nlohmann::ordered_json;

/// A parsed structure file: a graph or a 3-graph.
using Structure = std::variant<Graph, TripleSystem>;

/// Parses the text edge-list format (`kind=graph|3graph n=N` header, one edge
/// per line, `#` comments) or its JSON mirror. Throws InputError on
/// malformed input, out-of-range ids, loops and duplicate edges.
Structure parse_structure(const std::string& text);
Structure read_structure(const std::string& path);

/// Reads a file that must hold a graph (InputError otherwise).
Graph read_graph(const std::string& path);
/// Reads a file that must hold a 3-graph.
TripleSystem read_triple_system(const std::string& path);

std::string to_edgelist(const Graph& g);
std::string to_edgelist(const TripleSystem& h);
Json to_json(const Graph& g);
Json to_json(const TripleSystem& h);

/// Colouring file: lines `u v w c`, every triple of [n] exactly once, where
/// n is one more than the largest id.
Coloring parse_coloring(const std::string& text);
Coloring read_coloring(const std::string& path);
std::string to_coloring_text(const Coloring& chi);

Json to_json(const CrosscutPair& p);
Json to_json(const TreeProfile& p);
Json to_json(const Embedding& e);
Json to_json(const RainbowCertificate& c);
Json to_json(const CleaningTrace& t);
Json to_json(const FullnessReport& r);
Json to_json(const TuranResult& r);
Json to_json(const ClosenessReport& r);
Json to_json(const AntiRamseyReport& r);
Json to_json(const SuiteReport& r);

Embedding embedding_from_json(const Json& j);
CleaningTrace cleaning_trace_from_json(const Json& j);
Graph graph_from_json(const Json& j);
TripleSystem triple_system_from_json(const Json& j);

/// CSV tables for plotting.
std::string to_csv(const SuiteReport& r);
std::string to_csv(const TuranResult& r);

std::string read_file(const std::string& path);
/// Writes text, creating parent directories. Throws InputError on failure.
void write_file(const std::string& path, const std::string& text);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

}  // namespace trexp
