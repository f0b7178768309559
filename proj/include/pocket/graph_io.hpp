#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pocket/graph.hpp"

namespace pocket {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two graph encodings are accepted wherever a graph is read:
//
//   edge list:  "n m_edges" on the first line, then m_edges "u v" pairs,
//               0-based, whitespace separated
//   JSON:       {"order": n, "edges": [[u, v], ...]}
//
// The reader sniffs the first non-blank character: '{' selects JSON.

Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

std::string to_edge_list(const Graph& g);
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BlockLayout& layout);

}  // namespace pocket
