#include "pocket/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace pocket {

namespace {

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1;
  long long count = -1;
  if (!(in >> n >> count) || n < 0 || count < 0) {
    throw ParseError("edge list: expected header \"n m_edges\" with non-negative integers");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(std::min<long long>(count, 1 << 16)));
  for (long long i = 0; i < count; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) {
      throw ParseError("edge list: expected " + std::to_string(count) + " edges, read " + std::to_string(i));
    }
    if (u < 0 || v < 0) throw ParseError("edge list: negative vertex id on edge " + std::to_string(i));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string trailing;
  if (in >> trailing) throw ParseError("edge list: unexpected trailing token \"" + trailing + "\"");
  try {
    return Graph(static_cast<std::size_t>(n), edges);
  } catch (const StructureError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

}  // namespace

Graph graph_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("order") || !j.contains("edges")) {
      throw ParseError("graph JSON: expected object with \"order\" and \"edges\"");
    }
    const auto order = j.at("order").get<long long>();
    if (order < 0) throw ParseError("graph JSON: negative order");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("graph JSON: each edge must be [u, v]");
      const auto u = e[0].get<long long>();
      const auto v = e[1].get<long long>();
      if (u < 0 || v < 0) throw ParseError("graph JSON: negative vertex id");
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph(static_cast<std::size_t>(order), edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  } catch (const StructureError& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
}

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty graph input");
  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  return parse_edge_list(text);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.first << ' ' << e.second << '\n';
  return os.str();
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  return {{"order", g.order()}, {"edges", std::move(edges)}};
}

nlohmann::json to_json(const BlockLayout& layout) {
  nlohmann::json vertices = nlohmann::json::array();
  for (Vertex g = 0; g < layout.total_order(); ++g) {
    const BlockPosition p = layout.locate(g);
    nlohmann::json entry = {{"global", g}, {"block", std::string(to_string(p.block))}, {"local", p.local}};
    if (p.block == Block::F) {
      entry["f_vertex"] = layout.f_vertex(p.local);
    } else {
      entry["copy"] = p.copy;
    }
    vertices.push_back(std::move(entry));
  }
  return {{"n", layout.n()},
          {"k", layout.k()},
          {"l", layout.l()},
          {"m", layout.m()},
          {"total_order", layout.total_order()},
          {"f_vertices", layout.f_vertices()},
          {"vertices", std::move(vertices)}};
}

}  // namespace pocket
