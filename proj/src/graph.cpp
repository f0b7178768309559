#include "pocket/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace pocket {

Graph::Graph(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges)
    : order_(order), adjacency_(order) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= order || v >= order) {
      throw StructureError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") has an endpoint outside [0," + std::to_string(order) + ")");
    }
    if (u == v) throw StructureError("self-loop at vertex " + std::to_string(u));
    edges_.push_back(Edge{std::min(u, v), std::max(u, v)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw StructureError("duplicate edge (" + std::to_string(dup->first) + "," +
                         std::to_string(dup->second) + ")");
  }
  for (const Edge& e : edges_) {
    adjacency_[e.first].push_back(e.second);
    adjacency_[e.second].push_back(e.first);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

Graph Graph::complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph Graph::path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, e);
}

Graph Graph::star(std::size_t leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 1; u <= leaves; ++u) e.emplace_back(0, u);
  return Graph(leaves + 1, e);
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw StructureError("cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph(n, e);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order_ || v >= order_) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j])) e.emplace_back(i, j);
  return Graph(vertices.size(), e);
}

Matrix laplacian(const Graph& g) {
  Matrix l(g.order(), g.order());
  for (const Edge& e : g.edges()) {
    l(e.first, e.first) += 1.0;
    l(e.second, e.second) += 1.0;
    l(e.first, e.second) -= 1.0;
    l(e.second, e.first) -= 1.0;
  }
  return l;
}

Graph join(const Graph& g1, const Graph& g2) {
  const std::size_t shift = g1.order();
  std::vector<std::pair<Vertex, Vertex>> e;
  e.reserve(g1.size() + g2.size() + g1.order() * g2.order());
  for (const Edge& x : g1.edges()) e.emplace_back(x.first, x.second);
  for (const Edge& x : g2.edges()) e.emplace_back(x.first + shift, x.second + shift);
  for (Vertex u = 0; u < g1.order(); ++u)
    for (Vertex v = 0; v < g2.order(); ++v) e.emplace_back(u, v + shift);
  return Graph(g1.order() + g2.order(), e);
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<bool> seen(g.order(), false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbours(u)) {
      if (seen[w]) continue;
      seen[w] = true;
      ++reached;
      frontier.push(w);
    }
  }
  return reached == g.order();
}

JoinParts split_join(const Graph& g, std::span<const Vertex> first, std::span<const Vertex> excluded) {
  std::vector<char> role(g.order(), 0);  // 0 = second side, 1 = first side, 2 = excluded
  for (Vertex v : excluded) {
    if (v >= g.order()) throw StructureError("excluded vertex out of range");
    role[v] = 2;
  }
  for (Vertex v : first) {
    if (v >= g.order()) throw StructureError("vertex " + std::to_string(v) + " out of range");
    if (role[v] != 0) throw StructureError("vertex " + std::to_string(v) + " listed twice");
    role[v] = 1;
  }
  JoinParts parts;
  parts.first_vertices.assign(first.begin(), first.end());
  for (Vertex v = 0; v < g.order(); ++v)
    if (role[v] == 0) parts.second_vertices.push_back(v);

  for (Vertex a : parts.first_vertices)
    for (Vertex b : parts.second_vertices)
      if (!g.has_edge(a, b)) {
        throw StructureError("not a join: missing cross edge (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
      }
  parts.first = g.induced(parts.first_vertices);
  parts.second = g.induced(parts.second_vertices);
  return parts;
}

JoinParts validate_join_structure(const Graph& hv, Vertex v) {
  if (v >= hv.order()) throw StructureError("v-id " + std::to_string(v) + " out of range");
  if (!is_connected(hv)) throw DisconnectedError("pocket graph H_v is disconnected");
  const auto& nbrs = hv.neighbours(v);
  if (nbrs.empty()) throw StructureError("specified vertex has degree 0; need l >= 1");
  const Vertex excluded[] = {v};
  return split_join(hv, nbrs, excluded);
}

void PocketSpec::validate() const {
  if (f.order() == 0) throw StructureError("F must have at least one vertex");
  if (!is_connected(f)) throw DisconnectedError("F is disconnected");
  if (attach.empty() || attach.size() > f.order()) {
    throw StructureError("need 1 <= k <= n attachment vertices, got " + std::to_string(attach.size()));
  }
  std::vector<bool> used(f.order(), false);
  for (Vertex u : attach) {
    if (u >= f.order()) throw StructureError("attachment vertex " + std::to_string(u) + " not in F");
    if (used[u]) throw StructureError("duplicate attachment vertex " + std::to_string(u));
    used[u] = true;
  }
  if (h1.order() == 0) throw StructureError("H1 must have at least one vertex (l >= 1)");
}

Graph PocketSpec::pocket() const {
  const std::size_t l_ = l();
  const std::size_t m_ = m();
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex j = 0; j < l_; ++j) e.emplace_back(0, 1 + j);
  for (const Edge& x : h1.edges()) e.emplace_back(1 + x.first, 1 + x.second);
  for (const Edge& x : h2.edges()) e.emplace_back(1 + l_ + x.first, 1 + l_ + x.second);
  for (Vertex a = 0; a < l_; ++a)
    for (Vertex b = 0; b < m_ - l_; ++b) e.emplace_back(1 + a, 1 + l_ + b);
  return Graph(m_ + 1, e);
}

std::string_view to_string(Block b) {
  switch (b) {
    case Block::F: return "F";
    case Block::H1: return "H1";
    case Block::H2: return "H2";
  }
  return "?";
}

BlockLayout::BlockLayout(std::size_t n, std::size_t k, std::size_t l, std::size_t m,
                         std::vector<Vertex> f_vertices)
    : n_(n), k_(k), l_(l), m_(m), f_vertices_(std::move(f_vertices)) {
  if (k_ > n_ || l_ > m_ || f_vertices_.size() != n_) {
    throw std::invalid_argument("BlockLayout: inconsistent dimensions");
  }
}

std::size_t BlockLayout::offset(Block b) const {
  switch (b) {
    case Block::F: return 0;
    case Block::H1: return n_;
    case Block::H2: return n_ + l_ * k_;
  }
  return 0;
}

std::size_t BlockLayout::extent(Block b) const {
  switch (b) {
    case Block::F: return n_;
    case Block::H1: return l_ * k_;
    case Block::H2: return (m_ - l_) * k_;
  }
  return 0;
}

Vertex BlockLayout::global(const BlockPosition& pos) const {
  switch (pos.block) {
    case Block::F:
      if (pos.local >= n_ || pos.copy != 0) throw std::out_of_range("BlockLayout::global: F position");
      return pos.local;
    case Block::H1:
      if (pos.local >= l_ || pos.copy >= k_) throw std::out_of_range("BlockLayout::global: H1 position");
      return n_ + pos.local * k_ + pos.copy;
    case Block::H2:
      if (pos.local >= m_ - l_ || pos.copy >= k_) throw std::out_of_range("BlockLayout::global: H2 position");
      return n_ + l_ * k_ + pos.local * k_ + pos.copy;
  }
  throw std::out_of_range("BlockLayout::global");
}

BlockPosition BlockLayout::locate(Vertex g) const {
  if (g >= total_order()) throw std::out_of_range("BlockLayout::locate: " + std::to_string(g));
  if (g < n_) return {Block::F, g, 0};
  const std::size_t h = g - n_;
  if (h < l_ * k_) return {Block::H1, h / k_, h % k_};
  const std::size_t q = h - l_ * k_;
  return {Block::H2, q / k_, q % k_};
}

std::size_t BlockLayout::block_index(Vertex g) const {
  const BlockPosition p = locate(g);
  return p.block == Block::F ? p.local : p.local * k_ + p.copy;
}

std::size_t BlockLayout::anchor(Vertex g) const {
  const BlockPosition p = locate(g);
  return p.block == Block::F ? p.local : p.copy;
}

PocketGraph build_pocket_graph(const PocketSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n();
  const std::size_t k = spec.k();
  const std::size_t l = spec.l();
  const std::size_t m = spec.m();

  std::vector<Vertex> order(spec.attach.begin(), spec.attach.end());
  std::vector<bool> attached(n, false);
  for (Vertex u : spec.attach) attached[u] = true;
  for (Vertex u = 0; u < n; ++u)
    if (!attached[u]) order.push_back(u);
  std::vector<Vertex> position(n);
  for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;

  BlockLayout layout(n, k, l, m, order);
  std::vector<std::pair<Vertex, Vertex>> e;
  e.reserve(expected_pocket_edges(spec));
  for (const Edge& x : spec.f.edges()) e.emplace_back(position[x.first], position[x.second]);

  auto h1_at = [&](Vertex row, std::size_t copy) { return layout.global({Block::H1, row, copy}); };
  auto h2_at = [&](Vertex row, std::size_t copy) { return layout.global({Block::H2, row, copy}); };
  for (std::size_t c = 0; c < k; ++c) {
    for (Vertex j = 0; j < l; ++j) e.emplace_back(c, h1_at(j, c));
    for (const Edge& x : spec.h1.edges()) e.emplace_back(h1_at(x.first, c), h1_at(x.second, c));
    for (const Edge& x : spec.h2.edges()) e.emplace_back(h2_at(x.first, c), h2_at(x.second, c));
    for (Vertex a = 0; a < l; ++a)
      for (Vertex b = 0; b < m - l; ++b) e.emplace_back(h1_at(a, c), h2_at(b, c));
  }
  return {Graph(layout.total_order(), e), std::move(layout)};
}

std::size_t expected_pocket_edges(const PocketSpec& spec) {
  const std::size_t l = spec.l();
  const std::size_t rest = spec.m() - l;
  return spec.f.size() + spec.k() * (spec.h1.size() + spec.h2.size() + l + l * rest);
}

}  // namespace pocket
