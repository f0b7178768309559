#include "pocket/fixtures.hpp"

#include <numeric>
#include <utility>

namespace pocket {

namespace {

std::size_t uniform_index(Rng& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

// Inclusive range [lo, hi].
std::size_t uniform_between(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + uniform_index(rng, hi - lo + 1);
}

bool coin(Rng& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

std::vector<Vertex> iota_vertices(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), Vertex{0});
  return v;
}

NamedSpec fixture(std::string label, Graph f, std::vector<Vertex> attach, Graph h1, Graph h2) {
  return {std::move(label), PocketSpec{std::move(f), std::move(attach), std::move(h1), std::move(h2)}, std::nullopt};
}

}  // namespace

std::vector<NamedSpec> builtin_fixtures() {
  const Graph k1 = Graph::complete(1);
  const Graph k2 = Graph::complete(2);
  const Graph none;
  std::vector<NamedSpec> out;
  // Pocket on every F vertex.
  out.push_back(fixture("P3", k1, {0}, k1, k1));
  out.push_back(fixture("P4", k2, {0, 1}, k1, none));
  out.push_back(fixture("K3+pendants", Graph::complete(3), {0, 1, 2}, k1, none));
  out.push_back(fixture("K2+P3-pockets", k2, {1, 0}, k1, k1));
  out.push_back(fixture("P3+K2vK1-pockets", Graph::path(3), {0, 1, 2}, k2, k1));
  // F = F1 v F2, pockets on F1.
  out.push_back(fixture("K2-pendant", k2, {0}, k1, none));
  out.push_back(fixture("K3-join-pockets", Graph::complete(3), {0, 1}, k1, k1));
  out.push_back(fixture("star-center-pocket", join(k1, Graph(2)), {0}, k1, k1));
  out.push_back(fixture("K4-join-wide-pockets", join(k2, Graph(2)), {0, 1}, k2, Graph(2)));
  return out;
}

Graph random_graph(std::size_t order, double edge_probability, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v)
      if (coin(rng, edge_probability)) edges.emplace_back(u, v);
  return Graph(order, edges);
}

Graph random_connected_graph(std::size_t order, double extra_edge_probability, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::vector<bool>> present(order, std::vector<bool>(order, false));
  for (Vertex v = 1; v < order; ++v) {
    const Vertex parent = uniform_index(rng, v);
    edges.emplace_back(parent, v);
    present[parent][v] = present[v][parent] = true;
  }
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v)
      if (!present[u][v] && coin(rng, extra_edge_probability)) edges.emplace_back(u, v);
  return Graph(order, edges);
}

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm = iota_vertices(n);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform_index(rng, i)]);
  return perm;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm.at(e.first), perm.at(e.second));
  return Graph(g.order(), edges);
}

PocketSpec random_all_attached_spec(const SweepBounds& bounds, Rng& rng) {
  const std::size_t n = uniform_between(rng, 1, bounds.max_n);
  const std::size_t l = uniform_between(rng, 1, bounds.max_l);
  const std::size_t rest = uniform_between(rng, 0, bounds.max_rest);
  PocketSpec spec;
  spec.f = random_connected_graph(n, 0.35, rng);
  spec.attach = random_permutation(n, rng);
  spec.h1 = random_graph(l, 0.5, rng);
  spec.h2 = random_graph(rest, 0.5, rng);
  return spec;
}

PocketSpec random_join_attached_spec(const SweepBounds& bounds, Rng& rng) {
  if (bounds.max_n < 2) throw std::invalid_argument("join-attached specs need max_n >= 2");
  const std::size_t n = uniform_between(rng, 2, bounds.max_n);
  const std::size_t k = uniform_between(rng, 1, n - 1);
  const std::size_t l = uniform_between(rng, 1, bounds.max_l);
  const std::size_t rest = uniform_between(rng, 0, bounds.max_rest);
  const Graph f1 = random_graph(k, 0.5, rng);
  const Graph f2 = random_graph(n - k, 0.5, rng);
  const std::vector<Vertex> perm = random_permutation(n, rng);

  PocketSpec spec;
  spec.f = relabel(join(f1, f2), perm);
  for (Vertex u = 0; u < k; ++u) spec.attach.push_back(perm[u]);
  spec.h1 = random_graph(l, 0.5, rng);
  spec.h2 = random_graph(rest, 0.5, rng);
  return spec;
}

std::vector<NamedSpec> random_sweep(std::size_t count, std::uint64_t seed, const SweepBounds& bounds) {
  std::vector<NamedSpec> out;
  out.reserve(count);
  std::seed_seq root{seed};
  std::vector<std::uint64_t> sub_seeds(count);
  {
    std::vector<std::uint32_t> words(2 * count);
    root.generate(words.begin(), words.end());
    for (std::size_t i = 0; i < count; ++i) {
      sub_seeds[i] = (static_cast<std::uint64_t>(words[2 * i]) << 32) | words[2 * i + 1];
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(sub_seeds[i]);
    const bool join_family = (i % 2 == 1) && bounds.max_n >= 2;
    PocketSpec spec = join_family ? random_join_attached_spec(bounds, rng) : random_all_attached_spec(bounds, rng);
    out.push_back({(join_family ? "random-join-" : "random-all-") + std::to_string(i), std::move(spec),
                   sub_seeds[i]});
  }
  return out;
}

}  // namespace pocket
