#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pocket/graph.hpp"

namespace pocket {

/// A spec with a name and, for generated ones, the seed it came from.
struct NamedSpec {
  std::string label;
  PocketSpec spec;
  std::optional<std::uint64_t> seed;
};

/// Size bounds for generated instances.
struct SweepBounds {
  std::size_t max_n = 6;       ///< order of F
  std::size_t max_l = 4;       ///< order of H1
  std::size_t max_rest = 4;    ///< order of H2 (m - l)
};

/// Small named instances with hand-checkable values: the all-attached
/// P3/P4/K3-pendant family plus join-family cases that reach every printed
/// case label.
std::vector<NamedSpec> builtin_fixtures();

/// Graph generators. `Rng` is a 64-bit Mersenne twister; draws are reduced
/// by modulo so sequences are identical on every platform.
using Rng = std::mt19937_64;

Graph random_graph(std::size_t order, double edge_probability, Rng& rng);
/// Random spanning tree plus independent extra edges; always connected.
Graph random_connected_graph(std::size_t order, double extra_edge_probability, Rng& rng);
/// The same graph under a uniformly random vertex relabelling; perm[i] is
/// the new id of old vertex i.
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);
std::vector<Vertex> random_permutation(std::size_t n, Rng& rng);

/// Pockets on every vertex of a random connected F, attachment order
/// shuffled.
PocketSpec random_all_attached_spec(const SweepBounds& bounds, Rng& rng);
/// F = F1 v F2 with F relabelled at random and pockets on the F1 vertices.
/// Needs bounds.max_n >= 2.
PocketSpec random_join_attached_spec(const SweepBounds& bounds, Rng& rng);

/// `count` specs alternating between the two families, each drawn from its
/// own sub-seed derived from `seed` so instance i is reproducible alone.
std::vector<NamedSpec> random_sweep(std::size_t count, std::uint64_t seed, const SweepBounds& bounds);

}  // namespace pocket
