#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pocket/linalg.hpp"

namespace pocket {

using Vertex = std::size_t;

/// Unordered vertex pair, normalised so that first < second.
struct Edge {
  Vertex first;
  Vertex second;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Input graph violates a structural requirement (join shape, attachment
/// list, self-loop, ...).
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input graph is not connected where connectivity is required.
class DisconnectedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph with an explicit vertex count, so isolated
/// vertices are representable. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order) : order_(order), adjacency_(order) {}
  /// Throws StructureError on self-loops, duplicate edges, or endpoints
  /// outside [0, order).
  Graph(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(std::size_t order, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(order, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph star(std::size_t leaves);
  static Graph cycle(std::size_t n);

  std::size_t order() const { return order_; }
  std::size_t size() const { return edges_.size(); }
  /// Sorted, normalised edge list.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Sorted neighbour list of v.
  const std::vector<Vertex>& neighbours(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// D - A.
Matrix laplacian(const Graph& g);

/// Disjoint union plus every cross edge. g1 keeps its ids; g2's are shifted
/// by g1.order().
Graph join(const Graph& g1, const Graph& g2);

/// Orders 0 and 1 count as connected.
bool is_connected(const Graph& g);

/// The two induced sides of a join decomposition together with the
/// original vertex ids they were taken from.
struct JoinParts {
  Graph first;
  Graph second;
  std::vector<Vertex> first_vertices;
  std::vector<Vertex> second_vertices;
};

/// Splits g into the subgraphs induced on `first` (in the given order) and
/// on the remaining vertices (ascending, minus `excluded`), requiring every
/// first-side vertex to be adjacent to every second-side vertex. Throws
/// StructureError naming a missing cross edge otherwise.
JoinParts split_join(const Graph& g, std::span<const Vertex> first,
                     std::span<const Vertex> excluded = {});

/// Checks hv = H1 v (H2 + {v}) with H1 induced on N(v) and H2 on the rest.
/// Returns (H1, H2) with vertices in ascending original order.
JoinParts validate_join_structure(const Graph& hv, Vertex v);

/// F together with the attachment list and the two halves of the pocket
/// H_v = H1 v (H2 + {v}).
struct PocketSpec {
  Graph f;
  std::vector<Vertex> attach;
  Graph h1;
  Graph h2;

  std::size_t n() const { return f.order(); }
  std::size_t k() const { return attach.size(); }
  std::size_t l() const { return h1.order(); }
  std::size_t m() const { return h1.order() + h2.order(); }
  std::size_t total_order() const { return n() + m() * k(); }

  /// Throws DisconnectedError / StructureError when an invariant fails.
  void validate() const;
  /// H_v itself, with v as vertex 0, then H1, then H2.
  Graph pocket() const;
};

enum class Block { F, H1, H2 };

std::string_view to_string(Block b);

/// Position of a vertex inside the block ordering. For the F block `local`
/// is the F-block position and `copy` is 0; for H1/H2 `local` is the row
/// (vertex of H1 or H2) and `copy` the pocket index.
struct BlockPosition {
  Block block;
  std::size_t local;
  std::size_t copy;

  friend bool operator==(const BlockPosition&, const BlockPosition&) = default;
};

/// Bijection between global vertex ids of the pocket graph and the block
/// ordering: F block first, then the H1 rows, then the H2 rows, each row
/// expanded over the k copies with the copy index varying fastest.
///
/// The F block lists the attachment vertices in attachment order followed
/// by the remaining F vertices ascending, so F-block position i < k is the
/// vertex carrying copy i.
class BlockLayout {
 public:
  BlockLayout() = default;
  BlockLayout(std::size_t n, std::size_t k, std::size_t l, std::size_t m,
              std::vector<Vertex> f_vertices);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t l() const { return l_; }
  std::size_t m() const { return m_; }
  std::size_t total_order() const { return n_ + m_ * k_; }

  std::size_t offset(Block b) const;
  std::size_t extent(Block b) const;

  Vertex global(const BlockPosition& pos) const;
  BlockPosition locate(Vertex global) const;
  /// Index of a vertex within its own block: the F-block position, or
  /// row * k + copy for the Kronecker blocks.
  std::size_t block_index(Vertex global) const;
  /// F-block position of the F vertex that a vertex hangs off: itself for
  /// F vertices, the attachment vertex of its copy otherwise.
  std::size_t anchor(Vertex global) const;

  /// Original F vertex id stored at an F-block position.
  Vertex f_vertex(std::size_t position) const { return f_vertices_.at(position); }
  const std::vector<Vertex>& f_vertices() const { return f_vertices_; }

  friend bool operator==(const BlockLayout&, const BlockLayout&) = default;

 private:
  std::size_t n_ = 0, k_ = 0, l_ = 0, m_ = 0;
  std::vector<Vertex> f_vertices_;
};

struct PocketGraph {
  Graph graph;
  BlockLayout layout;
};

/// Assembles G[F, u_1..u_k; H_v, l]. Copy i of H_v is glued at attach[i].
PocketGraph build_pocket_graph(const PocketSpec& spec);

/// Closed-form edge count |E(F)| + k(|E(H1)| + |E(H2)| + l + l(m - l)).
std::size_t expected_pocket_edges(const PocketSpec& spec);

}  // namespace pocket
