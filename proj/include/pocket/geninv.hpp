#pragma once

#include <optional>

#include "pocket/graph.hpp"
#include "pocket/linalg.hpp"

namespace pocket {

/// Symmetric {1}-inverse of a connected-graph Laplacian partitioned as
/// [A B; B^T D] with D nonsingular:
///
///   [ H#              -H# B D^-1                    ]
///   [ -D^-1 B^T H#     D^-1 + D^-1 B^T H# B D^-1    ]
///
/// where H = A - B D^-1 B^T. H is itself a (weighted) connected Laplacian,
/// so H# comes from the rank-correction pseudoinverse.
Matrix one_inverse_partitioned(const Matrix& a, const Matrix& b, const Matrix& d);

/// Closed-form inverse of the pocket part D of the block Laplacian,
///
///   D = [ (L(H1) + (m-l+1)I) (x) I_c     -J (x) I_c              ]
///       [ -J (x) I_c                      (L(H2) + l I) (x) I_c  ]
///
/// with c copies. Only l x l and (m-l) x (m-l) matrices are inverted.
struct PocketDInverse {
  std::size_t copies = 0;
  /// (L(H1) + (m-l+1)I - ((m-l)/l)J)^-1, l x l.
  Matrix p_core_inv;
  /// (L(H2) + l I - (l/(m-l+1))J)^-1, (m-l) x (m-l).
  Matrix q_core_inv;
  Matrix p_inv;     ///< p_core_inv (x) I_copies
  Matrix q_inv;     ///< q_core_inv (x) I_copies
  Matrix coupling;  ///< (1/l) J_{l x (m-l)} (x) I_copies

  /// The full 2x2 block matrix D^-1.
  Matrix assembled() const;
};

PocketDInverse pocket_d_inverse(const Graph& h1, const Graph& h2, std::size_t copies);

/// D itself, assembled densely from its definition. Test and audit helper.
Matrix pocket_d_matrix(const Graph& h1, const Graph& h2, std::size_t copies);

enum class StructuredPath { AllAttached, JoinAttached };

std::string_view to_string(StructuredPath p);

/// Small factors retained next to the assembled {1}-inverse.
struct OneInverseIngredients {
  /// Group inverse of the reduced F-side matrix: L#(F) on the all-attached
  /// path, (L(F1) + (n-k)I - ((n-k)/k)J)# on the join path.
  Matrix f_group_inverse;
  /// (L(F2) + kI)^-1 on the join path, empty otherwise.
  Matrix f2_inverse;
  PocketDInverse d;
};

/// A symmetric {1}-inverse of the pocket graph Laplacian built from the
/// block formulas, never inverting anything larger than max(n, l, m-l).
struct StructuredOneInverse {
  StructuredPath path;
  Matrix matrix;
  BlockLayout layout;
  OneInverseIngredients ingredients;
};

/// Pocket on every vertex of F (k = n). The F group inverse is the
/// Laplacian pseudoinverse of F in F-block order.
StructuredOneInverse all_attached_one_inverse(const PocketSpec& spec);

/// F = F1 v F2 with pockets on every F1 vertex. F1 supplies the first k
/// F-block positions, F2 the remaining n - k. Requires order(F2) >= 1.
StructuredOneInverse join_attached_one_inverse(const Graph& f1, const Graph& f2, const Graph& h1,
                                               const Graph& h2);

/// Picks the construction for an arbitrary spec: all-attached when k = n,
/// join-attached when F splits as (attached) v (rest). The matrix is in the
/// global order of build_pocket_graph(spec). Throws StructureError when
/// neither applies.
StructuredOneInverse structured_one_inverse(const PocketSpec& spec);

/// Schur complement A - B D^-1 B^T of a symmetric matrix partitioned after
/// its first `leading` rows and columns. D is inverted densely; this is the
/// reference route the closed forms are checked against.
Matrix leading_schur_complement(const Matrix& m, std::size_t leading);

}  // namespace pocket
