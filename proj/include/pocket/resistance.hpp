#pragma once

#include <string_view>

#include "pocket/graph.hpp"
#include "pocket/linalg.hpp"

namespace pocket {

/// X_uu + X_vv - X_uv - X_vu for any {1}-inverse X of the Laplacian.
double resistance_from_one_inverse(const Matrix& x, Vertex u, Vertex v);

/// Outcome of checking the metric axioms on a resistance matrix.
struct MetricCheck {
  double max_asymmetry = 0.0;
  double max_abs_diagonal = 0.0;
  double most_negative = 0.0;           ///< min(0, min entry)
  double worst_triangle_excess = 0.0;   ///< max(0, r_uw - r_uv - r_vw)

  bool holds(double tol) const {
    return max_asymmetry <= tol && max_abs_diagonal <= tol && -most_negative <= tol &&
           worst_triangle_excess <= tol;
  }
};

/// All-pairs effective resistances.
class ResistanceMatrix {
 public:
  ResistanceMatrix() = default;
  explicit ResistanceMatrix(Matrix values) : values_(std::move(values)) {}

  std::size_t order() const { return values_.rows(); }
  double operator()(Vertex u, Vertex v) const { return values_(u, v); }
  const Matrix& values() const { return values_; }

  /// Sum over u < v, accumulated row-major.
  double pair_sum() const;
  /// O(n^3) scan of symmetry, zero diagonal, nonnegativity and the
  /// triangle inequality.
  MetricCheck check_metric() const;

 private:
  Matrix values_;
};

/// Evaluates every pair. Rows are split across `threads` workers; each
/// entry is written by exactly one worker so the result does not depend on
/// the thread count.
ResistanceMatrix resistance_matrix(const Matrix& x, unsigned threads = 1);

enum class KirchhoffMethod { Oracle, Structured, Spectral, Printed };

std::string_view to_string(KirchhoffMethod m);

struct KirchhoffResult {
  double value = 0.0;
  KirchhoffMethod method = KirchhoffMethod::Structured;
};

/// n tr(X) - 1^T X 1.
KirchhoffResult kirchhoff_from_one_inverse(const Matrix& x,
                                           KirchhoffMethod tag = KirchhoffMethod::Structured);

/// n * sum of reciprocals of the nonzero Laplacian eigenvalues. Throws
/// DisconnectedError when more than one eigenvalue lies within 1e-9 of 0.
KirchhoffResult kirchhoff_spectral(const Spectrum& spectrum, std::size_t n);

struct OracleResult {
  Matrix pseudo_inverse;
  ResistanceMatrix resistances;
  KirchhoffResult kirchhoff;
};

/// Ground truth: assemble L(g), pseudo-invert it densely, evaluate.
OracleResult oracle_resistance(const Graph& g, unsigned threads = 1);

/// Worker count from POCKET_KIRCH_THREADS, defaulting to 1 and capped at
/// the hardware concurrency.
unsigned worker_count_from_env();

}  // namespace pocket
