#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "pocket/geninv.hpp"
#include "pocket/graph.hpp"
#include "pocket/linalg.hpp"

namespace pocket {

// Published closed-form case expressions for the two pocket families,
// evaluated exactly as they are displayed, including the places where they
// disagree with the block {1}-inverse they were derived from. They exist to
// be audited against the oracle, not to be trusted.

enum class PrintedCase {
  // pocket on every F vertex
  AllFF,
  AllFH1,
  AllFH2,
  AllH1H2,
  AllH2H1,
  AllKf,
  // F = F1 v F2, pockets on F1
  JoinF1F1,
  JoinF2F2,
  JoinH1H1,
  JoinH2H2,
  JoinFH1,
  JoinFH2,
  JoinH1H2,
  JoinH2H1,
  JoinKf,
};

std::string_view to_string(PrintedCase c);
std::span<const PrintedCase> all_printed_cases();
StructuredPath family_of(PrintedCase c);
bool is_kirchhoff_case(PrintedCase c);

/// Vertex pair handed to a case formula in a case-specific order.
struct CaseEvaluation {
  PrintedCase which;
  Vertex first;
  Vertex second;
};

class CaseMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Printed Kirchhoff expression for the all-attached family:
///
///   n(m+1) ( (m+1)/n Kf(F) + (n sum_{i=2..l} 1/(mu_i + m-l+1) + n)
///            + (n sum_{i=2..m-l} 1/(nu_i + l) + nl/(m-l+1)) )
///   - ((m-l)^2 (m-l+1)/l + l^2)
///
/// Spectra are ascending, so mu_1 = 0 is index 0. Empty sums are 0.
double all_attached_printed_kf(double kf_f, const Spectrum& h1, const Spectrum& h2, std::size_t n,
                               std::size_t m, std::size_t l);

/// Printed Kirchhoff expression for the join family:
///
///   (n+mk) [ 2 sum_{i=1..k} (1/(alpha_i + n-k) - 1/(n-k)) + sum_{i=1..n-k} 1/(beta_i + k)
///            + (k sum_{i=2..l} 1/(mu_i + m-l+1) + k)
///            + (k sum_{i=2..m-l} 1/(nu_i + l) + l(2m-2l+1)/(m-l+1))
///            + k + k(m-l)/l ]
///   - (l^2 + (m-l)(m-l+1)/l + 2k(m-l))
double join_attached_printed_kf(const Spectrum& f1, const Spectrum& f2, const Spectrum& h1,
                                const Spectrum& h2, std::size_t n, std::size_t k, std::size_t m,
                                std::size_t l);

/// Evaluates the printed resistance cases of one instance. Index
/// resolution:
///  - "L#(F)" is the F x F block of the structured {1}-inverse; a pocket
///    vertex indexes it through the F vertex its copy hangs off.
///  - a Kronecker block X (x) I is indexed by each vertex's position in its
///    own block (row * k + copy). When the printed cross term indexes it with
///    a vertex from the other pocket block and that position falls outside
///    X (x) I, the expression has no value (nullopt).
///  - the join family's F1 and F2 matrices use F-block positions.
class PrintedFormulas {
 public:
  PrintedFormulas(const PocketSpec& spec, const StructuredOneInverse& structured);

  StructuredPath family() const { return family_; }

  /// Throws CaseMismatchError when (u, v) do not lie in the blocks the case
  /// names, or the case belongs to the other family. F-to-pocket cases
  /// accept either order; the H1/H2 cross cases are ordered.
  std::optional<double> resistance(PrintedCase c, Vertex u, Vertex v) const;

  /// Every printed case that speaks about the unordered pair {u, v}, with
  /// the argument order each expects.
  std::vector<CaseEvaluation> cases_for_pair(Vertex u, Vertex v) const;

  double kirchhoff() const { return kirchhoff_; }

 private:
  // [X (x) I_copies]_{a,b}; nullopt when out of range.
  std::optional<double> kron_entry(const Matrix& core, std::size_t a, std::size_t b) const;
  double f_entry(Vertex u, Vertex v) const;

  std::optional<double> all_attached(PrintedCase c, Vertex u, Vertex v) const;
  std::optional<double> join_attached(PrintedCase c, Vertex u, Vertex v) const;

  StructuredPath family_;
  BlockLayout layout_;
  Matrix f_block_;
  Matrix p_core_inv_;
  Matrix q_core_inv_;
  Matrix p_core_;
  Matrix q_core_;
  Matrix f1_shift_inv_;
  double f1_offset_ = 0.0;
  Matrix f2_inv_;
  double kirchhoff_ = 0.0;
};

}  // namespace pocket
