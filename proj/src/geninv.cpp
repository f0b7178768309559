#include "pocket/geninv.hpp"

#include <numeric>

namespace pocket {

namespace {

// Gauss-Jordan output of a symmetric input is symmetric only up to rounding;
// the assembled {1}-inverse must be exactly symmetric.
Matrix symmetrized(const Matrix& m) {
  Matrix s = m;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r + 1; c < m.cols(); ++c) s(r, c) = s(c, r) = 0.5 * (m(r, c) + m(c, r));
  return s;
}

// Writes `upper` at (r0, c0) and its transpose at (c0, r0).
void set_symmetric_pair(Matrix& out, std::size_t r0, std::size_t c0, const Matrix& upper) {
  out.set_block(r0, c0, upper);
  out.set_block(c0, r0, upper.transpose());
}

// 1_rows (x) I_copies, a (rows * copies) x copies stack of identities.
Matrix stacked_identity(std::size_t rows, std::size_t copies) {
  return kron(Matrix::ones(rows, 1), Matrix::identity(copies));
}

}  // namespace

Matrix one_inverse_partitioned(const Matrix& a, const Matrix& b, const Matrix& d) {
  if (!a.square() || !d.square() || b.rows() != a.rows() || b.cols() != d.rows()) {
    throw std::invalid_argument("one_inverse_partitioned: block shapes do not conform");
  }
  const std::size_t na = a.rows();
  const std::size_t nd = d.rows();
  const Matrix d_inv = symmetrized(invert(d));
  const Matrix bt = b.transpose();
  const Matrix h = a - b * d_inv * bt;
  const Matrix h_sharp = symmetrized(pseudo_inverse_laplacian(symmetrized(h)));
  const Matrix coupling = -(h_sharp * b * d_inv);  // na x nd

  Matrix x(na + nd, na + nd);
  x.set_block(0, 0, h_sharp);
  set_symmetric_pair(x, 0, na, coupling);
  x.set_block(na, na, symmetrized(d_inv + d_inv * bt * h_sharp * b * d_inv));
  return x;
}

Matrix PocketDInverse::assembled() const {
  const std::size_t top = p_inv.rows();
  const std::size_t bottom = q_inv.rows();
  Matrix out(top + bottom, top + bottom);
  out.set_block(0, 0, p_inv);
  set_symmetric_pair(out, 0, top, coupling);
  out.set_block(top, top, q_inv);
  return out;
}

PocketDInverse pocket_d_inverse(const Graph& h1, const Graph& h2, std::size_t copies) {
  const std::size_t l = h1.order();
  const std::size_t rest = h2.order();
  if (l == 0) throw StructureError("pocket_d_inverse: H1 must be non-empty (l >= 1)");
  if (copies == 0) throw StructureError("pocket_d_inverse: need at least one copy");
  const double ld = static_cast<double>(l);
  const double rd = static_cast<double>(rest);

  const Matrix p_core = laplacian(h1) + (rd + 1.0) * Matrix::identity(l) - (rd / ld) * Matrix::ones(l, l);
  const Matrix q_core =
      laplacian(h2) + ld * Matrix::identity(rest) - (ld / (rd + 1.0)) * Matrix::ones(rest, rest);

  PocketDInverse d;
  d.copies = copies;
  d.p_core_inv = symmetrized(invert(p_core));
  d.q_core_inv = symmetrized(invert(q_core));
  const Matrix id = Matrix::identity(copies);
  d.p_inv = kron(d.p_core_inv, id);
  d.q_inv = kron(d.q_core_inv, id);
  d.coupling = kron((1.0 / ld) * Matrix::ones(l, rest), id);
  return d;
}

Matrix pocket_d_matrix(const Graph& h1, const Graph& h2, std::size_t copies) {
  const std::size_t l = h1.order();
  const std::size_t rest = h2.order();
  const Matrix id = Matrix::identity(copies);
  const Matrix top = kron(laplacian(h1) + static_cast<double>(rest + 1) * Matrix::identity(l), id);
  const Matrix bottom = kron(laplacian(h2) + static_cast<double>(l) * Matrix::identity(rest), id);
  const Matrix cross = kron(-Matrix::ones(l, rest), id);
  Matrix d(top.rows() + bottom.rows(), top.rows() + bottom.rows());
  d.set_block(0, 0, top);
  set_symmetric_pair(d, 0, top.rows(), cross);
  d.set_block(top.rows(), top.rows(), bottom);
  return d;
}

std::string_view to_string(StructuredPath p) {
  return p == StructuredPath::AllAttached ? "all_attached" : "join_attached";
}

StructuredOneInverse all_attached_one_inverse(const PocketSpec& spec) {
  spec.validate();
  if (spec.k() != spec.n()) {
    throw StructureError("all-attached construction needs a pocket on every F vertex (k = n)");
  }
  const std::size_t n = spec.n();
  const std::size_t l = spec.l();
  const std::size_t rest = spec.m() - l;

  // F in F-block order: position i is attach[i].
  const Graph f_block = spec.f.induced(spec.attach);
  const Matrix f_sharp = symmetrized(pseudo_inverse_laplacian(laplacian(f_block)));
  PocketDInverse d = pocket_d_inverse(spec.h1, spec.h2, n);

  const Matrix lift_h1 = stacked_identity(l, n);     // 1_l (x) I_n
  const Matrix lift_h2 = stacked_identity(rest, n);  // 1_{m-l} (x) I_n
  const Matrix f_h1 = f_sharp * lift_h1.transpose();
  const Matrix f_h2 = f_sharp * lift_h2.transpose();

  BlockLayout layout(n, n, l, spec.m(), spec.attach);
  const std::size_t o1 = layout.offset(Block::H1);
  const std::size_t o2 = layout.offset(Block::H2);

  Matrix x(layout.total_order(), layout.total_order());
  x.set_block(0, 0, f_sharp);
  set_symmetric_pair(x, 0, o1, f_h1);
  set_symmetric_pair(x, 0, o2, f_h2);
  x.set_block(o1, o1, d.p_inv + lift_h1 * f_h1);
  set_symmetric_pair(x, o1, o2, d.coupling + lift_h1 * f_h2);
  x.set_block(o2, o2, d.q_inv + lift_h2 * f_h2);

  return {StructuredPath::AllAttached, std::move(x), std::move(layout), {f_sharp, Matrix{}, std::move(d)}};
}

StructuredOneInverse join_attached_one_inverse(const Graph& f1, const Graph& f2, const Graph& h1,
                                               const Graph& h2) {
  const std::size_t k = f1.order();
  const std::size_t rest_f = f2.order();
  if (k == 0) throw StructureError("join-attached construction needs k >= 1");
  if (rest_f == 0) {
    throw StructureError("join-attached construction needs n - k >= 1; use the all-attached path");
  }
  if (h1.order() == 0) throw StructureError("H1 must have at least one vertex (l >= 1)");
  const std::size_t n = k + rest_f;
  const std::size_t l = h1.order();
  const std::size_t m = l + h2.order();
  const std::size_t rest = m - l;

  // Shifted group inverse: (L(F1) + (n-k)I - ((n-k)/k)J)# = (L(F1) + (n-k)I)^-1 - J/(k(n-k)).
  const Matrix h_sharp = symmetrized(shifted_group_inverse(laplacian(f1), static_cast<double>(rest_f)));
  const Matrix f2_inv =
      symmetrized(invert(laplacian(f2) + static_cast<double>(k) * Matrix::identity(rest_f)));
  PocketDInverse d = pocket_d_inverse(h1, h2, k);

  const Matrix spread_h1 = stacked_identity(l, k).transpose();     // 1_l^T (x) I_k
  const Matrix spread_h2 = stacked_identity(rest, k).transpose();  // 1_{m-l}^T (x) I_k
  const Matrix hs_h1 = h_sharp * spread_h1;
  const Matrix hs_h2 = h_sharp * spread_h2;

  std::vector<Vertex> f_vertices(n);
  std::iota(f_vertices.begin(), f_vertices.end(), Vertex{0});
  BlockLayout layout(n, k, l, m, std::move(f_vertices));
  const std::size_t o1 = layout.offset(Block::H1);
  const std::size_t o2 = layout.offset(Block::H2);

  Matrix x(layout.total_order(), layout.total_order());
  x.set_block(0, 0, h_sharp);
  set_symmetric_pair(x, 0, k, (1.0 / static_cast<double>(k)) * (h_sharp * Matrix::ones(k, rest_f)));
  set_symmetric_pair(x, 0, o1, hs_h1);
  set_symmetric_pair(x, 0, o2, hs_h2);
  x.set_block(k, k, f2_inv);
  x.set_block(o1, o1, d.p_inv + spread_h1.transpose() * hs_h1);
  set_symmetric_pair(x, o1, o2, spread_h1.transpose() * hs_h2 + d.coupling);
  x.set_block(o2, o2, d.q_inv + spread_h2.transpose() * hs_h2);

  return {StructuredPath::JoinAttached, std::move(x), std::move(layout), {h_sharp, f2_inv, std::move(d)}};
}

StructuredOneInverse structured_one_inverse(const PocketSpec& spec) {
  spec.validate();
  if (spec.k() == spec.n()) return all_attached_one_inverse(spec);

  JoinParts parts = split_join(spec.f, spec.attach);
  StructuredOneInverse result = join_attached_one_inverse(parts.first, parts.second, spec.h1, spec.h2);
  std::vector<Vertex> order = parts.first_vertices;
  order.insert(order.end(), parts.second_vertices.begin(), parts.second_vertices.end());
  result.layout = BlockLayout(spec.n(), spec.k(), spec.l(), spec.m(), std::move(order));
  return result;
}

Matrix leading_schur_complement(const Matrix& m, std::size_t leading) {
  if (!m.square() || leading > m.rows()) throw std::invalid_argument("leading_schur_complement: bad split");
  const std::size_t tail = m.rows() - leading;
  const Matrix a = m.block(0, 0, leading, leading);
  const Matrix b = m.block(0, leading, leading, tail);
  const Matrix d = m.block(leading, leading, tail, tail);
  return a - b * invert(d) * b.transpose();
}

}  // namespace pocket
