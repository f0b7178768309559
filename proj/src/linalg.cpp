#include "pocket/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

namespace pocket {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
  }
}

constexpr double kSingularRelTol = 1e-12;
constexpr int kMaxJacobiSweeps = 100;

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::ones(std::size_t rows, std::size_t cols) { return Matrix(rows, cols, 1.0); }

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw std::out_of_range("Matrix::block");
  Matrix b(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>((r0 + r) * cols_ + c0), cols,
                b.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& src) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw std::out_of_range("Matrix::set_block");
  for (std::size_t r = 0; r < src.rows_; ++r)
    std::copy_n(src.data_.begin() + static_cast<std::ptrdiff_t>(r * src.cols_), src.cols_,
                data_.begin() + static_cast<std::ptrdiff_t>((r0 + r) * cols_ + c0));
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::sum() const { return std::accumulate(data_.begin(), data_.end(), 0.0); }

bool Matrix::is_symmetric(double rel_tol) const {
  if (!square()) return false;
  const double tol = rel_tol * std::max(1.0, max_abs());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (std::abs((*this)(r, c) - (*this)(c, r)) > tol) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("operator*: inner dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    double* out_row = out.data_.data() + i * out.cols_;
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      const double* b_row = b.data_.data() + k * b.cols_;
      for (std::size_t j = 0; j < b.cols_; ++j) out_row[j] += aik * b_row[j];
    }
  }
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  auto av = a.values();
  auto bv = b.values();
  for (std::size_t i = 0; i < av.size(); ++i) m = std::max(m, std::abs(av[i] - bv[i]));
  return m;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix invert(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("invert: matrix is not square");
  const std::size_t n = m.rows();
  Matrix a = m;
  if (n == 0) return a;
  const double threshold = kSingularRelTol * m.max_abs();
  std::vector<std::size_t> pivot_row(n);

  // In-place Gauss-Jordan; row interchanges are undone as column swaps.
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        p = i;
      }
    }
    if (best < threshold || best == 0.0) {
      throw SingularMatrixError("invert: pivot " + std::to_string(best) + " in column " +
                                std::to_string(k) + " below singularity threshold");
    }
    pivot_row[k] = p;
    if (p != k) std::swap_ranges(a.row(k).begin(), a.row(k).end(), a.row(p).begin());

    const double inv = 1.0 / a(k, k);
    a(k, k) = 1.0;
    for (double& v : a.row(k)) v *= inv;
    auto pivot = a.row(k);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const double f = a(i, k);
      if (f == 0.0) continue;
      a(i, k) = 0.0;
      auto target = a.row(i);
      for (std::size_t j = 0; j < n; ++j) target[j] -= f * pivot[j];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    if (pivot_row[k] == k) continue;
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k), a(r, pivot_row[k]));
  }
  return a;
}

Matrix block_inverse(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  if (!a.square() || !d.square()) throw std::invalid_argument("block_inverse: A and D must be square");
  if (b.rows() != a.rows() || b.cols() != d.rows() || c.rows() != d.rows() || c.cols() != a.cols()) {
    throw std::invalid_argument("block_inverse: block shapes do not conform");
  }
  const std::size_t na = a.rows();
  const std::size_t nd = d.rows();
  if (nd == 0) return invert(a);
  if (na == 0) return invert(d);

  const Matrix a_inv = invert(a);
  const Matrix d_inv = invert(d);
  const Matrix s_inv = invert(d - c * a_inv * b);
  const Matrix top_left = invert(a - b * d_inv * c);
  const Matrix top_right = -(a_inv * b * s_inv);
  const Matrix bottom_left = -(s_inv * c * a_inv);

  Matrix out(na + nd, na + nd);
  out.set_block(0, 0, top_left);
  out.set_block(0, na, top_right);
  out.set_block(na, 0, bottom_left);
  out.set_block(na, na, s_inv);
  return out;
}

Matrix shifted_group_inverse(const Matrix& laplacian, double a) {
  if (!laplacian.square()) throw std::invalid_argument("shifted_group_inverse: not square");
  if (!(a > 0.0)) throw std::invalid_argument("shifted_group_inverse: shift must be positive");
  const std::size_t n = laplacian.rows();
  if (n == 0) return laplacian;
  Matrix shifted = laplacian + a * Matrix::identity(n);
  return invert(shifted) - (1.0 / (a * static_cast<double>(n))) * Matrix::ones(n, n);
}

Matrix pseudo_inverse_laplacian(const Matrix& laplacian) {
  if (!laplacian.square()) throw std::invalid_argument("pseudo_inverse_laplacian: not square");
  const std::size_t n = laplacian.rows();
  if (n == 0) return laplacian;
  const Matrix j_over_n = (1.0 / static_cast<double>(n)) * Matrix::ones(n, n);
  try {
    return invert(laplacian + j_over_n) - j_over_n;
  } catch (const SingularMatrixError& e) {
    throw SingularMatrixError(std::string("pseudo_inverse_laplacian: graph is disconnected (") +
                              e.what() + ")");
  }
}

double Spectrum::sum() const {
  return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
}

Spectrum eigenvalues_sym(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("eigenvalues_sym: not square");
  if (!m.is_symmetric(1e-9)) throw std::invalid_argument("eigenvalues_sym: not symmetric");
  const std::size_t n = m.rows();
  Matrix a = m;
  double frob = 0.0;
  for (double v : m.values()) frob += v * v;
  const double tol = 1e-12 * std::max(1.0, std::sqrt(frob));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += 2.0 * a(p, q) * a(p, q);
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; sweep < kMaxJacobiSweeps && off_norm() > tol; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double g = a(r, p);
          const double h = a(r, q);
          a(r, p) = a(p, r) = c * g - s * h;
          a(r, q) = a(q, r) = s * g + c * h;
        }
      }
    }
  }
  if (off_norm() > tol) {
    throw ConvergenceError("eigenvalues_sym: no convergence after " + std::to_string(sweep) + " sweeps");
  }

  Spectrum spec;
  spec.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) spec.eigenvalues[i] = a(i, i);
  std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end());
  return spec;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          out(i * b.rows() + r, j * b.cols() + c) = aij * b(r, c);
    }
  return out;
}

double one_inverse_residual(const Matrix& l, const Matrix& x) {
  if (!l.square() || l.rows() != x.rows() || x.rows() != x.cols()) {
    throw std::invalid_argument("one_inverse_residual: dimension mismatch");
  }
  return max_abs_diff(l * x * l, l);
}

bool is_one_inverse(const Matrix& l, const Matrix& x, double tol) {
  return one_inverse_residual(l, x) <= tol;
}

}  // namespace pocket
