#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pocket {

/// Raised when a pivot falls below the relative singularity threshold.
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the cyclic rotation solver exhausts its sweep budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major real matrix. Zero rows or columns are legal values.
///
/// Symmetric operands (Laplacians, their generalized inverses, the D block
/// and its pieces) are carried in the same type; `is_symmetric` checks the
/// invariant where a caller depends on it.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix ones(std::size_t rows, std::size_t cols);
  static Matrix diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> values() const { return data_; }

  Matrix transpose() const;

  /// Copy of the rows x cols window starting at (r0, c0).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& src);

  double max_abs() const;
  double trace() const;
  /// Sum of all entries, accumulated row-major (1^T M 1).
  double sum() const;
  bool is_symmetric(double rel_tol = 1e-12) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= -1.0; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// max_ij |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);

std::string to_string(const Matrix& m);

/// Gauss-Jordan inverse with partial pivoting. Throws SingularMatrixError
/// when a pivot is below 1e-12 times the largest entry of the input.
Matrix invert(const Matrix& m);

/// Inverse of [A B; C D] assembled from its blocks via the Schur complement
/// S = D - C A^-1 B:
///
///   [ (A - B D^-1 C)^-1    -A^-1 B S^-1 ]
///   [ -S^-1 C A^-1          S^-1        ]
///
/// A and D must be square and nonsingular. Either may be 0x0.
Matrix block_inverse(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

/// Group inverse of L + aI - (a/n)J for a Laplacian L and a > 0, computed
/// as (L + aI)^-1 - J/(a n).
Matrix shifted_group_inverse(const Matrix& laplacian, double a);

/// Group (= Moore-Penrose) inverse of a connected-graph Laplacian through
/// the rank correction (L + J/n)^-1 - J/n. Accepts weighted Laplacians such
/// as Schur complements of graph Laplacians. A disconnected graph makes
/// L + J/n singular and surfaces as SingularMatrixError.
Matrix pseudo_inverse_laplacian(const Matrix& laplacian);

/// Ascending eigenvalues of a symmetric matrix.
struct Spectrum {
  std::vector<double> eigenvalues;

  std::size_t size() const { return eigenvalues.size(); }
  double sum() const;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops to
/// 1e-12 (scaled by the matrix norm when that exceeds one).
Spectrum eigenvalues_sym(const Matrix& m);

/// Kronecker product; block (i, j) of the result is a(i, j) * b, so the
/// second factor's index varies fastest.
Matrix kron(const Matrix& a, const Matrix& b);

/// True iff max |L X L - L| <= tol.
bool is_one_inverse(const Matrix& l, const Matrix& x, double tol);
double one_inverse_residual(const Matrix& l, const Matrix& x);

}  // namespace pocket
