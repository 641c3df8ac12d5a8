#pragma once

#include <optional>
#include <string>
#include <vector>

namespace liegeo {

/// Coordinate column in the fixed reference basis.
using Vec = std::vector<double>;

Vec add(const Vec& u, const Vec& v);
Vec sub(const Vec& u, const Vec& v);
Vec scaled(const Vec& u, double c);
double dot(const Vec& u, const Vec& v);
double euclidean_norm(const Vec& u);
double max_abs(const Vec& u);
bool all_finite(const Vec& u);
Vec basis_vector(int n, int i);

/// Dense row-major matrix. Everything in this library lives in dimension
/// n <= ~10, so no effort is spent on blocking or views.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}

  static Mat identity(int n);
  static Mat from_cols(const std::vector<Vec>& cols);
  static Mat from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Vec col(int j) const;
  Vec row(int i) const;
  void set_col(int j, const Vec& v);

  Mat transpose() const;
  Mat operator*(const Mat& rhs) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  Mat& operator*=(double c);

  double trace() const;
  double max_abs() const;

  std::vector<Vec> cols_as_vectors() const;
  std::vector<Vec> rows_as_vectors() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

/// Rank of `a` by Gaussian elimination with partial pivoting. A pivot is
/// accepted when its magnitude exceeds tol_rel * (largest column norm of a).
int rank(const Mat& a, double tol_rel);

/// Basis of the null space of `a` (columns of the result), from the reduced
/// echelon form at the same relative pivot threshold. Empty matrix when the
/// kernel is trivial.
Mat kernel_basis(const Mat& a, double tol_rel);

/// The pivot columns of `a` themselves (not their eliminated images), so the
/// returned spanning set consists of actual input columns.
Mat column_space_basis(const Mat& a, double tol_rel);

/// Solves a square system by LU with partial pivoting; nullopt when a pivot
/// falls below 1e-13 relative to the matrix scale.
std::optional<Vec> solve_square(Mat a, Vec b);

struct CholeskyResult {
  bool positive_definite = false;
  int first_bad_pivot = -1;   // 0-based index of the first non-positive pivot
  Mat lower;                  // valid only when positive_definite
};

/// Cholesky factorization of a symmetric matrix, used as the SPD test.
CholeskyResult cholesky(const Mat& a);

struct EigenSym {
  Vec values;   // ascending
  Mat vectors;  // columns, orthonormal, sign-normalized (first nonzero entry positive)
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Off-diagonal
/// threshold 1e-12 relative to the matrix scale, at most 30 sweeps.
EigenSym jacobi_eigen_sym(const Mat& a);

namespace detail {
void require(bool cond, const std::string& msg);  // throws std::invalid_argument
void ensure(bool cond, const std::string& msg);   // throws std::logic_error
}  // namespace detail

}  // namespace liegeo
