#include "liegeo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace liegeo {

namespace detail {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void ensure(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error(msg);
}

}  // namespace detail

Vec add(const Vec& u, const Vec& v) {
  detail::require(u.size() == v.size(), "vector size mismatch");
  Vec out(u.size());
  for (size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
  return out;
}

Vec sub(const Vec& u, const Vec& v) {
  detail::require(u.size() == v.size(), "vector size mismatch");
  Vec out(u.size());
  for (size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
  return out;
}

Vec scaled(const Vec& u, double c) {
  Vec out(u.size());
  for (size_t i = 0; i < u.size(); ++i) out[i] = c * u[i];
  return out;
}

double dot(const Vec& u, const Vec& v) {
  detail::require(u.size() == v.size(), "vector size mismatch");
  double s = 0.0;
  for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

double euclidean_norm(const Vec& u) { return std::sqrt(dot(u, u)); }

double max_abs(const Vec& u) {
  double m = 0.0;
  for (double x : u) m = std::max(m, std::fabs(x));
  return m;
}

bool all_finite(const Vec& u) {
  for (double x : u)
    if (!std::isfinite(x)) return false;
  return true;
}

Vec basis_vector(int n, int i) {
  Vec e(n, 0.0);
  e[i] = 1.0;
  return e;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols) {
  if (cols.empty()) return Mat();
  const int n = static_cast<int>(cols[0].size());
  Mat m(n, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    detail::require(static_cast<int>(cols[j].size()) == n, "ragged column list");
    for (int i = 0; i < n; ++i) m(i, static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat();
  const int n = static_cast<int>(rows[0].size());
  Mat m(static_cast<int>(rows.size()), n);
  for (size_t i = 0; i < rows.size(); ++i) {
    detail::require(static_cast<int>(rows[i].size()) == n, "ragged row list");
    for (int j = 0; j < n; ++j) m(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

Vec Mat::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Mat::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

void Mat::set_col(int j, const Vec& v) {
  detail::require(static_cast<int>(v.size()) == rows_, "column size mismatch");
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Mat Mat::transpose() const {
  Mat m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Mat Mat::operator*(const Mat& rhs) const {
  detail::require(cols_ == rhs.rows_, "matrix product size mismatch");
  Mat m(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const double aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < rhs.cols_; ++j) m(i, j) += aik * rhs(k, j);
    }
  return m;
}

Vec Mat::operator*(const Vec& v) const {
  detail::require(static_cast<int>(v.size()) == cols_, "matrix-vector size mismatch");
  Vec out(rows_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  detail::require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix sum size mismatch");
  Mat m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += rhs.a_[i];
  return m;
}

Mat Mat::operator-(const Mat& rhs) const {
  detail::require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix difference size mismatch");
  Mat m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= rhs.a_[i];
  return m;
}

Mat& Mat::operator*=(double c) {
  for (double& x : a_) x *= c;
  return *this;
}

double Mat::trace() const {
  double t = 0.0;
  const int n = std::min(rows_, cols_);
  for (int i = 0; i < n; ++i) t += (*this)(i, i);
  return t;
}

double Mat::max_abs() const {
  double m = 0.0;
  for (double x : a_) m = std::max(m, std::fabs(x));
  return m;
}

std::vector<Vec> Mat::cols_as_vectors() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (int j = 0; j < cols_; ++j) out.push_back(col(j));
  return out;
}

std::vector<Vec> Mat::rows_as_vectors() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

namespace {

double largest_column_norm(const Mat& a) {
  double m = 0.0;
  for (int j = 0; j < a.cols(); ++j) m = std::max(m, euclidean_norm(a.col(j)));
  return m;
}

struct Echelon {
  Mat r;                        // reduced row echelon form
  std::vector<int> pivot_cols;  // one per pivot row, in order
};

// Gauss-Jordan with partial (row) pivoting. Pivot accepted when its magnitude
// exceeds tol_rel * largest initial column norm.
Echelon reduced_echelon(Mat a, double tol_rel) {
  Echelon e;
  const double scale = largest_column_norm(a);
  const double thresh = tol_rel * scale;
  int piv_row = 0;
  for (int j = 0; j < a.cols() && piv_row < a.rows(); ++j) {
    int best = piv_row;
    for (int i = piv_row + 1; i < a.rows(); ++i)
      if (std::fabs(a(i, j)) > std::fabs(a(best, j))) best = i;
    if (std::fabs(a(best, j)) <= thresh) {
      for (int i = piv_row; i < a.rows(); ++i) a(i, j) = 0.0;
      continue;
    }
    if (best != piv_row)
      for (int k = 0; k < a.cols(); ++k) std::swap(a(best, k), a(piv_row, k));
    const double inv = 1.0 / a(piv_row, j);
    for (int k = 0; k < a.cols(); ++k) a(piv_row, k) *= inv;
    a(piv_row, j) = 1.0;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == piv_row) continue;
      const double f = a(i, j);
      if (f == 0.0) continue;
      for (int k = 0; k < a.cols(); ++k) a(i, k) -= f * a(piv_row, k);
      a(i, j) = 0.0;
    }
    e.pivot_cols.push_back(j);
    ++piv_row;
  }
  e.r = std::move(a);
  return e;
}

}  // namespace

int rank(const Mat& a, double tol_rel) {
  if (a.empty()) return 0;
  return static_cast<int>(reduced_echelon(a, tol_rel).pivot_cols.size());
}

Mat kernel_basis(const Mat& a, double tol_rel) {
  if (a.cols() == 0) return Mat(0, 0);
  if (a.rows() == 0) return Mat::identity(a.cols());
  const Echelon e = reduced_echelon(a, tol_rel);
  std::vector<int> free_cols;
  {
    size_t next_piv = 0;
    for (int j = 0; j < a.cols(); ++j) {
      if (next_piv < e.pivot_cols.size() && e.pivot_cols[next_piv] == j)
        ++next_piv;
      else
        free_cols.push_back(j);
    }
  }
  Mat k(a.cols(), static_cast<int>(free_cols.size()));
  for (size_t f = 0; f < free_cols.size(); ++f) {
    k(free_cols[f], static_cast<int>(f)) = 1.0;
    for (size_t p = 0; p < e.pivot_cols.size(); ++p)
      k(e.pivot_cols[p], static_cast<int>(f)) = -e.r(static_cast<int>(p), free_cols[f]);
  }
  return k;
}

Mat column_space_basis(const Mat& a, double tol_rel) {
  if (a.empty()) return Mat(a.rows(), 0);
  const Echelon e = reduced_echelon(a, tol_rel);
  Mat b(a.rows(), static_cast<int>(e.pivot_cols.size()));
  for (size_t p = 0; p < e.pivot_cols.size(); ++p) b.set_col(static_cast<int>(p), a.col(e.pivot_cols[p]));
  return b;
}

std::optional<Vec> solve_square(Mat a, Vec b) {
  detail::require(a.rows() == a.cols() && a.rows() == static_cast<int>(b.size()),
                  "solve_square wants a square system");
  const int n = a.rows();
  const double tiny = 1e-13 * std::max(1.0, a.max_abs());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int k = 0; k < n; ++k) {
    int best = k;
    for (int i = k + 1; i < n; ++i)
      if (std::fabs(a(i, k)) > std::fabs(a(best, k))) best = i;
    if (std::fabs(a(best, k)) < tiny) return std::nullopt;
    if (best != k) {
      for (int j = 0; j < n; ++j) std::swap(a(best, j), a(k, j));
      std::swap(b[best], b[k]);
    }
    for (int i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      if (f == 0.0) continue;
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  Vec x(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

CholeskyResult cholesky(const Mat& a) {
  CholeskyResult res;
  detail::require(a.rows() == a.cols(), "cholesky wants a square matrix");
  const int n = a.rows();
  Mat l(n, n);
  for (int j = 0; j < n; ++j) {
    double d = a(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) {
      res.first_bad_pivot = j;
      return res;
    }
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  res.positive_definite = true;
  res.lower = std::move(l);
  return res;
}

EigenSym jacobi_eigen_sym(const Mat& a) {
  detail::require(a.rows() == a.cols(), "eigendecomposition wants a square matrix");
  const int n = a.rows();
  Mat d = a;
  Mat v = Mat::identity(n);
  const double thresh = 1e-12 * std::max(1.0, a.max_abs());
  for (int sweep = 0; sweep < 30; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::fabs(d(p, q)));
    if (off <= thresh) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(d(p, q)) <= thresh) continue;
        const double theta = 0.5 * std::atan2(2.0 * d(p, q), d(q, q) - d(p, p));
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const double dpp = c * c * d(p, p) - 2.0 * s * c * d(p, q) + s * s * d(q, q);
        const double dqq = s * s * d(p, p) + 2.0 * s * c * d(p, q) + c * c * d(q, q);
        d(p, p) = dpp;
        d(q, q) = dqq;
        d(p, q) = d(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double drp = d(r, p);
            const double drq = d(r, q);
            d(r, p) = d(p, r) = c * drp - s * drq;
            d(r, q) = d(q, r) = s * drp + c * drq;
          }
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }
  // ascending eigenvalue order, deterministic sign
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (d(i, i) != d(j, j)) return d(i, i) < d(j, j);
    return i < j;
  });
  EigenSym out;
  out.values.resize(n);
  out.vectors = Mat(n, n);
  for (int k = 0; k < n; ++k) {
    const int src = order[k];
    out.values[k] = d(src, src);
    Vec col = v.col(src);
    for (int i = 0; i < n; ++i) {
      if (std::fabs(col[i]) > 1e-12) {
        if (col[i] < 0.0) col = scaled(col, -1.0);
        break;
      }
    }
    out.vectors.set_col(k, col);
  }
  return out;
}

}  // namespace liegeo
