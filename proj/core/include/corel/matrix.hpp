#pragma once

// Dense matrices over an exact scalar domain plus the field algorithms
// (reduced row echelon form, kernels, exact solves) shared by the linear
// engines.  Column-vector convention throughout: a matrix with c columns
// and r rows is a morphism c -> r, and composition is matrix product.

#include <optional>
#include <vector>

#include "corel/diagrams.hpp"

namespace corel {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix from_rows(std::vector<std::vector<T>> rows, int cols_hint = -1) {
    const int r = static_cast<int>(rows.size());
    const int c = r > 0 ? static_cast<int>(rows[0].size()) : (cols_hint < 0 ? 0 : cols_hint);
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c)
        throw DimensionError("ragged matrix rows");
      for (int j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // morphism reading: cols -> rows
  int dom() const { return cols_; }
  int cod() const { return rows_; }

  T& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix row_slice(int from, int to) const {
    Matrix out(to - from, cols_);
    for (int i = from; i < to; ++i)
      for (int j = 0; j < cols_; ++j) out.at(i - from, j) = at(i, j);
    return out;
  }

  Matrix col_slice(int from, int to) const {
    Matrix out(rows_, to - from);
    for (int i = 0; i < rows_; ++i)
      for (int j = from; j < to; ++j) out.at(i, j - from) = at(i, j);
    return out;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (std::size_t k = 0; k < x.a_.size(); ++k)
      if (!(x.a_[k] == y.a_[k])) return false;
    return true;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> a_;
};

template <typename T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack: row counts differ");
  Matrix<T> out(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

template <typename T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack: column counts differ");
  Matrix<T> out(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

// --- ring-generic helpers -------------------------------------------------

template <typename R>
Matrix<typename R::Scalar> mat_zero(const R& ring, int rows, int cols) {
  Matrix<typename R::Scalar> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = ring.zero();
  return m;
}

template <typename R>
Matrix<typename R::Scalar> mat_identity(const R& ring, int n) {
  auto m = mat_zero(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

template <typename R>
Matrix<typename R::Scalar> mat_mul(const R& ring, const Matrix<typename R::Scalar>& a,
                                   const Matrix<typename R::Scalar>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  auto out = mat_zero(ring, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (ring.is_zero(a.at(i, k))) continue;
      for (int j = 0; j < b.cols(); ++j)
        out.at(i, j) = ring.add(out.at(i, j), ring.mul(a.at(i, k), b.at(k, j)));
    }
  return out;
}

template <typename R>
Matrix<typename R::Scalar> mat_neg(const R& ring, const Matrix<typename R::Scalar>& a) {
  Matrix<typename R::Scalar> out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = ring.neg(a.at(i, j));
  return out;
}

// Block-diagonal direct sum.
template <typename R>
Matrix<typename R::Scalar> mat_direct_sum(const R& ring, const Matrix<typename R::Scalar>& a,
                                          const Matrix<typename R::Scalar>& b) {
  auto out = mat_zero(ring, a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

template <typename R>
bool mat_is_zero(const R& ring, const Matrix<typename R::Scalar>& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!ring.is_zero(a.at(i, j))) return false;
  return true;
}

// --- field algorithms -----------------------------------------------------

template <typename T>
struct RrefResult {
  Matrix<T> mat;
  int rank = 0;
  std::vector<int> pivots;
};

// Reduced row echelon form; deterministic (first nonzero pivot), zero rows
// sink to the bottom.  Unique representative of the left-GL orbit.
template <typename F>
RrefResult<typename F::Scalar> rref(const F& f, Matrix<typename F::Scalar> m) {
  using T = typename F::Scalar;
  int r = 0;
  std::vector<int> pivots;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!f.is_zero(m.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    const T lead = m.at(r, col);
    for (int j = col; j < m.cols(); ++j) m.at(r, j) = f.div(m.at(r, j), lead);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m.at(i, col))) continue;
      const T factor = m.at(i, col);
      for (int j = col; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    pivots.push_back(col);
    ++r;
  }
  return RrefResult<T>{std::move(m), r, std::move(pivots)};
}

template <typename F>
int mat_rank(const F& f, const Matrix<typename F::Scalar>& m) {
  return rref(f, m).rank;
}

// RREF with zero rows removed: the canonical basis of the row space.
template <typename F>
Matrix<typename F::Scalar> row_space_basis(const F& f, const Matrix<typename F::Scalar>& m) {
  auto r = rref(f, m);
  return r.mat.row_slice(0, r.rank);
}

// Columns span ker(m); the basis is canonicalised so kernels compare by
// equality (row-space normal form of the transpose).
template <typename F>
Matrix<typename F::Scalar> kernel_basis(const F& f, const Matrix<typename F::Scalar>& m) {
  auto r = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivots) is_pivot[c] = true;
  const int d = m.cols() - r.rank;
  auto k = mat_zero(f, m.cols(), d);
  int col = 0;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    k.at(j, col) = f.one();
    for (int i = 0; i < r.rank; ++i)
      k.at(r.pivots[i], col) = f.neg(r.mat.at(i, j));
    ++col;
  }
  return row_space_basis(f, k.transpose()).transpose();
}

// Solve X * A = B exactly; nullopt when inconsistent.
template <typename F>
std::optional<Matrix<typename F::Scalar>> solve_right(const F& f,
                                                      const Matrix<typename F::Scalar>& a,
                                                      const Matrix<typename F::Scalar>& b) {
  // X A = B  <=>  A^T X^T = B^T
  auto at = a.transpose();
  auto bt = b.transpose();
  if (at.rows() != bt.rows()) throw DimensionError("solve: shape mismatch");
  auto aug = rref(f, hstack(at, bt));
  const int n = at.cols();
  // Inconsistent iff some pivot falls in the right block.
  for (int c : aug.pivots)
    if (c >= n) return std::nullopt;
  auto xt = mat_zero(f, n, bt.cols());
  for (int i = 0; i < aug.rank; ++i)
    for (int j = 0; j < bt.cols(); ++j) xt.at(aug.pivots[i], j) = aug.mat.at(i, n + j);
  return xt.transpose();
}

// Solve A * X = B exactly; nullopt when inconsistent.
template <typename F>
std::optional<Matrix<typename F::Scalar>> solve_left(const F& f,
                                                     const Matrix<typename F::Scalar>& a,
                                                     const Matrix<typename F::Scalar>& b) {
  auto sol = solve_right(f, a.transpose(), b.transpose());
  if (!sol) return std::nullopt;
  return sol->transpose();
}

}  // namespace corel
