#pragma once

// Dense exact matrices over RationalField / PrimeField and row-reduced
// subspaces of coordinate spaces.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/field.hpp"

namespace hecke {

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix diagonal(const F& field, const Vec<F>& entries) {
    Matrix m(field, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  /// Rows given as integers, e.g. from_ints(f, {{1, 0}, {0, -1}}).
  static Matrix from_ints(const F& field, std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
      std::size_t j = 0;
      for (long long v : row) m(i, j++) = field.from_int(v);
      ++i;
    }
    return m;
  }

  static Matrix from_rows(const F& field, const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(Errc::DimensionMismatch, "row length differs from ambient dimension");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<F> row(std::size_t i) const {
    return Vec<F>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  Vec<F> col(std::size_t j) const {
    Vec<F> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  bool is_zero() const {
    for (const auto& e : data_) {
      if (!field_.is_zero(e)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Matrix operator*(const Elem& c, Matrix a) {
    for (auto& e : a.data_) e *= c;
    return a;
  }

  /// Skips zero entries of the left factor; Kronecker-structured operators
  /// are mostly zero.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Elem& aik = a(i, k);
        if (a.field_.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!a.field_.is_zero(b(k, j))) c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend Vec<F> operator*(const Matrix& a, const Vec<F>& v) {
    if (a.cols_ != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector shape mismatch");
    Vec<F> out(a.rows_, a.field_.zero());
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (a.field_.is_zero(v[j])) continue;
      for (std::size_t i = 0; i < a.rows_; ++i) {
        if (!a.field_.is_zero(a(i, j))) out[i] += a(i, j) * v[j];
      }
    }
    return out;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "matrix shapes differ");
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Kronecker product; block (i, j) of the result is A(i, j) * B. For 3x3
/// factors this realizes e_i (x) e_j at flat index 3 i + j (0-based).
template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
  if (!(a.field() == b.field())) throw Error(Errc::FieldMismatch, "kron of matrices over different fields");
  const F& f = a.field();
  Matrix<F> k(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (f.is_zero(a(i, j))) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s) k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
    }
  return k;
}

template <class F>
Vec<F> kron(const Vec<F>& a, const Vec<F>& b) {
  Vec<F> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

template <class F>
struct RowEchelon {
  Matrix<F> reduced;                // reduced row-echelon form, same shape as the input
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination to the canonical reduced row-echelon form.
template <class F>
RowEchelon<F> rref(Matrix<F> m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    typename F::Elem inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      typename F::Elem factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!f.is_zero(m(r, j))) m(i, j) -= factor * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank();
}

/// Basis (as rows) of the right kernel {x : m x = 0}.
template <class F>
Matrix<F> nullspace(const Matrix<F>& m) {
  const F& f = m.field();
  auto ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Matrix<F>::from_rows(f, basis, m.cols());
}

template <class F>
typename F::Elem determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
  const F& f = m.field();
  typename F::Elem det = f.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && f.is_zero(m(piv, c))) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    typename F::Elem inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(m(i, c))) continue;
      typename F::Elem factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
  const F& f = m.field();
  const std::size_t n = m.rows();
  Matrix<F> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto ech = rref(std::move(aug));
  if (n > 0 && ech.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

/// Coordinates c with sum_i c_i * basis.row(i) = target, or nullopt if the
/// target is outside the row span. Rows of `basis` must be independent.
template <class F>
std::optional<Vec<F>> solve_coords(const Matrix<F>& basis, const Vec<F>& target) {
  const F& f = basis.field();
  if (target.size() != basis.cols()) throw Error(Errc::DimensionMismatch, "target length differs from basis width");
  const std::size_t k = basis.rows();
  Matrix<F> aug(f, basis.cols(), k + 1);
  for (std::size_t i = 0; i < basis.cols(); ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = basis(j, i);
    aug(i, k) = target[i];
  }
  auto ech = rref(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == k) return std::nullopt;
  if (ech.rank() < k) throw Error(Errc::InvalidParameter, "basis rows are linearly dependent");
  Vec<F> coords(k, f.zero());
  for (std::size_t r = 0; r < k; ++r) coords[r] = ech.reduced(r, k);
  return coords;
}

// ---------------------------------------------------------------------------

/// A subspace of F^n stored by its canonical RREF basis, so equality of
/// subspaces is entry-wise equality of bases.
template <class F>
class Subspace {
 public:
  Subspace(const F& field, std::size_t ambient_dim) : basis_(field, 0, ambient_dim) {}

  /// Row span of an arbitrary matrix.
  static Subspace row_span(const Matrix<F>& m) {
    auto ech = rref(m);
    Subspace s(m.field(), m.cols());
    Matrix<F> b(m.field(), ech.rank(), m.cols());
    for (std::size_t i = 0; i < ech.rank(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = ech.reduced(i, j);
    s.basis_ = std::move(b);
    return s;
  }

  static Subspace column_span(const Matrix<F>& m) { return row_span(m.transpose()); }

  const F& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }

  bool contains(const Vec<F>& v) const { return solve_coords(basis_, v).has_value(); }

  /// Image under a linear map given as a matrix acting on column vectors.
  Subspace image(const Matrix<F>& map) const {
    if (map.cols() != ambient_dim()) throw Error(Errc::DimensionMismatch, "map domain differs from ambient space");
    return column_span(map * basis_.transpose());
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Matrix<F> basis_;
};

template <class F>
Subspace<F> span(const F& field, const std::vector<Vec<F>>& vectors, std::size_t ambient_dim) {
  if (vectors.empty()) return Subspace<F>(field, ambient_dim);
  return Subspace<F>::row_span(Matrix<F>::from_rows(field, vectors, ambient_dim));
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& u, const Subspace<F>& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(Errc::DimensionMismatch, "subspaces of different spaces");
  Matrix<F> stacked(u.field(), u.dim() + w.dim(), u.ambient_dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < u.ambient_dim(); ++j) stacked(i, j) = u.basis()(i, j);
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < w.ambient_dim(); ++j) stacked(u.dim() + i, j) = w.basis()(i, j);
  return Subspace<F>::row_span(stacked);
}

/// Intersection from the kernel of the stacked system sum a_i u_i - sum b_j w_j = 0.
template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& u, const Subspace<F>& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(Errc::DimensionMismatch, "subspaces of different spaces");
  const F& f = u.field();
  const std::size_t n = u.ambient_dim();
  if (u.dim() == 0 || w.dim() == 0) return Subspace<F>(f, n);
  Matrix<F> system(f, n, u.dim() + w.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) system(j, i) = u.basis()(i, j);
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) system(j, u.dim() + i) = -w.basis()(i, j);
  Matrix<F> kernel = nullspace(system);
  std::vector<Vec<F>> vecs;
  for (std::size_t k = 0; k < kernel.rows(); ++k) {
    Vec<F> v(n, f.zero());
    for (std::size_t i = 0; i < u.dim(); ++i) {
      if (f.is_zero(kernel(k, i))) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] += kernel(k, i) * u.basis()(i, j);
    }
    vecs.push_back(std::move(v));
  }
  auto result = span(f, vecs, n);
  if (result.dim() + subspace_sum(u, w).dim() != u.dim() + w.dim()) {
    throw Error(Errc::InternalInvariant, "dimension formula violated by intersection");
  }
  return result;
}

template <class F>
bool subspace_equal(const Subspace<F>& u, const Subspace<F>& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(Errc::DimensionMismatch, "subspaces of different spaces");
  return u == w;
}

}  // namespace hecke
