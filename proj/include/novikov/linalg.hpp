#pragma once

// Exact dense linear algebra over any field scalar usable in Eigen (here: Rational).
// Everything is plain Gaussian elimination without pivot heuristics: the scalar is exact.

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "novikov/error.hpp"
#include "novikov/rational.hpp"

namespace novikov {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = MatrixX<Rational>;
using Vec = VectorX<Rational>;
using Index = Eigen::Index;

template <typename T>
inline bool is_zero_scalar(const T& x) {
  return x == T(0);
}
inline bool is_zero_scalar(const Rational& x) { return x.is_zero(); }

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero_scalar(m(i, j))) return false;
  return true;
}

// Product that skips zero entries; structure-constant matrices are mostly zero.
template <typename DA, typename DB>
auto mul(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "mul: inner dimensions differ");
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(a.rows(), b.cols());
  for (Index k = 0; k < a.cols(); ++k)
    for (Index j = 0; j < b.cols(); ++j) {
      const Scalar& bkj = b(k, j);
      if (is_zero_scalar(bkj)) continue;
      for (Index i = 0; i < a.rows(); ++i)
        if (!is_zero_scalar(a(i, k))) out(i, j) += a(i, k) * bkj;
    }
  return out;
}

// Reduced row echelon form in place; returns pivot columns.
template <typename Scalar>
std::vector<Index> rref_in_place(MatrixX<Scalar>& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = row;
    while (p < m.rows() && is_zero_scalar(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    Scalar inv = Scalar(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j)
      if (!is_zero_scalar(m(row, j))) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero_scalar(m(i, col))) continue;
      Scalar f = m(i, col);
      for (Index j = col; j < m.cols(); ++j)
        if (!is_zero_scalar(m(row, j))) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Derived>
auto rref(const Eigen::MatrixBase<Derived>& m) {
  MatrixX<typename Derived::Scalar> r = m;
  rref_in_place(r);
  return r;
}

template <typename Derived>
Index mat_rank(const Eigen::MatrixBase<Derived>& m) {
  MatrixX<typename Derived::Scalar> r = m;
  return static_cast<Index>(rref_in_place(r).size());
}

// Basis of the null space; one vector per free column, with a 1 in that column.
template <typename Derived>
std::vector<VectorX<typename Derived::Scalar>> mat_kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> r = m;
  auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index p : pivots) is_pivot[p] = true;
  std::vector<VectorX<Scalar>> out;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    VectorX<Scalar> v = VectorX<Scalar>::Zero(m.cols());
    v(free) = Scalar(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v(pivots[k]) = -r(static_cast<Index>(k), free);
    out.push_back(std::move(v));
  }
  return out;
}

template <typename Derived>
auto mat_inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "mat_inverse: matrix is not square");
  const Index n = m.rows();
  MatrixX<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = MatrixX<Scalar>::Identity(n, n);
  auto pivots = rref_in_place(aug);
  if (static_cast<Index>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1))
    throw Error(ErrorKind::SingularMatrix, "mat_inverse: determinant is zero");
  MatrixX<Scalar> inv = aug.rightCols(n);
  return inv;
}

template <typename Derived>
typename Derived::Scalar mat_det(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "mat_det: matrix is not square");
  MatrixX<Scalar> a = m;
  Scalar det(1);
  const Index n = a.rows();
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && is_zero_scalar(a(p, c))) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (is_zero_scalar(a(i, c))) continue;
      Scalar f = a(i, c) / a(c, c);
      for (Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

// ---- subspaces as explicit spanning lists -------------------------------------------------

template <typename Scalar>
MatrixX<Scalar> rows_of(const std::vector<VectorX<Scalar>>& vs, Index dim) {
  MatrixX<Scalar> m(static_cast<Index>(vs.size()), dim);
  for (std::size_t i = 0; i < vs.size(); ++i) m.row(static_cast<Index>(i)) = vs[i].transpose();
  return m;
}

template <typename Scalar>
MatrixX<Scalar> cols_of(const std::vector<VectorX<Scalar>>& vs, Index dim) {
  MatrixX<Scalar> m(dim, static_cast<Index>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) m.col(static_cast<Index>(i)) = vs[i];
  return m;
}

// Nonzero rows of the RREF of the stacked vectors.
template <typename Scalar>
std::vector<VectorX<Scalar>> echelon_basis(const std::vector<VectorX<Scalar>>& vs, Index dim) {
  MatrixX<Scalar> m = rows_of(vs, dim);
  auto pivots = rref_in_place(m);
  std::vector<VectorX<Scalar>> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(m.row(static_cast<Index>(i)).transpose());
  return out;
}

template <typename Scalar>
bool in_span(const std::vector<VectorX<Scalar>>& basis, const VectorX<Scalar>& v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  auto vs = basis;
  Index r0 = mat_rank(rows_of(basis, v.size()));
  vs.push_back(v);
  return mat_rank(rows_of(vs, v.size())) == r0;
}

template <typename Scalar>
bool same_span(const std::vector<VectorX<Scalar>>& a, const std::vector<VectorX<Scalar>>& b, Index dim) {
  return echelon_basis(a, dim) == echelon_basis(b, dim);
}

template <typename Scalar>
std::vector<VectorX<Scalar>> intersect(const std::vector<VectorX<Scalar>>& a, const std::vector<VectorX<Scalar>>& b,
                                       Index dim) {
  if (a.empty() || b.empty()) return {};
  MatrixX<Scalar> m(dim, static_cast<Index>(a.size() + b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) m.col(static_cast<Index>(i)) = a[i];
  for (std::size_t j = 0; j < b.size(); ++j) m.col(static_cast<Index>(a.size() + j)) = -b[j];
  std::vector<VectorX<Scalar>> out;
  for (const auto& k : mat_kernel(m)) {
    VectorX<Scalar> v = VectorX<Scalar>::Zero(dim);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!is_zero_scalar(k(static_cast<Index>(i)))) v += k(static_cast<Index>(i)) * a[i];
    out.push_back(std::move(v));
  }
  return echelon_basis(out, dim);
}

// Coordinates of v in the given (independent) basis; throws if v is outside the span.
template <typename Scalar>
VectorX<Scalar> coordinates(const std::vector<VectorX<Scalar>>& basis, const VectorX<Scalar>& v) {
  const Index dim = v.size(), k = static_cast<Index>(basis.size());
  MatrixX<Scalar> aug(dim, k + 1);
  for (Index i = 0; i < k; ++i) aug.col(i) = basis[static_cast<std::size_t>(i)];
  aug.col(k) = v;
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == k) throw Error(ErrorKind::ShapeMismatch, "coordinates: vector outside span");
  if (static_cast<Index>(pivots.size()) < k) throw Error(ErrorKind::ShapeMismatch, "coordinates: dependent basis");
  VectorX<Scalar> out(k);
  for (Index i = 0; i < k; ++i) out(i) = aug(i, k);
  return out;
}

inline Vec unit(Index dim, Index i) {
  Vec v = Vec::Zero(dim);
  v(i) = Rational(1);
  return v;
}

}  // namespace novikov
