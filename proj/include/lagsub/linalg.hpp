#pragma once

// Exact dense linear algebra over the scalars in field.hpp: reduced row
// echelon forms, kernels, and subspaces stored in canonical form.
//
// Vectors are rows. A linear map acts on column vectors, so the image of a
// row vector x under M is x * M^T.

#include <algorithm>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "lagsub/field.hpp"

namespace lagsub {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using RowVector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

template <ExactScalar S>
Matrix<S> zeros(const FieldCtx& ctx, Index rows, Index cols) {
  return Matrix<S>::Constant(rows, cols, make_scalar<S>(ctx, 0));
}

template <ExactScalar S>
Matrix<S> identity(const FieldCtx& ctx, Index n) {
  Matrix<S> m = zeros<S>(ctx, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = make_scalar<S>(ctx, 1);
  return m;
}

// Builds a matrix from integer entries, reduced into ctx.
template <ExactScalar S>
Matrix<S> from_integers(const FieldCtx& ctx, const std::vector<std::vector<std::int64_t>>& rows,
                        Index cols = -1) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<Index>(rows.front().size()));
  Matrix<S> m = zeros<S>(ctx, r, c);
  for (Index i = 0; i < r; ++i) {
    if (static_cast<Index>(rows[i].size()) != c)
      throw Error(ErrorKind::DimMismatch, "ragged integer matrix");
    for (Index j = 0; j < c; ++j) m(i, j) = make_scalar<S>(ctx, rows[i][j]);
  }
  return m;
}

// Attaches ctx to every entry (turning Eigen's context-free literals into
// field elements) and rejects entries from a different field.
template <ExactScalar S>
Matrix<S> retype(const FieldCtx& ctx, const Matrix<S>& m) {
  Matrix<S> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = ScalarTraits<S>::retype(ctx, m(i, j));
  return out;
}

template <class S>
bool is_zero_matrix(const Matrix<S>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S>
bool is_symmetric(const Matrix<S>& m) {
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

template <class S>
struct Echelon {
  Matrix<S> rows;              // nonzero rows in reduced row echelon form
  std::vector<Index> pivots;   // pivot column of each row
};

template <ExactScalar S>
Echelon<S> rref(Matrix<S> m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const S inv = inverse(m(row, col));
    for (Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const S factor = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {m.topRows(row), std::move(pivots)};
}

template <ExactScalar S>
Index rank(const Matrix<S>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

template <ExactScalar S>
S determinant(Matrix<S> m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimMismatch, "determinant of non-square matrix");
  S det = 1;
  const Index n = m.rows();
  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    while (pivot < n && is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) return det - det;
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det = det * m(col, col);
    const S inv = inverse(m(col, col));
    for (Index i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      const S factor = m(i, col) * inv;
      for (Index j = col; j < n; ++j) m(i, j) = m(i, j) - factor * m(col, j);
    }
  }
  return det;
}

// Rows form a basis of {x : m * x^T = 0}, i.e. the right null space of m.
template <ExactScalar S>
Matrix<S> kernel(const FieldCtx& ctx, const Matrix<S>& m) {
  const Index n = m.cols();
  const Echelon<S> e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  const Index nullity = n - static_cast<Index>(e.pivots.size());
  Matrix<S> basis = zeros<S>(ctx, nullity, n);
  Index k = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(k, free) = make_scalar<S>(ctx, 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(k, e.pivots[r]) = -e.rows(static_cast<Index>(r), free);
    ++k;
  }
  return basis;
}

template <ExactScalar S>
Matrix<S> inverse_matrix(const FieldCtx& ctx, const Matrix<S>& m) {
  const Index n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::DimMismatch, "inverse of non-square matrix");
  Matrix<S> aug(n, 2 * n);
  aug << m, identity<S>(ctx, n);
  const Echelon<S> e = rref(retype(ctx, aug));
  if (static_cast<Index>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
    throw Error(ErrorKind::DivisionByZero, "matrix is singular");
  return e.rows.rightCols(n);
}

// A linear subspace of ctx^ambient, stored by its reduced row echelon basis.
// Equality of subspaces is equality of stored bases.
template <ExactScalar S>
class Subspace {
 public:
  Subspace(const FieldCtx& ctx, Index ambient)
      : ctx_(ctx), ambient_(ambient), basis_(zeros<S>(ctx, 0, ambient)) {}

  // Canonical span of the given rows.
  static Subspace span(const FieldCtx& ctx, const Matrix<S>& rows) {
    Subspace s(ctx, rows.cols());
    Echelon<S> e = rref(retype(ctx, rows));
    s.basis_ = std::move(e.rows);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  static Subspace whole(const FieldCtx& ctx, Index ambient) {
    return span(ctx, identity<S>(ctx, ambient));
  }

  const FieldCtx& ctx() const noexcept { return ctx_; }
  Index ambient() const noexcept { return ambient_; }
  Index dim() const noexcept { return basis_.rows(); }
  const Matrix<S>& basis() const noexcept { return basis_; }
  const std::vector<Index>& pivots() const noexcept { return pivots_; }

  bool contains(const RowVector<S>& v) const {
    RowVector<S> r = retype(ctx_, Matrix<S>(v));
    for (Index i = 0; i < dim(); ++i) {
      const S c = r(pivots_[static_cast<std::size_t>(i)]);
      if (!is_zero(c)) r -= c * basis_.row(i);
    }
    for (Index j = 0; j < r.cols(); ++j)
      if (!is_zero(r(j))) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    for (Index i = 0; i < other.dim(); ++i)
      if (!contains(RowVector<S>(other.basis_.row(i)))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
  }

  // Deterministic total order: by dimension, then lexicographically by basis.
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (Index i = 0; i < a.dim(); ++i)
      for (Index j = 0; j < a.ambient_; ++j) {
        if (canonical_less(a.basis_(i, j), b.basis_(i, j))) return true;
        if (canonical_less(b.basis_(i, j), a.basis_(i, j))) return false;
      }
    return false;
  }

 private:
  FieldCtx ctx_;
  Index ambient_;
  Matrix<S> basis_;
  std::vector<Index> pivots_;
};

template <ExactScalar S>
Subspace<S> canonical_basis(const FieldCtx& ctx, const Matrix<S>& rows) {
  return Subspace<S>::span(ctx, rows);
}

namespace detail {
template <ExactScalar S>
void require_compatible(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient() != b.ambient())
    throw Error(ErrorKind::AmbientMismatch,
                "ambient " + std::to_string(a.ambient()) + " vs " + std::to_string(b.ambient()));
  if (!(a.ctx() == b.ctx()))
    throw Error(ErrorKind::MixedContexts, a.ctx().str() + " vs " + b.ctx().str());
}
}  // namespace detail

// Annihilator under the standard dot product: {x : <x, s> = 0 for s in S}.
template <ExactScalar S>
Subspace<S> annihilator(const Subspace<S>& s) {
  return Subspace<S>::span(s.ctx(), kernel(s.ctx(), s.basis()));
}

template <ExactScalar S>
Subspace<S> sum(const Subspace<S>& a, const Subspace<S>& b) {
  detail::require_compatible(a, b);
  Matrix<S> stacked(a.dim() + b.dim(), a.ambient());
  stacked << a.basis(), b.basis();
  return Subspace<S>::span(a.ctx(), stacked);
}

// A ∩ B = ann(ann(A) + ann(B)).
template <ExactScalar S>
Subspace<S> intersect(const Subspace<S>& a, const Subspace<S>& b) {
  detail::require_compatible(a, b);
  return annihilator(sum(annihilator(a), annihilator(b)));
}

// Image of a subspace under the linear map m (acting on column vectors).
template <ExactScalar S>
Subspace<S> image(const Matrix<S>& m, const Subspace<S>& s) {
  if (m.cols() != s.ambient()) throw Error(ErrorKind::DimMismatch, "map does not act on this ambient space");
  return Subspace<S>::span(s.ctx(), Matrix<S>(s.basis() * m.transpose()));
}

// Coordinates of the vectors of `inner` relative to the canonical basis of
// `outer`; the result lives in ctx^dim(outer).
template <ExactScalar S>
Subspace<S> coordinates_in(const Subspace<S>& inner, const Subspace<S>& outer) {
  detail::require_compatible(inner, outer);
  if (!outer.contains(inner)) throw Error(ErrorKind::AmbientMismatch, "subspace is not contained in the frame");
  // Rows of outer's reduced basis have identity columns at the pivots, so the
  // coordinates of a member vector are its entries in those columns.
  Matrix<S> coords = zeros<S>(inner.ctx(), inner.dim(), outer.dim());
  for (Index i = 0; i < inner.dim(); ++i)
    for (Index k = 0; k < outer.dim(); ++k)
      coords(i, k) = inner.basis()(i, outer.pivots()[static_cast<std::size_t>(k)]);
  return Subspace<S>::span(inner.ctx(), coords);
}

}  // namespace lagsub
