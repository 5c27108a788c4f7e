#pragma once

// Finite-dimensional spaces with a symmetric bilinear form: orthogonal
// complements, isotropy, Witt reduction, and the standard split forms.
//
// The stored object is always the polarized bilinear form B, never the
// quadratic form; q(x) = B(x, x).

#include <optional>
#include <utility>
#include <vector>

#include "lagsub/linalg.hpp"

namespace lagsub {

template <ExactScalar S>
class GramSpace {
 public:
  GramSpace(const FieldCtx& ctx, const Matrix<S>& gram) : ctx_(ctx), gram_(retype(ctx, gram)) {
    if (gram_.rows() != gram_.cols()) throw Error(ErrorKind::DimMismatch, "Gram matrix is not square");
    if (!is_symmetric(gram_)) throw Error(ErrorKind::NotSymmetric, "Gram matrix is not symmetric");
    nondegenerate_ = !is_zero(determinant(gram_));
  }

  const FieldCtx& ctx() const noexcept { return ctx_; }
  Index dim() const noexcept { return gram_.rows(); }
  const Matrix<S>& gram() const noexcept { return gram_; }
  bool nondegenerate() const noexcept { return nondegenerate_; }

  S form(const RowVector<S>& x, const RowVector<S>& y) const { return (x * gram_ * y.transpose())(0, 0); }
  S norm(const RowVector<S>& x) const { return form(x, x); }

  // Gram matrix of the form restricted to the span of the given rows.
  Matrix<S> restricted_gram(const Matrix<S>& rows) const { return rows * gram_ * rows.transpose(); }

  friend bool operator==(const GramSpace& a, const GramSpace& b) {
    return a.ctx_ == b.ctx_ && a.dim() == b.dim() && a.gram_ == b.gram_;
  }

 private:
  FieldCtx ctx_;
  Matrix<S> gram_;
  bool nondegenerate_ = false;
};

namespace detail {
template <ExactScalar S>
void require_inside(const GramSpace<S>& v, const Subspace<S>& s) {
  if (s.ambient() != v.dim())
    throw Error(ErrorKind::AmbientMismatch,
                "subspace of dim-" + std::to_string(s.ambient()) + " space used in dim-" + std::to_string(v.dim()));
  if (!(s.ctx() == v.ctx())) throw Error(ErrorKind::MixedContexts, s.ctx().str() + " vs " + v.ctx().str());
}
}  // namespace detail

template <ExactScalar S>
Subspace<S> orthogonal_complement(const GramSpace<S>& v, const Subspace<S>& s) {
  detail::require_inside(v, s);
  if (!v.nondegenerate()) throw Error(ErrorKind::DegenerateForm, "det(gram) = 0");
  return Subspace<S>::span(v.ctx(), kernel(v.ctx(), Matrix<S>(s.basis() * v.gram())));
}

template <ExactScalar S>
bool is_isotropic(const GramSpace<S>& v, const Subspace<S>& s) {
  detail::require_inside(v, s);
  return is_zero_matrix(v.restricted_gram(s.basis()));
}

// ---- standard forms ----

enum class Shape { Even2n, Odd2nPlus1 };

// Basis e_1..e_n, f_1..f_n (then u for the odd shape) with <e_i, f_i> = 1,
// all other pairings among them zero, and <u, u> = 1.
template <ExactScalar S>
GramSpace<S> standard_form(const FieldCtx& ctx, Index n, Shape shape) {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "negative n");
  const Index dim = 2 * n + (shape == Shape::Odd2nPlus1 ? 1 : 0);
  Matrix<S> g = zeros<S>(ctx, dim, dim);
  for (Index i = 0; i < n; ++i) {
    g(i, n + i) = make_scalar<S>(ctx, 1);
    g(n + i, i) = make_scalar<S>(ctx, 1);
  }
  if (shape == Shape::Odd2nPlus1) g(dim - 1, dim - 1) = make_scalar<S>(ctx, 1);
  return GramSpace<S>(ctx, g);
}

// V ⊥ <c>: one new basis vector, last, orthogonal to V with norm c.
template <ExactScalar S>
GramSpace<S> extend_by_scalar(const GramSpace<S>& v, const S& c) {
  const S cc = ScalarTraits<S>::retype(v.ctx(), c);
  if (is_zero(cc)) throw Error(ErrorKind::ZeroScalar, "extension by a zero norm");
  const Index d = v.dim();
  Matrix<S> g = zeros<S>(v.ctx(), d + 1, d + 1);
  g.topLeftCorner(d, d) = v.gram();
  g(d, d) = cc;
  return GramSpace<S>(v.ctx(), g);
}

// True iff b is invertible and b^T G b = G'.
template <ExactScalar S>
bool isometry_check(const GramSpace<S>& v, const GramSpace<S>& target, const Matrix<S>& b) {
  if (b.rows() != b.cols() || b.rows() != v.dim() || target.dim() != v.dim())
    throw Error(ErrorKind::DimMismatch, "isometry_check needs square maps between equal dimensions");
  if (!(v.ctx() == target.ctx())) throw Error(ErrorKind::MixedContexts, v.ctx().str() + " vs " + target.ctx().str());
  const Matrix<S> bb = retype(v.ctx(), b);
  if (is_zero(determinant(bb))) return false;
  const Matrix<S> pulled = bb.transpose() * v.gram() * bb;
  return retype(v.ctx(), pulled) == target.gram();
}

// Binary quadratics a x^2 + b xy + c y^2 in coordinates (a, b, c) with the
// polarization of the discriminant b^2 - 4ac.
template <ExactScalar S>
GramSpace<S> mumford_sym2_form(const FieldCtx& ctx) {
  return GramSpace<S>(ctx, from_integers<S>(ctx, {{0, 0, -2}, {0, 1, 0}, {-2, 0, 0}}));
}

// ---- Witt decomposition ----

struct WittOptions {
  // Height bound for the isotropic-vector search over Q.
  long rational_height_bound = 50;
};

template <ExactScalar S>
struct WittDecomposition {
  // Columns: e_1..e_k, f_1..f_k, then a basis of the anisotropic part.
  Matrix<S> change_of_basis;
  Index witt_index = 0;
  std::vector<std::pair<Index, Index>> hyperbolic_pairs;
  GramSpace<S> anisotropic_part;

  // The form in the new basis: k hyperbolic planes ⊥ anisotropic part.
  Matrix<S> block_form(const FieldCtx& ctx) const {
    const Index a = anisotropic_part.dim();
    const Index d = 2 * witt_index + a;
    Matrix<S> g = zeros<S>(ctx, d, d);
    for (Index i = 0; i < witt_index; ++i) {
      g(i, witt_index + i) = make_scalar<S>(ctx, 1);
      g(witt_index + i, i) = make_scalar<S>(ctx, 1);
    }
    g.bottomRightCorner(a, a) = anisotropic_part.gram();
    return g;
  }
};

namespace detail {

// Orthogonal basis (rows, in the coordinates of `gram`) of a nondegenerate
// form, by repeatedly splitting off an anisotropic vector.
template <ExactScalar S>
Matrix<S> diagonalizing_basis(const FieldCtx& ctx, const Matrix<S>& gram) {
  const Index d = gram.rows();
  const GramSpace<S> space(ctx, gram);
  Matrix<S> chosen = zeros<S>(ctx, 0, d);
  Subspace<S> rest = Subspace<S>::whole(ctx, d);
  while (rest.dim() > 0) {
    std::optional<RowVector<S>> pick;
    for (Index i = 0; i < rest.dim() && !pick; ++i) {
      const RowVector<S> x = rest.basis().row(i);
      if (!is_zero(space.norm(x))) pick = x;
    }
    for (Index i = 0; i < rest.dim() && !pick; ++i)
      for (Index j = i + 1; j < rest.dim() && !pick; ++j) {
        const RowVector<S> x = rest.basis().row(i);
        const RowVector<S> y = rest.basis().row(j);
        if (!is_zero(space.form(x, y))) pick = RowVector<S>(x + y);  // q(x+y) = 2B(x,y)
      }
    if (!pick) throw Error(ErrorKind::DegenerateForm, "form is degenerate on a subspace");
    Matrix<S> grown(chosen.rows() + 1, d);
    grown << chosen, *pick;
    chosen = std::move(grown);
    const Subspace<S> line = Subspace<S>::span(ctx, Matrix<S>(*pick));
    rest = intersect(rest, orthogonal_complement(space, line));
  }
  return chosen;
}

template <ExactScalar S>
std::optional<RowVector<S>> scan_finite_field(const FieldCtx& ctx, const Matrix<S>& diag_basis,
                                              const std::vector<S>& norms) {
  // Exhaustive fallback; coefficient vectors in lexicographic order.
  const Index k = diag_basis.rows();
  if (k > 6) return std::nullopt;
  std::vector<std::int64_t> c(static_cast<std::size_t>(k), 0);
  for (;;) {
    Index pos = k - 1;
    while (pos >= 0 && c[static_cast<std::size_t>(pos)] == static_cast<std::int64_t>(ctx.p) - 1) {
      c[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return std::nullopt;
    ++c[static_cast<std::size_t>(pos)];
    S q = make_scalar<S>(ctx, 0);
    for (Index i = 0; i < k; ++i) {
      const S ci = make_scalar<S>(ctx, c[static_cast<std::size_t>(i)]);
      q += norms[static_cast<std::size_t>(i)] * ci * ci;
    }
    if (is_zero(q)) {
      RowVector<S> v = zeros<S>(ctx, 1, diag_basis.cols());
      for (Index i = 0; i < k; ++i) v += make_scalar<S>(ctx, c[static_cast<std::size_t>(i)]) * diag_basis.row(i);
      return v;
    }
  }
}

template <ExactScalar S>
bool all_same_sign(const std::vector<S>& norms) {
  if constexpr (std::is_same_v<S, Rational>) {
    for (const auto& x : norms)
      if (x.sign() != norms.front().sign()) return false;
    return true;
  } else {
    return false;
  }
}

// Searches height-bounded integer points (x_1..x_{k-1}) and solves for the
// last coordinate exactly.
template <ExactScalar S>
std::optional<RowVector<S>> scan_rationals(const FieldCtx& ctx, const Matrix<S>& diag_basis,
                                           const std::vector<S>& norms, long height_bound) {
  const Index k = diag_basis.rows();
  const Index free = k - 1;
  std::vector<long> x(static_cast<std::size_t>(free));
  for (long h = 1; h <= height_bound; ++h) {
    // Enumerate all vectors in [-h, h]^free with max |x_i| = h.
    std::fill(x.begin(), x.end(), -h);
    for (;;) {
      long height = 0;
      for (long xi : x) height = std::max(height, std::labs(xi));
      if (height == h) {
        S partial = make_scalar<S>(ctx, 0);
        for (Index i = 0; i < free; ++i) {
          const S xi = make_scalar<S>(ctx, x[static_cast<std::size_t>(i)]);
          partial += norms[static_cast<std::size_t>(i)] * xi * xi;
        }
        const S target = -partial / norms[static_cast<std::size_t>(free)];
        if (const auto root = square_root(target)) {
          RowVector<S> v = zeros<S>(ctx, 1, diag_basis.cols());
          for (Index i = 0; i < free; ++i)
            v += make_scalar<S>(ctx, x[static_cast<std::size_t>(i)]) * diag_basis.row(i);
          v += *root * diag_basis.row(free);
          return v;
        }
      }
      Index pos = free - 1;
      while (pos >= 0 && x[static_cast<std::size_t>(pos)] == h) {
        x[static_cast<std::size_t>(pos)] = -h;
        --pos;
      }
      if (pos < 0) break;
      ++x[static_cast<std::size_t>(pos)];
    }
  }
  return std::nullopt;
}

// A nonzero isotropic vector in the span of `rows` (a subspace on which the
// form is nondegenerate), or nullopt when the restricted form is certified
// anisotropic.
template <ExactScalar S>
std::optional<RowVector<S>> find_isotropic_vector(const GramSpace<S>& v, const Matrix<S>& rows,
                                                  const WittOptions& options) {
  const FieldCtx& ctx = v.ctx();
  const Index k = rows.rows();
  if (k == 0) return std::nullopt;
  const Matrix<S> local = v.restricted_gram(rows);
  const Matrix<S> diag_local = diagonalizing_basis(ctx, local);
  const Matrix<S> diag = diag_local * rows;  // ambient coordinates
  std::vector<S> norms;
  for (Index i = 0; i < k; ++i) norms.push_back(v.norm(diag.row(i)));

  if (k == 1) return std::nullopt;

  // d_i s^2 + d_j = 0 with s^2 = -d_j / d_i.
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j) {
      const S ratio = -norms[static_cast<std::size_t>(j)] / norms[static_cast<std::size_t>(i)];
      if (const auto s = square_root(ratio)) return RowVector<S>(*s * diag.row(i) + diag.row(j));
    }
  if (k == 2) return std::nullopt;

  if constexpr (std::is_same_v<S, ModP>) {
    // d_0 x^2 + d_1 y^2 + d_2 = 0 always has a solution over a finite field.
    for (std::int64_t xv = 0; xv < static_cast<std::int64_t>(ctx.p); ++xv) {
      const S x = make_scalar<S>(ctx, xv);
      const S target = -(norms[2] + norms[0] * x * x) / norms[1];
      if (const auto y = square_root(target))
        return RowVector<S>(x * diag.row(0) + *y * diag.row(1) + diag.row(2));
    }
    if (auto found = scan_finite_field(ctx, diag, norms)) return found;
    throw Error(ErrorKind::IsotropicSearchExhausted, "no isotropic vector found over " + ctx.str());
  } else {
    if (all_same_sign(norms)) return std::nullopt;  // definite
    if (auto found = scan_rationals(ctx, diag, norms, options.rational_height_bound)) return found;
    throw Error(ErrorKind::IsotropicSearchExhausted,
                "no isotropic vector of height <= " + std::to_string(options.rational_height_bound) +
                    " in an indefinite form of dimension " + std::to_string(k));
  }
}

}  // namespace detail

template <ExactScalar S>
WittDecomposition<S> witt_decompose(const GramSpace<S>& v, const WittOptions& options = {}) {
  if (!v.nondegenerate()) throw Error(ErrorKind::DegenerateForm, "det(gram) = 0");
  const FieldCtx& ctx = v.ctx();
  const Index d = v.dim();
  std::vector<RowVector<S>> es, fs;
  Subspace<S> rest = Subspace<S>::whole(ctx, d);
  while (rest.dim() >= 2) {
    const auto e = detail::find_isotropic_vector(v, rest.basis(), options);
    if (!e) break;
    // Complete e to a hyperbolic pair inside `rest`.
    RowVector<S> f0;
    for (Index i = 0; i < rest.dim(); ++i) {
      const RowVector<S> x = rest.basis().row(i);
      const S pairing = v.form(*e, x);
      if (!is_zero(pairing)) {
        f0 = x / pairing;
        break;
      }
    }
    const RowVector<S> f = f0 - (v.norm(f0) / make_scalar<S>(ctx, 2)) * *e;
    es.push_back(*e);
    fs.push_back(f);
    Matrix<S> plane(2, d);
    plane << *e, f;
    rest = intersect(rest, orthogonal_complement(v, Subspace<S>::span(ctx, plane)));
  }

  const Index k = static_cast<Index>(es.size());
  Matrix<S> b = zeros<S>(ctx, d, d);
  for (Index i = 0; i < k; ++i) {
    b.col(i) = es[static_cast<std::size_t>(i)].transpose();
    b.col(k + i) = fs[static_cast<std::size_t>(i)].transpose();
  }
  for (Index i = 0; i < rest.dim(); ++i) b.col(2 * k + i) = rest.basis().row(i).transpose();

  std::vector<std::pair<Index, Index>> pairs;
  for (Index i = 0; i < k; ++i) pairs.emplace_back(i, k + i);
  return {b, k, std::move(pairs), GramSpace<S>(ctx, v.restricted_gram(rest.basis()))};
}

// Searches for (lambda, B) with B invertible and B^T G B = lambda * G', taking
// the first witness in lexicographic order of (lambda, columns of B). Finite
// fields only; cost grows like p^(2 dim).
std::optional<std::pair<ModP, Matrix<ModP>>> similarity_search(const GramSpace<ModP>& from,
                                                               const GramSpace<ModP>& to);

}  // namespace lagsub
