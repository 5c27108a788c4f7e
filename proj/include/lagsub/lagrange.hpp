#pragma once

// Lagrangian subspaces of split orthogonal spaces: enumeration over finite
// fields, the two-component classifier in even dimension, and the
// correspondence between Lagrangians of V (dim 2n+1) and of V ⊥ <c>.

#include <vector>

#include "lagsub/orthospace.hpp"

namespace lagsub {

template <ExactScalar S>
bool is_lagrangian(const GramSpace<S>& v, const Subspace<S>& s) {
  return s.dim() == v.dim() / 2 && is_isotropic(v, s);
}

enum class Component { Same, Other };

template <ExactScalar S>
struct ComponentLabel {
  Subspace<S> reference;
  Component label;
};

inline const char* to_string(Component c) noexcept { return c == Component::Same ? "Same" : "Other"; }

namespace detail {
template <ExactScalar S>
void require_lagrangian(const GramSpace<S>& v, const Subspace<S>& s, const char* what) {
  if (!is_lagrangian(v, s)) throw Error(ErrorKind::NotLagrangian, std::string(what) + " is not Lagrangian");
}
}  // namespace detail

// Two Lagrangians F, F' of a split space of dim 2n lie in the same component
// iff dim(F ∩ F') ≡ n mod 2.
template <ExactScalar S>
ComponentLabel<S> component_of(const GramSpace<S>& v, const Subspace<S>& f, const Subspace<S>& reference) {
  if (v.dim() % 2 != 0)
    throw Error(ErrorKind::OddAmbient, "odd orthogonal Grassmannians have a single component");
  detail::require_lagrangian(v, f, "F");
  detail::require_lagrangian(v, reference, "reference");
  const Index n = v.dim() / 2;
  const Index meet = intersect(f, reference).dim();
  return {reference, (meet - n) % 2 == 0 ? Component::Same : Component::Other};
}

template <ExactScalar S>
struct LiftPair {
  Subspace<S> plus_lift;
  Subspace<S> minus_lift;
};

// (v, λ) ↦ (v, −λ) on W = V ⊥ <c>, whose extension vector is the last basis
// vector.
template <ExactScalar S>
Matrix<S> flip_automorphism(const GramSpace<S>& w) {
  Matrix<S> m = identity<S>(w.ctx(), w.dim());
  if (w.dim() > 0) m(w.dim() - 1, w.dim() - 1) = make_scalar<S>(w.ctx(), -1);
  return m;
}

// The two Lagrangians F of W = V ⊥ <c> with F ∩ V = E.
//
// E^⊥ in W is E ⊕ span(u0, w) where u0 spans E^⊥_V / E, so F = E + span(u0 + s w)
// with q(u0) + c s^2 = 0. The plus lift takes the least root s (positive over Q).
template <ExactScalar S>
LiftPair<S> lift_odd_to_even(const GramSpace<S>& v, const Subspace<S>& e, const S& c) {
  if (v.dim() % 2 != 1) throw Error(ErrorKind::DimMismatch, "lift needs an odd-dimensional space");
  detail::require_lagrangian(v, e, "E");
  const FieldCtx& ctx = v.ctx();
  const GramSpace<S> w = extend_by_scalar(v, c);
  const S cc = w.gram()(v.dim(), v.dim());

  const Subspace<S> perp = orthogonal_complement(v, e);
  RowVector<S> u0;
  for (Index i = 0; i < perp.dim(); ++i) {
    const RowVector<S> x = perp.basis().row(i);
    if (!e.contains(x)) {
      u0 = x;
      break;
    }
  }
  const S a = v.norm(u0);
  const auto s = square_root(S(-a / cc));
  if (!s)
    throw Error(ErrorKind::NonSplitExtension,
                "-q(u)/c = " + to_string(S(-a / cc)) + " is not a square in " + ctx.str());

  const Index d = w.dim();
  auto lift = [&](const S& root) {
    Matrix<S> rows = zeros<S>(ctx, e.dim() + 1, d);
    rows.topLeftCorner(e.dim(), d - 1) = e.basis();
    rows.block(e.dim(), 0, 1, d - 1) = u0;
    rows(e.dim(), d - 1) = root;
    return Subspace<S>::span(ctx, rows);
  };
  return {lift(*s), lift(-*s)};
}

// E = F ∩ V for a Lagrangian F of W and a nondegenerate hyperplane V of W.
// The result is expressed in the coordinates of W.
template <ExactScalar S>
Subspace<S> restrict_even_to_odd(const GramSpace<S>& w, const Subspace<S>& v_embed, const Subspace<S>& f) {
  detail::require_inside(w, v_embed);
  if (is_zero(determinant(w.restricted_gram(v_embed.basis()))))
    throw Error(ErrorKind::DegenerateRestriction, "form restricted to V is degenerate");
  detail::require_lagrangian(w, f, "F");
  return intersect(f, v_embed);
}

// The hyperplane spanned by the first dim-1 coordinate vectors, i.e. V inside
// V ⊥ <c>.
template <ExactScalar S>
Subspace<S> base_hyperplane(const FieldCtx& ctx, Index ambient) {
  return Subspace<S>::span(ctx, Matrix<S>(identity<S>(ctx, ambient).topRows(ambient - 1)));
}

struct CorankRecord {
  Index r = 0;  // dim(E ∩ E~)
  Index h = 0;  // dim(E^⊥ ∩ E~^⊥)
};

template <ExactScalar S>
CorankRecord complement_corank_law(const GramSpace<S>& v, const Subspace<S>& e, const Subspace<S>& e2) {
  detail::require_lagrangian(v, e, "E");
  detail::require_lagrangian(v, e2, "E~");
  return {intersect(e, e2).dim(), intersect(orthogonal_complement(v, e), orthogonal_complement(v, e2)).dim()};
}

// Dimension of the tangent space of OG(n, 2n+1), i.e. of ∧² of an
// (n+1)-dimensional space.
std::int64_t og_tangent_dim(std::int64_t n);

struct EnumerationOptions {
  Index max_dim = 8;
};

// All Lagrangians of a split space over F_p, sorted canonically. Built one
// isotropic line at a time: S grows by an isotropic point of S^⊥ / S, taken
// through an explicit section of the quotient.
std::vector<Subspace<ModP>> enumerate_lagrangians(const GramSpace<ModP>& v, const EnumerationOptions& options = {});

}  // namespace lagsub
