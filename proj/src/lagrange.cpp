#include "lagsub/lagrange.hpp"

#include <set>

namespace lagsub {

std::int64_t og_tangent_dim(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "og_tangent_dim needs n >= 1");
  return n * (n + 1) / 2;
}

namespace {

// Calls visit(v) for each projective point of the span of `section`, with
// coefficient vectors normalized to a leading 1, in lexicographic order.
template <class Visit>
void for_each_point(const FieldCtx& ctx, const Matrix<ModP>& section, Visit&& visit) {
  const Index k = section.rows();
  const std::int64_t p = ctx.p;
  std::vector<std::int64_t> c(static_cast<std::size_t>(k));
  for (Index lead = 0; lead < k; ++lead) {
    std::fill(c.begin(), c.end(), 0);
    c[static_cast<std::size_t>(lead)] = 1;
    for (;;) {
      RowVector<ModP> v = zeros<ModP>(ctx, 1, section.cols());
      for (Index i = lead; i < k; ++i)
        if (c[static_cast<std::size_t>(i)] != 0) v += ModP(c[static_cast<std::size_t>(i)], ctx.p) * section.row(i);
      visit(v);
      Index pos = k - 1;
      while (pos > lead && c[static_cast<std::size_t>(pos)] == p - 1) {
        c[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos == lead) break;
      ++c[static_cast<std::size_t>(pos)];
    }
  }
}

}  // namespace

std::vector<Subspace<ModP>> enumerate_lagrangians(const GramSpace<ModP>& v, const EnumerationOptions& options) {
  const FieldCtx& ctx = v.ctx();
  if (!ctx.is_prime_field()) throw Error(ErrorKind::UnsupportedContext, "enumeration needs a finite field");
  if (v.dim() > options.max_dim)
    throw Error(ErrorKind::CapExceeded,
                "dimension " + std::to_string(v.dim()) + " exceeds cap " + std::to_string(options.max_dim));
  const Index n = v.dim() / 2;
  const WittDecomposition<ModP> witt = witt_decompose(v);
  if (witt.witt_index != n)
    throw Error(ErrorKind::NotSplit,
                "Witt index " + std::to_string(witt.witt_index) + " < " + std::to_string(n));

  std::set<Subspace<ModP>> level{Subspace<ModP>(ctx, v.dim())};
  for (Index k = 0; k < n; ++k) {
    std::set<Subspace<ModP>> next;
    for (const auto& s : level) {
      const Subspace<ModP> perp = orthogonal_complement(v, s);
      // Section of S^⊥ / S: reduced basis rows of S^⊥ outside the running span.
      Subspace<ModP> running = s;
      Matrix<ModP> section = zeros<ModP>(ctx, 0, v.dim());
      for (Index i = 0; i < perp.dim(); ++i) {
        const RowVector<ModP> x = perp.basis().row(i);
        if (running.contains(x)) continue;
        Matrix<ModP> grown(section.rows() + 1, v.dim());
        grown << section, x;
        section = std::move(grown);
        running = sum(running, Subspace<ModP>::span(ctx, Matrix<ModP>(x)));
      }
      for_each_point(ctx, section, [&](const RowVector<ModP>& x) {
        if (!is_zero(v.norm(x))) return;
        Matrix<ModP> rows(s.dim() + 1, v.dim());
        rows << s.basis(), x;
        next.insert(Subspace<ModP>::span(ctx, rows));
      });
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

}  // namespace lagsub
