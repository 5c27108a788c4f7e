#include "lagsub/orthospace.hpp"

namespace lagsub {

namespace {

std::vector<RowVector<ModP>> all_vectors(const FieldCtx& ctx, Index d) {
  std::vector<RowVector<ModP>> out;
  std::vector<std::int64_t> c(static_cast<std::size_t>(d), 0);
  for (;;) {
    RowVector<ModP> v(d);
    for (Index i = 0; i < d; ++i) v(i) = ModP(c[static_cast<std::size_t>(i)], ctx.p);
    out.push_back(std::move(v));
    Index pos = d - 1;
    while (pos >= 0 && c[static_cast<std::size_t>(pos)] == static_cast<std::int64_t>(ctx.p) - 1) {
      c[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++c[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace

std::optional<std::pair<ModP, Matrix<ModP>>> similarity_search(const GramSpace<ModP>& from,
                                                               const GramSpace<ModP>& to) {
  const FieldCtx& ctx = from.ctx();
  if (!(ctx == to.ctx())) throw Error(ErrorKind::MixedContexts, ctx.str() + " vs " + to.ctx().str());
  if (!ctx.is_prime_field()) throw Error(ErrorKind::UnsupportedContext, "similarity search needs a finite field");
  if (from.dim() != to.dim()) throw Error(ErrorKind::DimMismatch, "similarity between different dimensions");
  const Index d = from.dim();
  const auto vectors = all_vectors(ctx, d);
  for (std::int64_t lv = 1; lv < static_cast<std::int64_t>(ctx.p); ++lv) {
    const ModP lambda(lv, ctx.p);
    const Matrix<ModP> target = lambda * to.gram();
    std::vector<std::size_t> chosen;
    // Column j must satisfy B(b_i, b_j) = lambda * G'(i, j) for all i <= j.
    std::vector<std::size_t> cursor{0};
    while (!cursor.empty()) {
      const Index j = static_cast<Index>(cursor.size()) - 1;
      bool advanced = false;
      for (std::size_t& idx = cursor.back(); idx < vectors.size(); ++idx) {
        const auto& x = vectors[idx];
        bool ok = from.norm(x) == target(j, j);
        for (Index i = 0; ok && i < j; ++i) ok = from.form(vectors[chosen[static_cast<std::size_t>(i)]], x) == target(i, j);
        if (!ok) continue;
        chosen.push_back(idx);
        ++idx;
        advanced = true;
        break;
      }
      if (!advanced) {
        cursor.pop_back();
        if (!chosen.empty()) chosen.pop_back();
        continue;
      }
      if (static_cast<Index>(chosen.size()) == d) {
        Matrix<ModP> b(d, d);
        for (Index i = 0; i < d; ++i) b.col(i) = vectors[chosen[static_cast<std::size_t>(i)]].transpose();
        if (!is_zero(determinant(b))) return std::make_pair(lambda, b);
        chosen.pop_back();
        continue;
      }
      cursor.push_back(0);
    }
  }
  return std::nullopt;
}

}  // namespace lagsub
