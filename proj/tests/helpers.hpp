#pragma once

#include <random>

#include "lagsub/lagrange.hpp"
#include "oracles.hpp"

namespace testing {

using namespace lagsub;

inline oracle::Rows to_rows(const Matrix<ModP>& m) {
  oracle::Rows rows(static_cast<std::size_t>(m.rows()), oracle::Row(static_cast<std::size_t>(m.cols())));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j).residue();
  return rows;
}

inline oracle::Rows to_rows(const Subspace<ModP>& s) { return to_rows(s.basis()); }

inline Subspace<ModP> span_of(const FieldCtx& ctx, const std::vector<std::vector<std::int64_t>>& rows, Index ambient) {
  return Subspace<ModP>::span(ctx, from_integers<ModP>(ctx, rows, ambient));
}

inline Subspace<Rational> span_q(const std::vector<std::vector<std::int64_t>>& rows, Index ambient) {
  const FieldCtx q = FieldCtx::rationals();
  return Subspace<Rational>::span(q, from_integers<Rational>(q, rows, ambient));
}

// Random subspace spanned by `count` random vectors (dimension may drop).
inline Subspace<ModP> random_subspace(std::mt19937_64& rng, const FieldCtx& ctx, Index ambient, Index count) {
  Matrix<ModP> m = zeros<ModP>(ctx, count, ambient);
  for (Index i = 0; i < count; ++i)
    for (Index j = 0; j < ambient; ++j) m(i, j) = ModP(static_cast<std::int64_t>(rng() % ctx.p), ctx.p);
  return Subspace<ModP>::span(ctx, m);
}

inline Subspace<Rational> random_subspace_q(std::mt19937_64& rng, Index ambient, Index count) {
  const FieldCtx q = FieldCtx::rationals();
  Matrix<Rational> m = zeros<Rational>(q, count, ambient);
  for (Index i = 0; i < count; ++i)
    for (Index j = 0; j < ambient; ++j) m(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
  return Subspace<Rational>::span(q, m);
}

}  // namespace testing
