#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace lagsub;
using testing::span_of;
using testing::span_q;

namespace {

template <class S>
GramSpace<S> gram_of(const FieldCtx& ctx, const std::vector<std::vector<std::int64_t>>& rows) {
  return GramSpace<S>(ctx, from_integers<S>(ctx, rows));
}

template <class S>
void check_decomposition(const GramSpace<S>& v, const WittDecomposition<S>& w) {
  const FieldCtx& ctx = v.ctx();
  const GramSpace<S> block(ctx, w.block_form(ctx));
  CHECK(isometry_check(v, block, w.change_of_basis));
  CHECK(w.anisotropic_part.dim() == v.dim() - 2 * w.witt_index);
}

}  // namespace

TEST_CASE("gram spaces validate their input") {
  const FieldCtx q = FieldCtx::rationals();
  CHECK_THROWS_AS(gram_of<Rational>(q, {{1, 2}, {3, 1}}), Error);
  try {
    gram_of<Rational>(q, {{1, 2}, {3, 1}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSymmetric);
  }
  const auto degenerate = gram_of<Rational>(q, {{1, 1}, {1, 1}});
  CHECK_FALSE(degenerate.nondegenerate());
  CHECK_THROWS_AS(witt_decompose(degenerate), Error);
  CHECK_THROWS_AS(orthogonal_complement(degenerate, span_q({{1, 0}}, 2)), Error);
}

TEST_CASE("orthogonal complements") {
  const FieldCtx q = FieldCtx::rationals();
  const auto h = standard_form<Rational>(q, 1, Shape::Even2n);
  CHECK(orthogonal_complement(h, span_q({{1, 0}}, 2)) == span_q({{1, 0}}, 2));
  const auto v = standard_form<Rational>(q, 1, Shape::Odd2nPlus1);
  CHECK(orthogonal_complement(v, span_q({{1, 0, 0}}, 3)) == span_q({{1, 0, 0}, {0, 0, 1}}, 3));
  CHECK_THROWS_AS(orthogonal_complement(v, span_q({{1, 0}}, 2)), Error);

  std::mt19937_64 rng(17);
  const FieldCtx f5 = FieldCtx::prime(5);
  const auto w = standard_form<ModP>(f5, 2, Shape::Odd2nPlus1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = testing::random_subspace(rng, f5, 5, static_cast<Index>(rng() % 6));
    const auto perp = orthogonal_complement(w, s);
    CHECK(orthogonal_complement(w, perp) == s);
    CHECK(perp.dim() == 5 - s.dim());
    // Every basis pair is orthogonal, checked on plain integers.
    const auto g = oracle::split_odd(2);
    for (const auto& x : testing::to_rows(s))
      for (const auto& y : testing::to_rows(perp)) CHECK(oracle::form(g, x, y, 5) == 0);
  }
}

TEST_CASE("isotropy") {
  const FieldCtx q = FieldCtx::rationals();
  CHECK(is_isotropic(standard_form<Rational>(q, 1, Shape::Even2n), span_q({{1, 0}}, 2)));
  CHECK_FALSE(is_isotropic(standard_form<Rational>(q, 1, Shape::Odd2nPlus1), span_q({{0, 0, 1}}, 3)));
  const FieldCtx f5 = FieldCtx::prime(5);
  const auto w = extend_by_scalar(standard_form<ModP>(f5, 1, Shape::Odd2nPlus1), ModP(1, f5));
  CHECK(is_isotropic(w, span_of(f5, {{1, 0, 0, 0}, {0, 0, 1, 2}}, 4)));
  CHECK_FALSE(is_isotropic(w, span_of(f5, {{1, 0, 0, 0}, {0, 0, 1, 1}}, 4)));
}

TEST_CASE("standard forms and extensions") {
  const FieldCtx f3 = FieldCtx::prime(3);
  CHECK(standard_form<ModP>(f3, 1, Shape::Even2n).gram() == from_integers<ModP>(f3, {{0, 1}, {1, 0}}));
  const FieldCtx q = FieldCtx::rationals();
  CHECK(standard_form<Rational>(q, 1, Shape::Odd2nPlus1).gram() ==
        from_integers<Rational>(q, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  const FieldCtx f5 = FieldCtx::prime(5);
  CHECK(witt_decompose(standard_form<ModP>(f5, 2, Shape::Even2n)).witt_index == 2);

  const auto w = extend_by_scalar(standard_form<ModP>(f5, 1, Shape::Odd2nPlus1), ModP(1, f5));
  CHECK(w.gram() == from_integers<ModP>(f5, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK_THROWS_AS(extend_by_scalar(w, ModP(0, f5)), Error);

  const auto hq = extend_by_scalar(standard_form<Rational>(q, 1, Shape::Even2n), Rational(-1));
  CHECK(witt_decompose(hq).witt_index == 1);
  const auto hm = extend_by_scalar(gram_of<Rational>(q, {{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}), Rational(1));
  const auto wd = witt_decompose(hm);
  CHECK(wd.witt_index == 2);
  check_decomposition(hm, wd);
}

TEST_CASE("witt decomposition examples") {
  const FieldCtx q = FieldCtx::rationals();
  const auto a = gram_of<Rational>(q, {{1, 0}, {0, -1}});
  CHECK(witt_decompose(a).witt_index == 1);
  check_decomposition(a, witt_decompose(a));
  const auto b = gram_of<Rational>(q, {{1, 0}, {0, 1}});
  CHECK(witt_decompose(b).witt_index == 0);
  CHECK(witt_decompose(gram_of<Rational>(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).witt_index == 0);
  // x^2 + y^2 - 5z^2 has (1, 2, 1).
  const auto c = gram_of<Rational>(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, -5}});
  CHECK(witt_decompose(c).witt_index == 1);
  check_decomposition(c, witt_decompose(c));
  // x^2 + y^2 - 3z^2 is anisotropic over Q (3 is not a sum of two rational squares).
  const auto d = gram_of<Rational>(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, -3}});
  try {
    const auto wd = witt_decompose(d);
    CHECK(wd.witt_index == 0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IsotropicSearchExhausted);
  }

  const FieldCtx f3 = FieldCtx::prime(3);
  const auto e = gram_of<ModP>(f3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(witt_decompose(e).witt_index == 1);
  check_decomposition(e, witt_decompose(e));
}

TEST_CASE("witt index on every diagonal form over F3 and F5") {
  for (std::int64_t p : {3, 5}) {
    const FieldCtx ctx = FieldCtx::prime(p);
    const auto sq = oracle::squares(p);
    for (int d = 1; d <= 4; ++d) {
      std::vector<std::int64_t> diag(static_cast<std::size_t>(d), 1);
      std::function<void(int)> rec = [&](int i) {
        if (i == d) {
          oracle::Rows g(static_cast<std::size_t>(d), oracle::Row(static_cast<std::size_t>(d), 0));
          std::int64_t det = 1;
          for (int k = 0; k < d; ++k) {
            g[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = diag[static_cast<std::size_t>(k)];
            det = det * diag[static_cast<std::size_t>(k)] % p;
          }
          const GramSpace<ModP> v(ctx, from_integers<ModP>(ctx, g));
          const auto w = witt_decompose(v);
          CHECK(w.witt_index == oracle::max_isotropic_dim(g, p));
          check_decomposition(v, w);
          if (d % 2 == 1) {
            CHECK(w.witt_index == d / 2);
          } else {
            // Split iff (-1)^(d/2) det is a square.
            const std::int64_t disc = oracle::md((d / 2) % 2 == 1 ? -det : det, p);
            CHECK(w.witt_index == (sq.count(disc) ? d / 2 : d / 2 - 1));
          }
          return;
        }
        for (std::int64_t x = 1; x < p; ++x) {
          diag[static_cast<std::size_t>(i)] = x;
          rec(i + 1);
        }
      };
      rec(0);
    }
  }
}

TEST_CASE("isometry checks and the flip") {
  const FieldCtx f5 = FieldCtx::prime(5);
  const auto v = standard_form<ModP>(f5, 2, Shape::Odd2nPlus1);
  CHECK(isometry_check(v, v, identity<ModP>(f5, 5)));
  const auto w = extend_by_scalar(v, ModP(2, f5));
  CHECK(isometry_check(w, w, flip_automorphism(w)));
  CHECK_FALSE(isometry_check(v, v, Matrix<ModP>(identity<ModP>(f5, 5) * ModP(2, f5))));
  CHECK_THROWS_AS(isometry_check(v, w, identity<ModP>(f5, 5)), Error);
}

TEST_CASE("the discriminant form") {
  const FieldCtx q = FieldCtx::rationals();
  const auto m = mumford_sym2_form<Rational>(q);
  CHECK(m.gram() == from_integers<Rational>(q, {{0, 0, -2}, {0, 1, 0}, {-2, 0, 0}}));
  CHECK(witt_decompose(m).witt_index == 1);
  const FieldCtx f5 = FieldCtx::prime(5);
  CHECK(witt_decompose(mumford_sym2_form<ModP>(f5)).witt_index == 1);
  CHECK(is_isotropic(mumford_sym2_form<ModP>(f5), span_of(f5, {{1, 0, 0}}, 3)));

  const FieldCtx f3 = FieldCtx::prime(3);
  CHECK(oracle::isotropic_subspaces({{0, 0, -2}, {0, 1, 0}, {-2, 0, 0}}, 1, 3).size() == 4);
  CHECK(enumerate_lagrangians(mumford_sym2_form<ModP>(f3)).size() == 4);

  for (std::uint32_t p : {3u, 5u}) {
    const FieldCtx ctx = FieldCtx::prime(p);
    const auto from = mumford_sym2_form<ModP>(ctx);
    const auto to = standard_form<ModP>(ctx, 1, Shape::Odd2nPlus1);
    const auto hit = similarity_search(from, to);
    REQUIRE(hit.has_value());
    const Matrix<ModP> pulled = hit->second.transpose() * from.gram() * hit->second;
    CHECK(retype(ctx, pulled) == retype(ctx, Matrix<ModP>(to.gram() * hit->first)));
    CHECK_FALSE(is_zero(determinant(hit->second)));
  }
}
