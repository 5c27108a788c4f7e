#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"

using namespace lagsub;
using testing::span_of;
using testing::span_q;
using testing::to_rows;

namespace {

std::set<oracle::Rows> as_set(const std::vector<Subspace<ModP>>& list) {
  std::set<oracle::Rows> out;
  for (const auto& s : list) out.insert(to_rows(s));
  return out;
}

}  // namespace

TEST_CASE("lagrangian predicate") {
  const FieldCtx q = FieldCtx::rationals();
  CHECK(is_lagrangian(standard_form<Rational>(q, 1, Shape::Even2n), span_q({{1, 0}}, 2)));
  CHECK(is_lagrangian(standard_form<Rational>(q, 1, Shape::Odd2nPlus1), span_q({{1, 0, 0}}, 3)));
  CHECK_FALSE(is_lagrangian(standard_form<Rational>(q, 2, Shape::Even2n), span_q({{1, 0, 0, 0}, {0, 0, 1, 0}}, 4)));
}

TEST_CASE("enumeration matches the brute-force oracle") {
  struct Case {
    Index n;
    Shape shape;
    std::uint32_t p;
    std::size_t count;
  };
  for (const Case c : {Case{1, Shape::Even2n, 3, 2}, Case{1, Shape::Odd2nPlus1, 3, 4}, Case{2, Shape::Even2n, 3, 8},
                       Case{1, Shape::Even2n, 5, 2}, Case{1, Shape::Odd2nPlus1, 5, 6}, Case{2, Shape::Even2n, 5, 12},
                       Case{2, Shape::Odd2nPlus1, 3, 40}}) {
    const FieldCtx ctx = FieldCtx::prime(c.p);
    const auto v = standard_form<ModP>(ctx, c.n, c.shape);
    const auto list = enumerate_lagrangians(v);
    const auto g = c.shape == Shape::Even2n ? oracle::split_even(static_cast<int>(c.n))
                                            : oracle::split_odd(static_cast<int>(c.n));
    const auto expected = oracle::lagrangians(g, c.p);
    CHECK(list.size() == c.count);
    CHECK(as_set(list) == expected);
    CHECK(std::is_sorted(list.begin(), list.end()));
    CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
  }
  const FieldCtx f3 = FieldCtx::prime(3);
  const auto h = enumerate_lagrangians(standard_form<ModP>(f3, 1, Shape::Even2n));
  CHECK(as_set(h) == std::set<oracle::Rows>{{{1, 0}}, {{0, 1}}});
}

TEST_CASE("enumeration errors") {
  const FieldCtx f3 = FieldCtx::prime(3);
  // x^2 + y^2 over F3 is anisotropic.
  const GramSpace<ModP> aniso(f3, from_integers<ModP>(f3, {{1, 0}, {0, 1}}));
  try {
    enumerate_lagrangians(aniso);
    FAIL("expected NotSplit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSplit);
  }
  try {
    enumerate_lagrangians(standard_form<ModP>(f3, 5, Shape::Even2n));
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("component labels") {
  const FieldCtx q = FieldCtx::rationals();
  const auto v = standard_form<Rational>(q, 2, Shape::Even2n);
  const auto ref = span_q({{1, 0, 0, 0}, {0, 1, 0, 0}}, 4);
  CHECK(component_of(v, ref, ref).label == Component::Same);
  CHECK(component_of(v, span_q({{1, 0, 0, 0}, {0, 0, 0, 1}}, 4), ref).label == Component::Other);
  CHECK(component_of(v, span_q({{0, 0, 1, 0}, {0, 0, 0, 1}}, 4), ref).label == Component::Same);
  try {
    component_of(v, span_q({{1, 0, 1, 0}, {0, 1, 0, 0}}, 4), ref);
    FAIL("expected NotLagrangian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotLagrangian);
  }
  const auto odd = standard_form<Rational>(q, 1, Shape::Odd2nPlus1);
  try {
    component_of(odd, span_q({{1, 0, 0}}, 3), span_q({{1, 0, 0}}, 3));
    FAIL("expected OddAmbient");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OddAmbient);
  }
}

TEST_CASE("lifts from odd to even") {
  const FieldCtx f5 = FieldCtx::prime(5);
  const auto v = standard_form<ModP>(f5, 1, Shape::Odd2nPlus1);
  const auto e = span_of(f5, {{1, 0, 0}}, 3);
  const auto pair = lift_odd_to_even(v, e, ModP(1, f5));
  CHECK(pair.plus_lift == span_of(f5, {{1, 0, 0, 0}, {0, 0, 1, 2}}, 4));
  CHECK(pair.minus_lift == span_of(f5, {{1, 0, 0, 0}, {0, 0, 1, 3}}, 4));
  const auto w = extend_by_scalar(v, ModP(1, f5));
  const auto base = base_hyperplane<ModP>(f5, 4);
  CHECK(restrict_even_to_odd(w, base, pair.plus_lift) == span_of(f5, {{1, 0, 0, 0}}, 4));
  CHECK(restrict_even_to_odd(w, base, pair.minus_lift) == span_of(f5, {{1, 0, 0, 0}}, 4));
  const auto flip = flip_automorphism(w);
  CHECK(image(flip, pair.plus_lift) == pair.minus_lift);
  CHECK(image(flip, pair.plus_lift) == span_of(f5, {{1, 0, 0, 0}, {0, 0, 1, -2}}, 4));
  CHECK(Matrix<ModP>(flip * flip) == identity<ModP>(f5, 4));

  const FieldCtx q = FieldCtx::rationals();
  const auto vq = standard_form<Rational>(q, 1, Shape::Odd2nPlus1);
  const auto pq = lift_odd_to_even(vq, span_q({{1, 0, 0}}, 3), Rational(-1));
  CHECK(pq.plus_lift == span_q({{1, 0, 0, 0}, {0, 0, 1, 1}}, 4));
  CHECK(pq.minus_lift == span_q({{1, 0, 0, 0}, {0, 0, 1, -1}}, 4));

  SUBCASE("non-split extension") {
    // Over Q, u^2 + w^2 has no isotropic vector.
    try {
      lift_odd_to_even(vq, span_q({{1, 0, 0}}, 3), Rational(1));
      FAIL("expected NonSplitExtension");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonSplitExtension);
    }
    // Over F3, 1 + c s^2 = 0 needs -1/c square; c = 1 gives -1, a non-square.
    const FieldCtx f3 = FieldCtx::prime(3);
    CHECK_THROWS_AS(lift_odd_to_even(standard_form<ModP>(f3, 1, Shape::Odd2nPlus1), span_of(f3, {{1, 0, 0}}, 3),
                                     ModP(1, f3)),
                    Error);
  }
  SUBCASE("not lagrangian") {
    try {
      lift_odd_to_even(v, span_of(f5, {{0, 0, 1}}, 3), ModP(1, f5));
      FAIL("expected NotLagrangian");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotLagrangian);
    }
  }
}

TEST_CASE("restriction errors") {
  const FieldCtx f5 = FieldCtx::prime(5);
  const auto w = standard_form<ModP>(f5, 2, Shape::Even2n);
  const auto f = span_of(f5, {{1, 0, 0, 0}, {0, 1, 0, 0}}, 4);
  // span(e1, e2, f1) carries a degenerate form.
  try {
    restrict_even_to_odd(w, span_of(f5, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, 4), f);
    FAIL("expected DegenerateRestriction");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateRestriction);
  }
  try {
    restrict_even_to_odd(w, span_of(f5, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 1}}, 4),
                         span_of(f5, {{1, 0, 1, 0}, {0, 1, 0, 0}}, 4));
    FAIL("expected NotLagrangian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotLagrangian);
  }
}

TEST_CASE("two-to-one correspondence over F3, F5 (n=1) and F3 (n=2)") {
  for (const auto [n, p] : {std::pair<Index, std::uint32_t>{1, 3}, {1, 5}, {2, 3}}) {
    const FieldCtx ctx = FieldCtx::prime(p);
    const auto v = standard_form<ModP>(ctx, n, Shape::Odd2nPlus1);
    const ModP c(-1, ctx);
    const auto w = extend_by_scalar(v, c);
    const auto base = base_hyperplane<ModP>(ctx, w.dim());
    const auto odd = enumerate_lagrangians(v);
    const auto even = enumerate_lagrangians(w);
    CHECK(as_set(odd) == oracle::lagrangians(oracle::split_odd(static_cast<int>(n)), p));
    CHECK(as_set(even) == oracle::lagrangians(oracle::extend(oracle::split_odd(static_cast<int>(n)), -1), p));
    CHECK(even.size() == 2 * odd.size());

    std::map<oracle::Rows, std::vector<Subspace<ModP>>> fibres;
    for (const auto& f : even) {
      const auto e = restrict_even_to_odd(w, base, f);
      CHECK(e.dim() == n);
      // Drop the last coordinate to land in V.
      fibres[to_rows(coordinates_in(e, base))].push_back(f);
    }
    CHECK(fibres.size() == odd.size());
    const auto flip = flip_automorphism(w);
    for (const auto& e : odd) {
      const auto& fib = fibres[to_rows(e)];
      REQUIRE(fib.size() == 2);
      CHECK(component_of(w, fib[0], fib[1]).label == Component::Other);
      CHECK(image(flip, fib[0]) == fib[1]);
      const auto pair = lift_odd_to_even(v, e, c);
      CHECK(std::set<Subspace<ModP>>{pair.plus_lift, pair.minus_lift} == std::set<Subspace<ModP>>{fib[0], fib[1]});
    }
    // One component has as many members as OG(n, 2n+1).
    std::size_t same = 0;
    for (const auto& f : even) same += component_of(w, f, even.front()).label == Component::Same;
    CHECK(same == odd.size());
  }
}

TEST_CASE("lift intersection law") {
  for (const auto [n, p] : {std::pair<Index, std::uint32_t>{1, 3}, {2, 3}}) {
    const FieldCtx ctx = FieldCtx::prime(p);
    const auto v = standard_form<ModP>(ctx, n, Shape::Odd2nPlus1);
    const ModP c(-1, ctx);
    const auto w = extend_by_scalar(v, c);
    const auto odd = enumerate_lagrangians(v);
    std::vector<LiftPair<ModP>> lifts;
    for (const auto& e : odd) lifts.push_back(lift_odd_to_even(v, e, c));
    for (std::size_t i = 0; i < odd.size(); ++i)
      for (std::size_t j = 0; j < odd.size(); ++j) {
        const Index r = intersect(odd[i], odd[j]).dim();
        for (const auto& f : {lifts[i].plus_lift, lifts[i].minus_lift})
          for (const auto& g : {lifts[j].plus_lift, lifts[j].minus_lift}) {
            const Index m = intersect(f, g).dim();
            CHECK((m == r || m == r + 1));
            const bool same = component_of(w, f, g).label == Component::Same;
            CHECK(same == ((m - (n + 1)) % 2 == 0));
          }
      }
  }
}

TEST_CASE("corank law") {
  const FieldCtx f3 = FieldCtx::prime(3);
  const auto v1 = standard_form<ModP>(f3, 1, Shape::Odd2nPlus1);
  const auto rec = complement_corank_law(v1, span_of(f3, {{1, 0, 0}}, 3), span_of(f3, {{0, 1, 0}}, 3));
  CHECK(rec.r == 0);
  CHECK(rec.h == 1);
  const auto v = standard_form<ModP>(f3, 2, Shape::Odd2nPlus1);
  const auto all = enumerate_lagrangians(v);
  REQUIRE(all.size() == 40);
  const auto same = complement_corank_law(v, all[7], all[7]);
  CHECK(same.r == 2);
  CHECK(same.h == 3);
  CHECK_THROWS_AS(complement_corank_law(v1, span_of(f3, {{0, 0, 1}}, 3), span_of(f3, {{1, 0, 0}}, 3)), Error);
}

TEST_CASE("tangent dimension") {
  CHECK(og_tangent_dim(1) == 1);
  CHECK(og_tangent_dim(2) == 3);
  CHECK(og_tangent_dim(4) == 10);
  CHECK_THROWS_AS(og_tangent_dim(0), Error);
}
