#include "lagsub/strata.hpp"

#include <algorithm>

namespace lagsub::strata {

CurveParams CurveParams::make(std::int64_t g, std::int64_t n) {
  if (g < 2) throw Error(ErrorKind::OutOfRange, "genus must be >= 2, got " + std::to_string(g));
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be >= 1, got " + std::to_string(n));
  return {g, n};
}

Sign component_of_t(std::int64_t t) { return t % 4 == 0 ? Sign::Plus : Sign::Minus; }

std::int64_t moduli_dim(const CurveParams& p) { return p.n * (2 * p.n + 1) * (p.g - 1); }

std::int64_t sharp_bound(const CurveParams& p) { return p.threshold() + 3; }

Rational hn_bound(const CurveParams& p) {
  if (p.n == 1) throw Error(ErrorKind::Undefined, "the bound n(n+1)g/(n-1) needs n >= 2");
  return Rational(mpz_class(p.n * (p.n + 1) * p.g), mpz_class(p.n - 1));
}

std::array<GeneralValue, 2> general_t_values(const CurveParams& p) {
  const std::int64_t N = p.threshold();
  const std::int64_t lo = N % 2 == 0 ? N : N + 1;
  return {GeneralValue{lo, component_of_t(lo)}, GeneralValue{lo + 2, component_of_t(lo + 2)}};
}

namespace {

void require_t(const CurveParams& p, std::int64_t t) {
  if (t <= 0 || t % 2 != 0 || t > sharp_bound(p))
    throw Error(ErrorKind::OutOfRange, "t = " + std::to_string(t) + " is not an even value in (0, " +
                                           std::to_string(sharp_bound(p)) + "]");
}

Regime regime_of(const CurveParams& p, std::int64_t t) {
  const std::int64_t N = p.threshold();
  return t < N ? Regime::Lower : (t == N ? Regime::Threshold : Regime::Dense);
}

}  // namespace

StratumDimension stratum_dim(const CurveParams& p, std::int64_t t) {
  require_t(p, t);
  const Regime regime = regime_of(p, t);
  if (regime == Regime::Dense) return {moduli_dim(p), regime};
  // n(3n+1) and n·t are both even.
  return {p.n * (3 * p.n + 1) * (p.g - 1) / 2 + p.n * t / 2, regime};
}

MaxLagrangians dim_max_lagrangians(const CurveParams& p, std::int64_t t) {
  require_t(p, t);
  switch (regime_of(p, t)) {
    case Regime::Lower: return {0, MaxLagrangianCount::Unique};
    case Regime::Threshold: return {0, MaxLagrangianCount::Finite};
    case Regime::Dense: break;
  }
  // t > N even: either N even (t - N even) or N odd, and then n is even.
  return {p.n * (t - p.threshold()) / 2, MaxLagrangianCount::Infinite};
}

std::vector<std::string> flags_for(const CurveParams& p, std::int64_t t) {
  switch (regime_of(p, t)) {
    case Regime::Lower: return {"formula", "unique"};
    case Regime::Threshold: return {"formula", "dense", "finitely_many"};
    case Regime::Dense: break;
  }
  return {"dense", "infinite"};
}

StratumRow stratum_row(const CurveParams& p, std::int64_t t) {
  StratumRow row;
  row.g = p.g;
  row.n = p.n;
  row.t = t;
  row.e = t / 2;
  row.component = component_of_t(t);
  row.stratum_dim = stratum_dim(p, t).dim;
  row.dim_max_lagrangians = dim_max_lagrangians(p, t).dim;
  row.flags = flags_for(p, t);
  return row;
}

std::vector<StratumRow> mod4_table(const CurveParams& p) {
  std::vector<StratumRow> rows;
  for (const auto& v : general_t_values(p)) rows.push_back(stratum_row(p, v.t));
  return rows;
}

std::int64_t hirschowitz_bound(const CurveParams& p) {
  const std::int64_t num = p.n * (p.n + 1) * (p.g - 1);
  const std::int64_t den = 2 * p.n + 1;
  return (num + den - 1) / den;
}

std::vector<HirschowitzCase> hirschowitz_exceptions(std::int64_t g_max, std::int64_t n_max) {
  std::vector<HirschowitzCase> out;
  for (std::int64_t g = 2; g <= g_max; ++g)
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const CurveParams p{g, n};
      const std::int64_t bound = hirschowitz_bound(p);
      for (const auto& v : general_t_values(p))
        if (!(2 * bound < v.t)) out.push_back({g, n, v.t});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HirschowitzCase> hirschowitz_listed_cases(std::int64_t g_max, std::int64_t n_max) {
  std::vector<HirschowitzCase> out;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (g_max >= 2) out.push_back({2, n, n % 2 == 1 ? n + 1 : n + 2});
    if (g_max >= 3) out.push_back({3, n, 2 * (n + 1)});
    if (g_max >= 4 && n % 2 == 1) out.push_back({4, n, 3 * (n + 1)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

ParamSpace param_space_dim(const CurveParams& p, std::int64_t e) {
  if (e < 1) throw Error(ErrorKind::OutOfRange, "e must be positive");
  const std::int64_t n = p.n;
  const std::int64_t g1 = p.g - 1;
  return {n * (3 * n + 1) * g1 / 2 + n * e, e + n * g1, (n - 1) * e + n * (n - 1) * g1 / 2};
}

std::int64_t h0_wedge2(const CurveParams& p, std::int64_t e) {
  if (e < 1) throw Error(ErrorKind::OutOfRange, "e must be positive");
  // e <= ½(n+1)(g-1)  ⟺  2e <= N
  if (2 * e <= p.threshold()) return 0;
  return p.n * e - p.n * (p.n + 1) * (p.g - 1) / 2;
}

std::vector<std::int64_t> closure_chain(const CurveParams& p, Sign component) {
  std::vector<std::int64_t> chain;
  for (std::int64_t t = component == Sign::Plus ? 4 : 2; t <= sharp_bound(p); t += 4) chain.push_back(t);
  return chain;
}

}  // namespace lagsub::strata
