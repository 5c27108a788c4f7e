#pragma once

// Closed-form invariants of the stratification of the moduli space of
// orthogonal bundles of rank 2n+1 over a curve of genus g by the Segre
// invariant t (= -2 × the maximal degree of a Lagrangian subbundle).
//
// Everything here is exact integer arithmetic; hn_bound is the only rational.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lagsub/field.hpp"

namespace lagsub::strata {

struct CurveParams {
  std::int64_t g;
  std::int64_t n;

  // Throws OutOfRange unless g >= 2 and n >= 1.
  static CurveParams make(std::int64_t g, std::int64_t n);

  // (n+1)(g-1): the threshold between the lower strata and the dense ones.
  std::int64_t threshold() const noexcept { return (n + 1) * (g - 1); }
};

enum class Sign { Plus, Minus };

inline const char* to_string(Sign s) noexcept { return s == Sign::Plus ? "+" : "-"; }

// Component of the stratum with invariant t: + iff t ≡ 0 mod 4.
Sign component_of_t(std::int64_t t);

// t < N, t = N, t > N.
enum class Regime { Lower, Threshold, Dense };

struct StratumDimension {
  std::int64_t dim;
  Regime regime;
};

// Unique for t < N, finitely many for t = N, a positive-dimensional family
// for t > N.
enum class MaxLagrangianCount { Unique, Finite, Infinite };

struct MaxLagrangians {
  std::int64_t dim;
  MaxLagrangianCount count;
};

struct GeneralValue {
  std::int64_t t;
  Sign component;
};

struct StratumRow {
  std::int64_t g = 0;
  std::int64_t n = 0;
  std::int64_t t = 0;
  std::int64_t e = 0;
  Sign component = Sign::Plus;
  std::int64_t stratum_dim = 0;
  std::int64_t dim_max_lagrangians = 0;
  std::vector<std::string> flags;

  friend bool operator==(const StratumRow&, const StratumRow&) = default;
};

struct ParamSpace {
  std::int64_t dim;          // ½n(3n+1)(g-1) + ne
  std::int64_t h1_e;         // e + n(g-1)
  std::int64_t h1_wedge2_e;  // (n-1)e + ½n(n-1)(g-1)
};

struct HirschowitzCase {
  std::int64_t g;
  std::int64_t n;
  std::int64_t t;

  friend auto operator<=>(const HirschowitzCase&, const HirschowitzCase&) = default;
};

std::int64_t moduli_dim(const CurveParams& p);
std::int64_t sharp_bound(const CurveParams& p);
// n(n+1)g / (n-1); Undefined for n = 1.
Rational hn_bound(const CurveParams& p);
std::array<GeneralValue, 2> general_t_values(const CurveParams& p);

// OutOfRange unless t is even with 0 < t <= sharp_bound(p).
StratumDimension stratum_dim(const CurveParams& p, std::int64_t t);
MaxLagrangians dim_max_lagrangians(const CurveParams& p, std::int64_t t);

StratumRow stratum_row(const CurveParams& p, std::int64_t t);
// The two rows for the general values of t.
std::vector<StratumRow> mod4_table(const CurveParams& p);

// ⌈n(n+1)(g-1) / (2n+1)⌉
std::int64_t hirschowitz_bound(const CurveParams& p);
// (g, n, t) with 2 <= g <= g_max, 1 <= n <= n_max, t a general value, and
// hirschowitz_bound >= t/2. Sorted.
std::vector<HirschowitzCase> hirschowitz_exceptions(std::int64_t g_max, std::int64_t n_max);
// The four listed families of exceptional cases, instantiated in range:
// (i) g=2, n odd, t=n+1; (ii) g=2, n even, t=n+2; (iii) g=3, t=2(n+1);
// (iv) g=4, n odd, t=3(n+1). Sorted.
std::vector<HirschowitzCase> hirschowitz_listed_cases(std::int64_t g_max, std::int64_t n_max);

// OutOfRange for e < 1.
ParamSpace param_space_dim(const CurveParams& p, std::int64_t e);
std::int64_t h0_wedge2(const CurveParams& p, std::int64_t e);

// All even t in (0, sharp_bound] on the given component, ascending; each
// stratum lies in the closure of the next.
std::vector<std::int64_t> closure_chain(const CurveParams& p, Sign component);

std::vector<std::string> flags_for(const CurveParams& p, std::int64_t t);

}  // namespace lagsub::strata
