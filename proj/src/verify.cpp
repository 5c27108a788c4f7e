#include "lagsub/verify.hpp"

#include <map>
#include <random>
#include <sstream>

namespace lagsub::verify {

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string Report::render() const {
  std::ostringstream os;
  os << "verify " << suite;
  if (!params.empty()) os << " (" << params << ")";
  os << "\n";
  for (const auto& c : checks) os << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
  os << (passed() ? "PASS" : "FAIL") << ": " << summary << "\n";
  return os.str();
}

json::Json Report::to_json() const {
  json::Json j;
  j["suite"] = suite;
  j["params"] = params;
  j["passed"] = passed();
  j["summary"] = summary;
  json::Json list = json::Json::array();
  for (const auto& c : checks) {
    json::Json item;
    item["name"] = c.name;
    item["passed"] = c.passed;
    item["detail"] = c.detail;
    list.push_back(std::move(item));
  }
  j["checks"] = std::move(list);
  return j;
}

namespace {

std::string params_nq(Index n, std::uint32_t q) { return "n=" + std::to_string(n) + ", q=" + std::to_string(q); }

FieldCtx checked_field(Index dim, std::uint32_t q, const Limits& limits) {
  const FieldCtx ctx = FieldCtx::prime(q);
  if (q > limits.max_q)
    throw Error(ErrorKind::CapExceeded, "q = " + std::to_string(q) + " exceeds cap " + std::to_string(limits.max_q));
  if (dim > limits.max_dim)
    throw Error(ErrorKind::CapExceeded,
                "dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(limits.max_dim));
  return ctx;
}

std::string describe(const Subspace<ModP>& s) { return json::encode(s).dump(); }

// rel[i][j] == true iff L_i and L_j lie in the same component.
std::vector<std::vector<bool>> same_component_matrix(const GramSpace<ModP>& v,
                                                     const std::vector<Subspace<ModP>>& ls) {
  const std::size_t m = ls.size();
  std::vector<std::vector<bool>> rel(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) rel[i][j] = component_of(v, ls[i], ls[j]).label == Component::Same;
  return rel;
}

}  // namespace

OddEvenPair odd_even_pair(Index n, const FieldCtx& ctx) {
  GramSpace<ModP> odd = standard_form<ModP>(ctx, n, Shape::Odd2nPlus1);
  const ModP c(-1, ctx.p);
  GramSpace<ModP> even = extend_by_scalar(odd, c);
  return {std::move(odd), std::move(even), c};
}

Report parity(Index n, std::uint32_t q, const Limits& limits) {
  const FieldCtx ctx = checked_field(2 * n, q, limits);
  Report report{"parity", params_nq(n, q), {}, {}};
  const GramSpace<ModP> v = standard_form<ModP>(ctx, n, Shape::Even2n);
  const auto ls = enumerate_lagrangians(v, {limits.max_dim});
  const auto rel = same_component_matrix(v, ls);
  const std::size_t m = ls.size();

  std::size_t same = 0;
  for (std::size_t i = 0; i < m; ++i) same += rel[0][i] ? 1 : 0;
  report.checks.push_back({"equal classes", m > 0 && 2 * same == m,
                           std::to_string(m) + " Lagrangians, components " + std::to_string(same) + "+" +
                               std::to_string(m - same)});

  std::string bad;
  for (std::size_t i = 0; i < m && bad.empty(); ++i)
    if (!rel[i][i]) bad = describe(ls[i]);
  report.checks.push_back({"reflexive", bad.empty(), bad.empty() ? "every Lagrangian is Same as itself" : bad});

  bad.clear();
  for (std::size_t i = 0; i < m && bad.empty(); ++i)
    for (std::size_t j = 0; j < m && bad.empty(); ++j)
      if (rel[i][j] != rel[j][i]) bad = describe(ls[i]) + " vs " + describe(ls[j]);
  report.checks.push_back({"symmetric", bad.empty(), bad.empty() ? "relation is symmetric" : bad});

  bad.clear();
  for (std::size_t i = 0; i < m && bad.empty(); ++i)
    for (std::size_t j = 0; j < m && bad.empty(); ++j) {
      if (!rel[i][j]) continue;
      for (std::size_t k = 0; k < m && bad.empty(); ++k)
        if (rel[j][k] && !rel[i][k]) bad = describe(ls[i]) + ", " + describe(ls[j]) + ", " + describe(ls[k]);
    }
  report.checks.push_back({"transitive", bad.empty(), bad.empty() ? "relation is transitive" : bad});

  // Two classes: anything Other than L_0 is Same as every other such element.
  bad.clear();
  for (std::size_t j = 0; j < m && bad.empty(); ++j)
    for (std::size_t i = 0; i < m && bad.empty(); ++i)
      if (rel[j][i] != (rel[0][i] == rel[0][j])) bad = "reference " + describe(ls[j]);
  report.checks.push_back({"reference independent", bad.empty(),
                           bad.empty() ? "every reference induces the same two classes" : bad});

  report.summary = std::to_string(m) + " Lagrangians, components " + std::to_string(same) + "+" +
                   std::to_string(m - same) + ", relation transitive";
  return report;
}

Report bijection(Index n, std::uint32_t q, const Limits& limits) {
  const FieldCtx ctx = checked_field(2 * n + 2, q, limits);
  Report report{"bijection", params_nq(n, q), {}, {}};
  const auto [odd, even, c] = odd_even_pair(n, ctx);
  const auto odd_ls = enumerate_lagrangians(odd, {limits.max_dim});
  const auto even_ls = enumerate_lagrangians(even, {limits.max_dim});
  std::size_t same = 0;
  for (const auto& f : even_ls) same += component_of(even, f, even_ls.front()).label == Component::Same ? 1 : 0;
  const std::size_t other = even_ls.size() - same;
  const bool ok = same == odd_ls.size() && other == odd_ls.size();
  const std::string detail = "|OG(" + std::to_string(n) + "," + std::to_string(2 * n + 1) + ")| = " +
                             std::to_string(odd_ls.size()) + ", |OG(" + std::to_string(n + 1) + "," +
                             std::to_string(2 * n + 2) + ")_i| = " + std::to_string(same) + " and " +
                             std::to_string(other);
  report.checks.push_back({"component sizes", ok, detail});
  report.summary = detail;
  return report;
}

Report two_to_one(Index n, std::uint32_t q, const Limits& limits) {
  const FieldCtx ctx = checked_field(2 * n + 2, q, limits);
  Report report{"two_to_one", params_nq(n, q), {}, {}};
  const auto [odd, even, c] = odd_even_pair(n, ctx);
  const auto odd_ls = enumerate_lagrangians(odd, {limits.max_dim});
  const auto even_ls = enumerate_lagrangians(even, {limits.max_dim});
  const Subspace<ModP> hyper = base_hyperplane<ModP>(ctx, even.dim());
  const Matrix<ModP> flip = flip_automorphism(even);

  std::map<Subspace<ModP>, std::vector<Subspace<ModP>>> fibers;
  for (const auto& f : even_ls) fibers[coordinates_in(restrict_even_to_odd(even, hyper, f), hyper)].push_back(f);

  bool onto = fibers.size() == odd_ls.size();
  for (const auto& e : odd_ls) onto = onto && fibers.count(e) == 1;
  report.checks.push_back({"image is OG(n,2n+1)", onto,
                           std::to_string(fibers.size()) + " distinct restrictions, " + std::to_string(odd_ls.size()) +
                               " odd Lagrangians"});

  std::string bad;
  for (const auto& [e, fs] : fibers)
    if (fs.size() != 2 && bad.empty()) bad = describe(e) + " has " + std::to_string(fs.size()) + " preimages";
  report.checks.push_back({"fibers have size 2", bad.empty(),
                           bad.empty() ? std::to_string(even_ls.size()) + " -> " + std::to_string(fibers.size()) : bad});

  bad.clear();
  for (const auto& [e, fs] : fibers) {
    if (fs.size() != 2 || !bad.empty()) continue;
    if (component_of(even, fs[0], fs[1]).label != Component::Other) bad = "same component over " + describe(e);
  }
  report.checks.push_back({"opposite components", bad.empty(), bad.empty() ? "each fiber meets both components" : bad});

  bad.clear();
  for (const auto& [e, fs] : fibers) {
    if (fs.size() != 2 || !bad.empty()) continue;
    if (!(image(flip, fs[0]) == fs[1] && image(flip, fs[1]) == fs[0])) bad = "flip does not swap fiber over " + describe(e);
  }
  report.checks.push_back({"flip swaps fibers", bad.empty(), bad.empty() ? "flip exchanges the two lifts" : bad});

  bad.clear();
  for (const auto& e : odd_ls) {
    if (!bad.empty()) break;
    const LiftPair<ModP> lp = lift_odd_to_even(odd, e, c);
    const auto it = fibers.find(e);
    const bool match = it != fibers.end() && it->second.size() == 2 &&
                       ((lp.plus_lift == it->second[0] && lp.minus_lift == it->second[1]) ||
                        (lp.plus_lift == it->second[1] && lp.minus_lift == it->second[0]));
    const bool round_trip = coordinates_in(restrict_even_to_odd(even, hyper, lp.plus_lift), hyper) == e &&
                            coordinates_in(restrict_even_to_odd(even, hyper, lp.minus_lift), hyper) == e;
    if (!match || !round_trip) bad = describe(e);
  }
  report.checks.push_back({"lifts are the fibers", bad.empty(), bad.empty() ? "lift_odd_to_even reproduces every fiber and round-trips" : bad});

  // For Lagrangians E, E~ with r = dim(E ∩ E~) and lifts F, F~:
  // dim(F ∩ F~) ∈ {r, r+1}, ≡ n+1 mod 2 exactly when F, F~ share a component.
  bad.clear();
  std::size_t pairs = 0;
  for (const auto& [e1, fs1] : fibers)
    for (const auto& [e2, fs2] : fibers) {
      const Index r = intersect(e1, e2).dim();
      for (const auto& f1 : fs1)
        for (const auto& f2 : fs2) {
          ++pairs;
          const Index meet = intersect(f1, f2).dim();
          const bool same = component_of(even, f1, f2).label == Component::Same;
          const bool ok = (meet == r || meet == r + 1) && (same == ((meet - (n + 1)) % 2 == 0));
          if (!ok && bad.empty()) bad = describe(f1) + " vs " + describe(f2);
        }
    }
  report.checks.push_back({"lift intersection law", bad.empty(),
                           bad.empty() ? std::to_string(pairs) + " lift pairs obey dim(F∩F~) ∈ {r, r+1}" : bad});

  report.summary = std::to_string(even_ls.size()) + " even Lagrangians map 2:1 onto " +
                   std::to_string(odd_ls.size()) + " odd ones";
  return report;
}

Report corank(Index n, std::uint32_t q, const Limits& limits) {
  const FieldCtx ctx = checked_field(2 * n + 1, q, limits);
  Report report{"corank", params_nq(n, q), {}, {}};
  const GramSpace<ModP> v = standard_form<ModP>(ctx, n, Shape::Odd2nPlus1);
  const auto ls = enumerate_lagrangians(v, {limits.max_dim});
  std::string bad;
  std::map<Index, std::size_t> histogram;
  for (const auto& a : ls)
    for (const auto& b : ls) {
      const CorankRecord rec = complement_corank_law(v, a, b);
      ++histogram[rec.r];
      if (rec.h != rec.r + 1 && bad.empty())
        bad = describe(a) + ", " + describe(b) + ": r=" + std::to_string(rec.r) + " h=" + std::to_string(rec.h);
    }
  std::string hist;
  for (const auto& [r, count] : histogram) hist += (hist.empty() ? "" : ", ") + ("r=" + std::to_string(r) + ": " + std::to_string(count));
  report.checks.push_back({"h = r + 1", bad.empty(), bad.empty() ? std::to_string(ls.size() * ls.size()) + " pairs (" + hist + ")" : bad});
  report.summary = std::to_string(ls.size() * ls.size()) + " Lagrangian pairs satisfy h = r + 1";
  return report;
}

Index brute_force_witt_index(const std::vector<std::vector<std::int64_t>>& gram, std::int64_t p) {
  const std::size_t d = gram.size();
  if (d > 6) throw Error(ErrorKind::CapExceeded, "brute-force Witt index is limited to dim 6");
  auto md = [p](std::int64_t x) { return ((x % p) + p) % p; };
  auto form = [&](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) s = md(s + x[i] * gram[i][j] % p * y[j]);
    return s;
  };
  // Isotropic points, normalized to a leading 1.
  std::vector<std::vector<std::int64_t>> points;
  std::vector<std::int64_t> x(d, 0);
  for (;;) {
    std::size_t pos = d;
    while (pos > 0 && x[pos - 1] == p - 1) x[--pos] = 0;
    if (pos == 0) break;
    ++x[pos - 1];
    std::size_t lead = 0;
    while (x[lead] == 0) ++lead;
    if (x[lead] == 1 && form(x, x) == 0) points.push_back(x);
  }

  auto inverse = [&](std::int64_t a) {
    std::int64_t r = 1, b = md(a), e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  // Reduces v against an echelon list; true iff v is independent of it.
  auto independent = [&](std::vector<std::vector<std::int64_t>> rows, std::vector<std::int64_t> v) {
    rows.push_back(std::move(v));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][col] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      const std::int64_t inv = inverse(rows[rank][col]);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == rank || rows[i][col] == 0) continue;
        const std::int64_t f = rows[i][col] * inv % p;
        for (std::size_t k = 0; k < d; ++k) rows[i][k] = md(rows[i][k] - f * rows[rank][k]);
      }
      ++rank;
    }
    return rank == rows.size();
  };

  const Index cap = static_cast<Index>(d / 2);
  Index best = 0;
  std::vector<std::vector<std::int64_t>> chosen;
  // Points are taken in increasing index order; any isotropic subspace has a
  // basis of such points, so this loses nothing.
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    best = std::max(best, static_cast<Index>(chosen.size()));
    if (best == cap) return;
    for (std::size_t i = start; i < points.size() && best < cap; ++i) {
      bool ok = true;
      for (const auto& c : chosen) ok = ok && form(c, points[i]) == 0;
      if (!ok || !independent(chosen, points[i])) continue;
      chosen.push_back(points[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
  return best;
}

Report witt(int samples, std::uint64_t seed, Index max_dim, const std::vector<std::uint32_t>& primes) {
  Report report{"witt",
                "samples=" + std::to_string(samples) + ", seed=" + std::to_string(seed) + ", max_dim=" + std::to_string(max_dim),
                {}, {}};
  if (primes.empty()) throw Error(ErrorKind::OutOfRange, "no primes given");
  if (max_dim < 1 || max_dim > 6) throw Error(ErrorKind::CapExceeded, "witt suite supports dimensions 1..6");
  std::mt19937_64 rng(seed);
  int isometry_fail = 0, index_fail = 0, aniso_fail = 0, cap_fail = 0, tried = 0;
  std::string first_bad;
  for (int s = 0; s < samples;) {
    const std::uint32_t p = primes[rng() % primes.size()];
    const FieldCtx ctx = FieldCtx::prime(p);
    const Index d = 1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(max_dim));
    std::vector<std::vector<std::int64_t>> g(static_cast<std::size_t>(d), std::vector<std::int64_t>(static_cast<std::size_t>(d)));
    for (Index i = 0; i < d; ++i)
      for (Index j = i; j < d; ++j)
        g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
            static_cast<std::int64_t>(rng() % p);
    ++tried;
    const GramSpace<ModP> v(ctx, from_integers<ModP>(ctx, g));
    if (!v.nondegenerate()) continue;
    ++s;
    const auto w = witt_decompose(v);
    const GramSpace<ModP> block(ctx, w.block_form(ctx));
    const bool iso = isometry_check(v, block, w.change_of_basis);
    const Index brute = brute_force_witt_index(g, p);
    const Matrix<ModP>& ag = w.anisotropic_part.gram();
    std::vector<std::vector<std::int64_t>> aniso(static_cast<std::size_t>(ag.rows()), std::vector<std::int64_t>(static_cast<std::size_t>(ag.rows())));
    for (Index i = 0; i < ag.rows(); ++i)
      for (Index j = 0; j < ag.rows(); ++j) aniso[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ag(i, j).residue();
    const bool aniso_ok = ag.rows() == 0 || brute_force_witt_index(aniso, p) == 0;
    const bool cap_ok = d % 2 == 1 ? w.witt_index == d / 2 : (w.witt_index == d / 2 || w.witt_index == d / 2 - 1);
    isometry_fail += iso ? 0 : 1;
    index_fail += brute == w.witt_index ? 0 : 1;
    aniso_fail += aniso_ok ? 0 : 1;
    cap_fail += cap_ok ? 0 : 1;
    if ((!iso || brute != w.witt_index || !aniso_ok || !cap_ok) && first_bad.empty())
      first_bad = json::encode(v).dump() + " index " + std::to_string(w.witt_index) + " brute " + std::to_string(brute);
  }
  auto line = [&](const char* name, int fails, const std::string& ok_text) {
    report.checks.push_back({name, fails == 0, fails == 0 ? ok_text : std::to_string(fails) + " failures, first " + first_bad});
  };
  const std::string n = std::to_string(samples);
  line("isometry onto block form", isometry_fail, n + " decompositions verified");
  line("index matches brute force", index_fail, n + " indices agree");
  line("anisotropic remainder", aniso_fail, "no isotropic vector left in any remainder");
  line("dimension cap", cap_fail, "odd dim 2m+1 has index m, even dim 2m has index m or m-1");
  report.summary = n + " nondegenerate forms (" + std::to_string(tried - samples) + " degenerate draws rejected)";
  return report;
}

Report tables(std::int64_t g_max, std::int64_t n_max) {
  using namespace strata;
  Report report{"tables", "gmax=" + std::to_string(g_max) + ", nmax=" + std::to_string(n_max), {}, {}};
  std::string table_bad, dim_bad, h0_bad, param_bad, bound_bad, mono_bad, comp_bad;
  std::size_t count = 0;
  for (std::int64_t g = 2; g <= g_max; ++g)
    for (std::int64_t n = 1; n <= n_max; ++n) {
      ++count;
      const CurveParams p = CurveParams::make(g, n);
      const std::int64_t N = p.threshold();
      const std::string where = "(g=" + std::to_string(g) + ", n=" + std::to_string(n) + ")";

      // Tabulated rows, by N mod 4: t offset from N, component, 2·dim M / n.
      struct Expected {
        std::int64_t offset;
        Sign sign;
        std::int64_t halves;
      };
      static const Expected kTable[4][2] = {
          {{0, Sign::Plus, 0}, {2, Sign::Minus, 2}},
          {{1, Sign::Minus, 1}, {3, Sign::Plus, 3}},
          {{0, Sign::Minus, 0}, {2, Sign::Plus, 2}},
          {{1, Sign::Plus, 1}, {3, Sign::Minus, 3}},
      };
      const auto rows = mod4_table(p);
      for (int k = 0; k < 2; ++k) {
        const Expected& ex = kTable[N % 4][k];
        const auto& row = rows[static_cast<std::size_t>(k)];
        if ((row.t != N + ex.offset || row.component != ex.sign || 2 * row.dim_max_lagrangians != ex.halves * n) &&
            table_bad.empty())
          table_bad = where;
      }
      if (rows[0].component == rows[1].component && comp_bad.empty()) comp_bad = where;

      if (N % 2 == 0 && stratum_dim(p, N).dim != moduli_dim(p) && dim_bad.empty()) dim_bad = where;
      std::int64_t prev = -1;
      for (std::int64_t t = 2; t <= sharp_bound(p); t += 2) {
        const std::int64_t d = stratum_dim(p, t).dim;
        const bool ok = t <= N ? d > prev : d == moduli_dim(p);
        if (!ok && mono_bad.empty()) mono_bad = where + " t=" + std::to_string(t);
        prev = d;
        if (2 * (t / 2) >= N && dim_max_lagrangians(p, t).dim != h0_wedge2(p, t / 2) && h0_bad.empty())
          h0_bad = where + " t=" + std::to_string(t);
      }
      for (std::int64_t e = 1; e <= N + 2; ++e) {
        const ParamSpace ps = param_space_dim(p, e);
        const bool ok = ps.dim == (n * n * (g - 1) + 1) + (ps.h1_e - 1) + ps.h1_wedge2_e &&
                        (2 * e >= N || stratum_dim(p, 2 * e).dim == ps.dim);
        if (!ok && param_bad.empty()) param_bad = where + " e=" + std::to_string(e);
      }
      if (n >= 2 && hn_bound(p) < Rational(sharp_bound(p)) && bound_bad.empty()) bound_bad = where;
    }
  auto add = [&](const char* name, const std::string& bad, const std::string& ok_text) {
    report.checks.push_back({name, bad.empty(), bad.empty() ? ok_text : "counterexample " + bad});
  };
  const std::string range = std::to_string(count) + " parameter pairs";
  add("mod-4 tables", table_bad, range + " match the four tables");
  add("opposite components", comp_bad, "the two general values lie in opposite components");
  add("stratum_dim(N) = moduli_dim", dim_bad, "branches agree at t = N");
  add("monotonicity", mono_bad, "strictly increasing below N, constant above");
  add("dim M = h0(wedge2 F*)", h0_bad, "agree for every t >= N");
  add("parameter space sum", param_bad, "dim A_e = [n²(g-1)+1] + [h¹(E)-1] + h¹(∧²E), and equals the stratum dimension below N");
  add("sharp <= HN", bound_bad, "HN bound dominates for n >= 2");
  report.summary = range + " checked";
  return report;
}

Report exceptions(std::int64_t g_max, std::int64_t n_max) {
  using namespace strata;
  Report report{"exceptions", "gmax=" + std::to_string(g_max) + ", nmax=" + std::to_string(n_max), {}, {}};
  const auto found = hirschowitz_exceptions(g_max, n_max);
  const auto listed = hirschowitz_listed_cases(g_max, n_max);
  auto fmt = [](const HirschowitzCase& c) {
    return "(g=" + std::to_string(c.g) + ", n=" + std::to_string(c.n) + ", t=" + std::to_string(c.t) + ")";
  };
  std::string extra, missing;
  for (const auto& c : found)
    if (!std::binary_search(listed.begin(), listed.end(), c)) extra += (extra.empty() ? "" : ", ") + fmt(c);
  for (const auto& c : listed)
    if (!std::binary_search(found.begin(), found.end(), c)) {
      const std::int64_t bound = hirschowitz_bound(CurveParams{c.g, c.n});
      missing += (missing.empty() ? "" : ", ") + fmt(c) + " has bound " + std::to_string(bound) + " < t/2 = " +
                 std::to_string(c.t / 2);
    }
  report.checks.push_back({"no unlisted exceptions", extra.empty(),
                           extra.empty() ? std::to_string(found.size()) + " exceptions, all listed" : "unlisted " + extra});
  report.checks.push_back({"every listed case is an exception", missing.empty(),
                           missing.empty() ? std::to_string(listed.size()) + " listed cases, all found" : "not an exception: " + missing});
  report.summary = missing.empty() && extra.empty() ? "exception set equals the four listed families"
                                                    : "exception set differs from the four listed families";
  return report;
}

}  // namespace lagsub::verify
