#pragma once

// Exhaustive property checks over small finite fields and formula scans,
// shared by the `verify` CLI subcommand.

#include <cstdint>
#include <string>
#include <vector>

#include "lagsub/json.hpp"

namespace lagsub::verify {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::string params;
  std::vector<Check> checks;
  std::string summary;

  bool passed() const;
  std::string render() const;
  json::Json to_json() const;
};

struct Limits {
  Index max_dim = 8;
  std::uint32_t max_q = 7;
};

// Lagrangians of the split space of dim 2n split into two equal classes by
// the intersection-parity relation, which is an equivalence.
Report parity(Index n, std::uint32_t q, const Limits& limits = {});
// |OG(n, 2n+1)| equals the size of each component of OG(n+1, 2n+2).
Report bijection(Index n, std::uint32_t q, const Limits& limits = {});
// F ↦ F ∩ V is 2:1 onto OG(n, 2n+1); fibers are the lift pairs, lie in
// opposite components and are swapped by the flip. Also checks the
// intersection-dimension law for lifts.
Report two_to_one(Index n, std::uint32_t q, const Limits& limits = {});
// h = r + 1 for every pair of Lagrangians in dim 2n+1.
Report corank(Index n, std::uint32_t q, const Limits& limits = {});
// Random nondegenerate forms: the decomposition is an isometry onto its block
// form and the Witt index equals the brute-force maximal isotropic dimension.
Report witt(int samples, std::uint64_t seed, Index max_dim, const std::vector<std::uint32_t>& primes);
// The mod-4 tables and the formula identities for 2 <= g <= g_max, 1 <= n <= n_max.
Report tables(std::int64_t g_max, std::int64_t n_max);
// The direct-comparison exception set equals the four listed families.
Report exceptions(std::int64_t g_max, std::int64_t n_max);

// The odd space H^n ⊥ <1> and its extension by <-1>, which is always split.
struct OddEvenPair {
  GramSpace<ModP> odd;
  GramSpace<ModP> even;
  ModP c;
};
OddEvenPair odd_even_pair(Index n, const FieldCtx& ctx);

// Largest dimension of a totally isotropic subspace, by depth-first search
// over isotropic points with plain integer arithmetic. dim <= 6.
Index brute_force_witt_index(const std::vector<std::vector<std::int64_t>>& gram, std::int64_t p);

}  // namespace lagsub::verify
