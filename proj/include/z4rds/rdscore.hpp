#pragma once

// (2^n, 2^n, 2^n, 1) relative difference sets in Z_4^n relative to
// N = 2 Z_4^n, and their equivalence under Aut(Z_4^n) and translation.

#include <cstdint>
#include <optional>
#include <vector>

#include "z4rds/groupz4.hpp"
#include "z4rds/reprs.hpp"

namespace z4rds {

/// A 2^n-subset of Z_4^n, kept sorted by (a, b).
struct Rds {
  unsigned n = 0;
  std::vector<Z4Elt> elems;

  /// Sorts; throws DomainError on duplicates or out-of-range words.
  static Rds from_elements(unsigned n, std::vector<Z4Elt> elems);
  bool contains(Z4Elt x) const;
  friend bool operator==(const Rds&, const Rds&) = default;
};

/// { <d, h(d)> : d in F_2^n }
Rds rds_from_h(const VecFun& h);

/// Inverse of rds_from_h; DomainError names a coset that is hit twice or
/// missed.
VecFun h_from_rds(const Rds& d);

/// Difference statistics over ordered pairs d != d'.
struct DifferenceCount {
  std::uint64_t differences = 0;   // always 2^n (2^n - 1)
  std::uint64_t outside_once = 0;  // elements of G \ N hit exactly once
  std::uint64_t outside_missed = 0;
  std::uint64_t outside_repeated = 0;
  std::uint64_t inside_hits = 0;  // differences landing in N \ {0}
  bool valid() const { return outside_missed == 0 && outside_repeated == 0 && inside_hits == 0; }
};

/// n <= 12.
DifferenceCount count_differences(const Rds& d);
bool verify_rds(const Rds& d);

Rds translate(const Rds& d, Z4Elt g);
Rds apply_aut(const Z4Aut& phi, const Rds& d);

/// alpha(D1) = D2 + g.
struct Equivalence {
  Z4Aut phi;
  Z4Elt g;
};

bool verify_witness(const Rds& d1, const Rds& d2, const Equivalence& w);

struct SearchStats {
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// Linear bijections M with M(x) *_{h2} M(y) = M(x *_{h1} y) for all x, y,
/// by backtracking on basis images with closure under + and *. The search
/// order is fixed, so the result is deterministic. The budget bounds the
/// running total in stats->nodes.
std::optional<BinMat> find_star_isomorphism(const VecFun& h1, const VecFun& h2,
                                            std::uint64_t budget = kDefaultSearchBudget,
                                            SearchStats* stats = nullptr);

/// Checks M(x) *_{h2} M(y) = M(x *_{h1} y) on all pairs.
bool star_compatible(const BinMat& m, const VecFun& h1, const VecFun& h2);

/// Searches alpha, g with alpha(D1) = D2 + g; n <= 6. Both inputs must be
/// valid RDSs. The witness is re-verified before it is returned.
std::optional<Equivalence> are_equivalent(const Rds& d1, const Rds& d2,
                                          std::uint64_t budget = kDefaultSearchBudget,
                                          SearchStats* stats = nullptr);

/// Translation-free variant for RDSs that contain 0 and define commutative
/// semifields: searches beta with beta(D1) = D2.
std::optional<Z4Aut> are_equivalent_semifield(const Rds& d1, const Rds& d2,
                                              std::uint64_t budget = kDefaultSearchBudget,
                                              SearchStats* stats = nullptr);

}  // namespace z4rds
