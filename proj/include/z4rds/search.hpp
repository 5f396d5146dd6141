#pragma once

// Searches for the two open problems: a planar function that is not
// Dembowski-Ostrom, and a system f_0..f_{m-1} on F_2^n whose sums over every
// nonempty Omega are shifted-bent with respect to Omega, one f_i being of
// degree > 2.
//
// For n <= 4 the search is exhaustive modulo affine terms, which affect
// neither property. Larger n use seeded random sampling.

#include <cstdint>
#include <string>
#include <vector>

#include "z4rds/bent4.hpp"

namespace z4rds {

inline constexpr unsigned kMaxExhaustiveSearch = 4;

struct SearchReport {
  std::string kind;
  unsigned n = 0;
  unsigned m = 0;
  bool exhaustive = false;
  bool complete = false;  // the whole space was covered
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;  // planar h, or valid systems, modulo affine terms
  std::uint64_t witnesses = 0;
  std::vector<MultiFun> findings;  // the first few witnesses, re-verified
};

inline constexpr std::size_t kMaxFindings = 16;

/// Planar h whose f_B is not Dembowski-Ostrom.
SearchReport search_nondo_planar(unsigned n, std::uint64_t budget, std::uint64_t seed);

/// Systems for the shifted-bent problem with 1 <= m <= n.
SearchReport search_shifted_bent_system(unsigned n, unsigned m, std::uint64_t budget, std::uint64_t seed);

}  // namespace z4rds
