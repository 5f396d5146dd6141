#pragma once

// Shared helpers for the test binaries.

#include <bit>
#include <random>

#include "z4rds/groupz4.hpp"
#include "z4rds/rdscore.hpp"
#include "z4rds/reprs.hpp"

namespace z4rds::testing {

inline VecFun random_h(unsigned n, std::mt19937_64& rng) {
  VecFun h = VecFun::zero(n);
  for (auto& v : h.table) v = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
  return h;
}

inline FeFun random_f(unsigned n, std::mt19937_64& rng) {
  FeFun f = FeFun::zero(n);
  for (auto& v : f.table) v = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
  return f;
}

/// Planarity straight from the definition, with fe_mul and a std::vector<bool>.
inline bool naive_planar(const FieldCtx& ctx, const FeFun& f) {
  for (std::uint32_t a = 1; a < ctx.size(); ++a) {
    std::vector<bool> hit(ctx.size(), false);
    for (std::uint32_t x = 0; x < ctx.size(); ++x) {
      const std::uint32_t v = f.table[x ^ a] ^ f.table[x] ^ fe_mul(ctx, Fe{x}, Fe{a}).word;
      if (hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

/// A planar h: a planar f with random affine terms added, moved to F_2^n.
inline VecFun random_planar_h(const FieldCtx& ctx, const FeFun& planar_f, std::mt19937_64& rng) {
  FeFun f = planar_f;
  const Fe u{static_cast<std::uint32_t>(rng()) & ctx.mask()};
  const Fe v{static_cast<std::uint32_t>(rng()) & ctx.mask()};
  const unsigned i = static_cast<unsigned>(rng() % ctx.n());
  for (std::uint32_t x = 0; x < ctx.size(); ++x) {
    f.table[x] ^= (fe_mul(ctx, u, fe_pow(ctx, Fe{x}, 1u << i)) + v).word;
  }
  return f_to_h(ctx, f);
}

/// Every coordinate a random polynomial of degree <= 2.
inline VecFun random_quadratic_h(unsigned n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> monomials;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) <= 2) monomials.push_back(m);
  }
  VecFun h = VecFun::zero(n);
  for (std::uint32_t m : monomials) {
    const std::uint32_t coeff = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
      if ((x & m) == m) h.table[x] ^= coeff;
    }
  }
  return h;
}

/// Rejection sampling over random_quadratic_h.
inline VecFun random_planar_quadratic_h(unsigned n, std::mt19937_64& rng) {
  for (;;) {
    VecFun h = random_quadratic_h(n, rng);
    if (is_planar_h(h)) return h;
  }
}

inline Z4Aut random_aut(unsigned n, std::mt19937_64& rng) {
  Z4Aut phi{BinMat::zero(n), BinMat::zero(n)};
  do {
    for (auto& r : phi.u.rows) r = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
  } while (!mat_invertible(phi.u));
  for (auto& r : phi.v.rows) r = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
  return phi;
}

inline Z4Elt random_elt(unsigned n, std::mt19937_64& rng) {
  const std::uint32_t m = (1u << n) - 1;
  return Z4Elt{BitVec{static_cast<std::uint32_t>(rng()) & m}, BitVec{static_cast<std::uint32_t>(rng()) & m}};
}

inline Rds rds_of_f(const FieldCtx& ctx, const FeFun& f) { return rds_from_h(f_to_h(ctx, f)); }
inline Rds knuth_rds(unsigned n) {
  const FieldCtx ctx(n);
  return rds_of_f(ctx, construct_knuth(ctx));
}
inline Rds zero_rds(unsigned n) {
  const FieldCtx ctx(n);
  return rds_of_f(ctx, construct_zero(ctx));
}

}  // namespace z4rds::testing
