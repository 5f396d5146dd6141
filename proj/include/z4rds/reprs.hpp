#pragma once

// The two representations of a transversal of N in Z_4^n:
//   h : F_2^n -> F_2^n         with D = { <d, h(d)> }
//   f : F_{2^n} -> F_{2^n}     with f(x) = h_B(x)^2 + mu_B(x)
// where h_B is h read through the basis B of the field context.

#include <cstdint>
#include <map>
#include <vector>

#include "z4rds/gf2n.hpp"

namespace z4rds {

/// Truth table of a map F_2^n -> F_2^n.
struct VecFun {
  unsigned n = 0;
  std::vector<std::uint32_t> table;

  static VecFun zero(unsigned n) { return VecFun{n, std::vector<std::uint32_t>(std::size_t{1} << n, 0)}; }
  BitVec operator()(BitVec x) const { return BitVec{table[x.word]}; }
  friend bool operator==(const VecFun&, const VecFun&) = default;
};

/// Truth table of a map F_{2^n} -> F_{2^n}.
struct FeFun {
  unsigned n = 0;
  std::vector<std::uint32_t> table;

  static FeFun zero(unsigned n) { return FeFun{n, std::vector<std::uint32_t>(std::size_t{1} << n, 0)}; }
  Fe operator()(Fe x) const { return Fe{table[x.word]}; }
  friend bool operator==(const FeFun&, const FeFun&) = default;
};

/// Sparse polynomial of degree < 2^n. Exponent 0 and exponent 2^n - 1 are
/// distinct (they differ at x = 0). No zero coefficients are stored.
struct UniPoly {
  unsigned n = 0;
  std::map<std::uint32_t, Fe> terms;

  /// Adds c x^e; e >= 2^n is folded to the equivalent exponent in [1, 2^n - 1].
  void add_term(std::uint32_t e, Fe c);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;
};

/// Table of a binary operation on F_2^n, cells[(x << n) | y] = x * y.
struct MulTable {
  unsigned n = 0;
  std::vector<std::uint32_t> cells;

  BitVec at(BitVec x, BitVec y) const { return BitVec{cells[(std::size_t{x.word} << n) | y.word]}; }
  friend bool operator==(const MulTable&, const MulTable&) = default;
};

/// Largest n for which 2^n x 2^n tables are built.
inline constexpr unsigned kMaxTableDegree = 10;

/// True iff the table is a permutation of [0, table.size()).
bool is_permutation(const std::vector<std::uint32_t>& table);

// ---------------------------------------------------------------- F_2^n side

/// Delta_{h,a}(d) = h(d+a) + h(d) + d.a
VecFun delta(const VecFun& h, BitVec a);

/// Every Delta_{h,a}, a != 0, is bijective.
bool is_planar_h(const VecFun& h, unsigned threads = 1);

/// x *_h y = h(x+y) + h(x) + h(y) + x.y
MulTable star_h(const VecFun& h);

/// Strip the degree <= 1 part of every coordinate's algebraic normal form.
VecFun normalize_h(const VecFun& h);

/// Each coordinate of h in algebraic normal form, word-parallel: bit k of
/// result[u] is the coefficient of the monomial prod_{i in u} x_i in h_k.
std::vector<std::uint32_t> anf_words(const VecFun& h);

// ---------------------------------------------------------- F_{2^n} side

/// nabla_{f,a}(x) = f(x+a) + f(x) + f(a) + xa
FeFun nabla(const FieldCtx& ctx, const FeFun& f, Fe a);

/// x -> f(x+a) + f(x) + xa is a permutation for every a != 0.
bool is_planar(const FieldCtx& ctx, const FeFun& f, unsigned threads = 1);

/// mu_B(x) = sum_{i<j} x_i x_j xi_i xi_j
Fe mu_B(const FieldCtx& ctx, Fe x);
/// x (.)_B y = sum_i x_i y_i xi_i
Fe odot_B(const FieldCtx& ctx, Fe x, Fe y);

FeFun h_to_f(const FieldCtx& ctx, const VecFun& h);
VecFun f_to_h(const FieldCtx& ctx, const FeFun& f);

/// Unique polynomial of degree < 2^n; n <= 14.
UniPoly interpolate(const FieldCtx& ctx, const FeFun& f);
FeFun evaluate(const FieldCtx& ctx, const UniPoly& p);

/// Drop the monomials with exponent 0 or a power of two.
UniPoly normalize_f(const UniPoly& p);

// ------------------------------------------------------------ constructions

FeFun construct_zero(const FieldCtx& ctx);
/// (x Tr(x))^2; n odd.
FeFun construct_knuth(const FieldCtx& ctx);
/// (x sum_i Tr_{m_i}(zeta_i x))^2 for chain = {n, m_1, ..., m_k} with each
/// m_{i+1} | m_i, n / m_k odd, and k nonzero zetas.
FeFun construct_kantor(const FieldCtx& ctx, const std::vector<unsigned>& chain, const std::vector<Fe>& zetas);

}  // namespace z4rds
