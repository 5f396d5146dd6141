#pragma once

// Boolean functions, shifted-bent (bent_4) functions and the
// Maiorana-McFarland type constructions.
//
// A shift index set Lambda is a bit mask over the variable indices.

#include <cstdint>
#include <vector>

#include "z4rds/gf2n.hpp"
#include "z4rds/reprs.hpp"

namespace z4rds {

inline constexpr unsigned kMaxBoolArity = 24;

/// Bit-packed truth table; bit x of the table is f(x).
struct BoolFun {
  unsigned m = 0;
  std::vector<std::uint64_t> words;

  static BoolFun zero(unsigned m);
  /// x -> parity(x & c)
  static BoolFun linear(unsigned m, std::uint32_t c);
  bool operator()(std::uint32_t x) const { return (words[x >> 6] >> (x & 63)) & 1u; }
  void set(std::uint32_t x, bool v);
  std::uint64_t weight() const;
  BoolFun& operator^=(const BoolFun& o);
  friend BoolFun operator^(BoolFun a, const BoolFun& b) { return a ^= b; }
  friend bool operator==(const BoolFun&, const BoolFun&) = default;
};

/// x -> f(x + a)
BoolFun shift(const BoolFun& f, std::uint32_t a);

/// Algebraic normal form: the monomials prod_{i in u} x_i, as sorted masks u.
struct Anf {
  unsigned m = 0;
  std::vector<std::uint32_t> monomials;

  unsigned degree() const;
  friend bool operator==(const Anf&, const Anf&) = default;
};

Anf anf_of(const BoolFun& f);
BoolFun anf_eval(const Anf& a);
unsigned algebraic_degree(const BoolFun& f);

bool is_balanced(const BoolFun& f);

/// x -> f(x+a) + f(x) + sum_{i in Lambda} x_i a_i is balanced for every a != 0.
bool is_shifted_bent(const BoolFun& f, std::uint32_t lambda);

/// (x, y) -> <x, Pi(y)> + g(y) on 2n variables, x at indices 0..n-1 and y at
/// n..2n-1. g is a Boolean function on n variables.
BoolFun mm_construct(const VecFun& pi, const BoolFun& g);

/// Mask of the y-indices n..2n-1.
constexpr std::uint32_t y_indices(unsigned n) { return ((1u << n) - 1) << n; }

/// Table of a map F_2^m -> F_2^k.
struct MultiFun {
  unsigned m = 0;
  unsigned k = 0;
  std::vector<std::uint32_t> table;
};

/// x -> <lambda, F(x)>
BoolFun component(const MultiFun& f, std::uint32_t lambda);

/// (x, y) -> x Pi(y) + g(y) over the field, input x | (y << n).
MultiFun mm_vectorial(const FieldCtx& ctx, const FeFun& pi, const FeFun& g);

struct ShiftedBent {
  BoolFun f;
  std::uint32_t lambda = 0;
};

/// f1(x) + f2(y) with y after the variables of f1, shifted-bent with respect
/// to Lambda1 and Lambda2 moved by m1. DomainError unless both inputs are
/// shifted-bent.
ShiftedBent direct_sum(const ShiftedBent& a, const ShiftedBent& b);

/// Every nonzero component x -> <lambda, h(x)> is shifted-bent with respect
/// to supp(lambda). Equivalent to the planarity of h.
bool components_criterion(const VecFun& h, unsigned threads = 1);

/// The Boolean function x -> <lambda, h(x)>.
BoolFun component(const VecFun& h, std::uint32_t lambda);

struct ShiftedBentCensus {
  unsigned n = 0;
  std::vector<std::uint64_t> shifted_bent;  // by Lambda
  std::vector<std::uint64_t> non_quadratic;  // by Lambda
};

/// Counts all Boolean functions on n <= 4 variables that are shifted-bent
/// for each Lambda, and those among them of degree > 2.
ShiftedBentCensus shifted_bent_census(unsigned n, unsigned threads = 1);

}  // namespace z4rds
