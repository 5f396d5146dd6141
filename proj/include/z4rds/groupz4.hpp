#pragma once

// Z_4^n in split form: <a,b> stands for a^Psi + 2 b^Psi, where Psi lifts a
// 0/1 vector to an integer vector. Automorphisms are pairs (U, V) of binary
// matrices standing for the Z_4 matrix L = U + 2V.

#include <compare>

#include "z4rds/gf2n.hpp"

namespace z4rds {

struct Z4Elt {
  BitVec a;
  BitVec b;

  friend constexpr bool operator==(Z4Elt, Z4Elt) = default;
  friend constexpr auto operator<=>(Z4Elt, Z4Elt) = default;
};

/// <a,b> + <c,d> = <a+c, b+d+(a.c)>
constexpr Z4Elt z4_add(Z4Elt u, Z4Elt v) { return Z4Elt{u.a + v.a, u.b + v.b + odot(u.a, v.a)}; }

/// -<a,b> = <a, a+b>
constexpr Z4Elt z4_neg(Z4Elt u) { return Z4Elt{u.a, u.a + u.b}; }

constexpr Z4Elt z4_sub(Z4Elt u, Z4Elt v) { return z4_add(u, z4_neg(v)); }

/// Additive order (1, 2 or 4).
constexpr unsigned z4_order(Z4Elt u) {
  if (u.a.word != 0) return 4;
  return u.b.word != 0 ? 2 : 1;
}

/// In the forbidden subgroup N = 2 Z_4^n.
constexpr bool in_forbidden(Z4Elt u) { return u.a.word == 0; }

/// Q(U,a): bit k is sum_{i<j} u_ki u_kj a_i a_j, the carry of row k of U
/// applied to a over the integers.
BitVec quad_correction(const BinMat& u, BitVec a);

struct Z4Aut {
  BinMat u;
  BinMat v;

  static Z4Aut identity(unsigned n) { return Z4Aut{BinMat::identity(n), BinMat::zero(n)}; }
  friend bool operator==(const Z4Aut&, const Z4Aut&) = default;
};

/// Throws DomainError when U is singular or the shapes disagree.
void check_aut(const Z4Aut& phi);

/// <Ua, Ub + Va + Q(U,a)>
Z4Elt aut_apply(const Z4Aut& phi, Z4Elt x);

/// aut_apply(compose(p, q), x) = aut_apply(p, aut_apply(q, x)).
Z4Aut aut_compose(const Z4Aut& p, const Z4Aut& q);
Z4Aut aut_inverse(const Z4Aut& phi);

}  // namespace z4rds
