#include "z4rds/groupz4.hpp"

#include <bit>

#include "z4rds/errors.hpp"

namespace z4rds {

namespace {

// Dense n x n matrix over Z_4, row-major.
struct Z4Mat {
  unsigned n;
  std::vector<std::uint8_t> e;

  std::uint8_t& at(unsigned i, unsigned j) { return e[i * n + j]; }
  std::uint8_t at(unsigned i, unsigned j) const { return e[i * n + j]; }
};

Z4Mat lift(const Z4Aut& phi) {
  const unsigned n = phi.u.n;
  Z4Mat l{n, std::vector<std::uint8_t>(n * n)};
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) l.at(i, j) = static_cast<std::uint8_t>(phi.u.get(i, j) + 2 * phi.v.get(i, j));
  }
  return l;
}

Z4Aut split(const Z4Mat& l) {
  Z4Aut phi{BinMat::zero(l.n), BinMat::zero(l.n)};
  for (unsigned i = 0; i < l.n; ++i) {
    for (unsigned j = 0; j < l.n; ++j) {
      phi.u.set(i, j, l.at(i, j) & 1u);
      phi.v.set(i, j, (l.at(i, j) >> 1) & 1u);
    }
  }
  return phi;
}

Z4Mat mul(const Z4Mat& x, const Z4Mat& y) {
  Z4Mat z{x.n, std::vector<std::uint8_t>(x.n * x.n)};
  for (unsigned i = 0; i < x.n; ++i) {
    for (unsigned j = 0; j < x.n; ++j) {
      unsigned s = 0;
      for (unsigned k = 0; k < x.n; ++k) s += x.at(i, k) * y.at(k, j);
      z.at(i, j) = static_cast<std::uint8_t>(s & 3u);
    }
  }
  return z;
}

}  // namespace

BitVec quad_correction(const BinMat& u, BitVec a) {
  std::uint32_t q = 0;
  for (unsigned k = 0; k < u.n; ++k) {
    // C(w, 2) mod 2 is bit 1 of w.
    const auto w = static_cast<unsigned>(std::popcount(u.rows[k] & a.word));
    q |= ((w >> 1) & 1u) << k;
  }
  return BitVec{q};
}

void check_aut(const Z4Aut& phi) {
  if (phi.u.n != phi.v.n || phi.u.rows.size() != phi.u.n || phi.v.rows.size() != phi.v.n) {
    throw DomainError("automorphism: U and V must both be n x n");
  }
  if (!mat_invertible(phi.u)) throw DomainError("automorphism: U is not invertible over F_2");
}

Z4Elt aut_apply(const Z4Aut& phi, Z4Elt x) {
  const BitVec ua = mat_apply(phi.u, x.a);
  return Z4Elt{ua, mat_apply(phi.u, x.b) + mat_apply(phi.v, x.a) + quad_correction(phi.u, x.a)};
}

Z4Aut aut_compose(const Z4Aut& p, const Z4Aut& q) {
  if (p.u.n != q.u.n) throw DomainError("aut_compose: dimension mismatch");
  return split(mul(lift(p), lift(q)));
}

Z4Aut aut_inverse(const Z4Aut& phi) {
  check_aut(phi);
  // Newton step: X0 = lift of U^{-1} has L X0 = I + 2E, so X0 (2I - L X0) inverts L mod 4.
  const unsigned n = phi.u.n;
  const Z4Mat l = lift(phi);
  const Z4Mat x0 = lift(Z4Aut{mat_inverse(phi.u), BinMat::zero(n)});
  Z4Mat corr = mul(l, x0);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      corr.at(i, j) = static_cast<std::uint8_t>(((i == j ? 2u : 0u) + 4u - corr.at(i, j)) & 3u);
    }
  }
  return split(mul(x0, corr));
}

}  // namespace z4rds
