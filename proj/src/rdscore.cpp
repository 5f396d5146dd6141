#include "z4rds/rdscore.hpp"

#include <algorithm>
#include <sstream>

#include "z4rds/errors.hpp"
#include "z4rds/planegeo.hpp"

namespace z4rds {

namespace {

constexpr unsigned kMaxRdsDegree = 12;
constexpr unsigned kMaxEquivalenceDegree = 6;

std::string elt_text(Z4Elt x) {
  std::ostringstream os;
  os << std::hex << x.a.word << ':' << x.b.word;
  return os.str();
}

std::uint32_t star(const VecFun& h, std::uint32_t x, std::uint32_t y) {
  return h.table[x ^ y] ^ h.table[x] ^ h.table[y] ^ (x & y);
}

// Partial linear map closed under + and the star identity.
class StarSearch {
 public:
  StarSearch(const VecFun& h1, const VecFun& h2, std::uint64_t budget, std::uint64_t& nodes)
      : h1_(h1), h2_(h2), q_(static_cast<std::uint32_t>(h1.table.size())), budget_(budget), nodes_(nodes) {}

  std::optional<BinMat> run() {
    State s{std::vector<std::uint32_t>(q_, kUndef), std::vector<std::uint8_t>(q_, 0), {}};
    if (!put(s, 0, 0) || !close(s, 0)) return std::nullopt;
    if (!dfs(s)) return std::nullopt;
    std::vector<std::uint32_t> cols(h1_.n);
    for (unsigned j = 0; j < h1_.n; ++j) cols[j] = found_[1u << j];
    return BinMat::from_columns(cols);
  }

 private:
  static constexpr std::uint32_t kUndef = ~0u;

  struct State {
    std::vector<std::uint32_t> img;
    std::vector<std::uint8_t> used;
    std::vector<std::uint32_t> defined;
  };

  static bool put(State& s, std::uint32_t x, std::uint32_t y) {
    if (s.img[x] != kUndef) return s.img[x] == y;
    if (s.used[y]) return false;
    s.img[x] = y;
    s.used[y] = 1;
    s.defined.push_back(x);
    return true;
  }

  bool close(State& s, std::size_t from) const {
    for (std::size_t i = from; i < s.defined.size(); ++i) {
      const std::uint32_t x = s.defined[i];
      const std::uint32_t mx = s.img[x];
      for (std::size_t j = 0; j <= i; ++j) {
        const std::uint32_t w = s.defined[j];
        const std::uint32_t mw = s.img[w];
        if (!put(s, x ^ w, mx ^ mw)) return false;
        if (!put(s, star(h1_, x, w), star(h2_, mx, mw))) return false;
      }
    }
    return true;
  }

  bool dfs(const State& s) {
    if (++nodes_ > budget_) {
      throw ResourceError("equivalence search budget of " + std::to_string(budget_) + " nodes exhausted");
    }
    if (s.defined.size() == q_) {
      found_ = s.img;
      return true;
    }
    // The defined set is a subspace, so its least non-member is a unit vector.
    std::uint32_t x = 0;
    while (s.img[x] != kUndef) ++x;
    for (std::uint32_t y = 0; y < q_; ++y) {
      if (s.used[y]) continue;
      State t = s;
      if (put(t, x, y) && close(t, s.defined.size()) && dfs(t)) return true;
    }
    return false;
  }

  const VecFun& h1_;
  const VecFun& h2_;
  std::uint32_t q_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<std::uint32_t> found_;
};

void require_valid(const Rds& d, const char* what) {
  if (!verify_rds(d)) throw DomainError(std::string(what) + " is not a relative difference set");
}

// alpha with U = M and alpha(D1) = D2, for D1, D2 whose representations
// satisfy the star identity under M. V is read off N' = h2'' + h2, which is
// additive, where h2'' represents (M, 0)(D1).
Z4Aut lift_isomorphism(const BinMat& m, const Rds& d1, const VecFun& h2) {
  const Z4Aut plain{m, BinMat::zero(m.n)};
  const VecFun h_img = h_from_rds(apply_aut(plain, d1));
  std::vector<std::uint32_t> cols(m.n);
  for (unsigned j = 0; j < m.n; ++j) {
    const std::uint32_t y = m.column(j);
    cols[j] = h_img.table[y] ^ h2.table[y];
  }
  return Z4Aut{m, BinMat::from_columns(cols)};
}

}  // namespace

Rds Rds::from_elements(unsigned n, std::vector<Z4Elt> elems) {
  const std::uint32_t mask = (1u << n) - 1;
  for (Z4Elt x : elems) {
    if ((x.a.word & ~mask) || (x.b.word & ~mask)) throw DomainError("element " + elt_text(x) + " out of range");
  }
  std::sort(elems.begin(), elems.end());
  if (auto it = std::adjacent_find(elems.begin(), elems.end()); it != elems.end()) {
    throw DomainError("duplicate element " + elt_text(*it));
  }
  return Rds{n, std::move(elems)};
}

bool Rds::contains(Z4Elt x) const { return std::binary_search(elems.begin(), elems.end(), x); }

Rds rds_from_h(const VecFun& h) {
  if (h.table.size() != (std::size_t{1} << h.n)) throw DomainError("rds_from_h: table must have 2^n entries");
  std::vector<Z4Elt> elems;
  elems.reserve(h.table.size());
  for (std::uint32_t d = 0; d < h.table.size(); ++d) elems.push_back(Z4Elt{BitVec{d}, BitVec{h.table[d]}});
  return Rds{h.n, std::move(elems)};  // already sorted by a
}

VecFun h_from_rds(const Rds& d) {
  const std::uint32_t q = 1u << d.n;
  VecFun h = VecFun::zero(d.n);
  std::vector<std::uint8_t> seen(q, 0);
  for (Z4Elt x : d.elems) {
    if (seen[x.a.word]) throw DomainError("not a transversal: coset " + elt_text(Z4Elt{x.a, {}}) + " hit twice");
    seen[x.a.word] = 1;
    h.table[x.a.word] = x.b.word;
  }
  for (std::uint32_t a = 0; a < q; ++a) {
    if (!seen[a]) throw DomainError("not a transversal: coset " + elt_text(Z4Elt{BitVec{a}, {}}) + " missed");
  }
  return h;
}

DifferenceCount count_differences(const Rds& d) {
  if (d.n > kMaxRdsDegree) throw ResourceError("count_differences: n > 12 not supported");
  const unsigned n = d.n;
  std::vector<std::uint32_t> hits(std::size_t{1} << (2 * n), 0);
  DifferenceCount c;
  for (Z4Elt x : d.elems) {
    for (Z4Elt y : d.elems) {
      if (x == y) continue;
      const Z4Elt diff = z4_sub(x, y);
      ++hits[(std::size_t{diff.a.word} << n) | diff.b.word];
      ++c.differences;
    }
  }
  const std::uint32_t q = 1u << n;
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      const std::uint32_t k = hits[(std::size_t{a} << n) | b];
      if (a == 0) {
        c.inside_hits += k;
      } else if (k == 0) {
        ++c.outside_missed;
      } else if (k == 1) {
        ++c.outside_once;
      } else {
        ++c.outside_repeated;
      }
    }
  }
  return c;
}

bool verify_rds(const Rds& d) {
  if (d.elems.size() != (std::size_t{1} << d.n)) return false;
  return count_differences(d).valid();
}

Rds translate(const Rds& d, Z4Elt g) {
  std::vector<Z4Elt> out;
  out.reserve(d.elems.size());
  for (Z4Elt x : d.elems) out.push_back(z4_add(x, g));
  std::sort(out.begin(), out.end());
  return Rds{d.n, std::move(out)};
}

Rds apply_aut(const Z4Aut& phi, const Rds& d) {
  check_aut(phi);
  if (phi.u.n != d.n) throw DomainError("apply_aut: dimension mismatch");
  std::vector<Z4Elt> out;
  out.reserve(d.elems.size());
  for (Z4Elt x : d.elems) out.push_back(aut_apply(phi, x));
  std::sort(out.begin(), out.end());
  return Rds{d.n, std::move(out)};
}

bool verify_witness(const Rds& d1, const Rds& d2, const Equivalence& w) {
  if (w.phi.u.n != d1.n || !mat_invertible(w.phi.u)) return false;
  return apply_aut(w.phi, d1) == translate(d2, w.g);
}

bool star_compatible(const BinMat& m, const VecFun& h1, const VecFun& h2) {
  const std::uint32_t q = static_cast<std::uint32_t>(h1.table.size());
  for (std::uint32_t x = 0; x < q; ++x) {
    const std::uint32_t mx = mat_apply(m, BitVec{x}).word;
    for (std::uint32_t y = 0; y < q; ++y) {
      const std::uint32_t my = mat_apply(m, BitVec{y}).word;
      if (star(h2, mx, my) != mat_apply(m, BitVec{star(h1, x, y)}).word) return false;
    }
  }
  return true;
}

std::optional<BinMat> find_star_isomorphism(const VecFun& h1, const VecFun& h2, std::uint64_t budget,
                                            SearchStats* stats) {
  if (h1.n != h2.n || h1.table.size() != h2.table.size()) throw DomainError("find_star_isomorphism: size mismatch");
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  return StarSearch(h1, h2, budget, st.nodes).run();
}

std::optional<Equivalence> are_equivalent(const Rds& d1, const Rds& d2, std::uint64_t budget, SearchStats* stats) {
  if (d1.n != d2.n) throw DomainError("are_equivalent: dimension mismatch");
  if (d1.n > kMaxEquivalenceDegree) throw ResourceError("are_equivalent: n > 6 not supported");
  require_valid(d1, "first set");
  require_valid(d2, "second set");
  SearchStats local;
  SearchStats& st = stats ? *stats : local;

  // Shift D1 so that it contains 0; then alpha(D1') contains 0, so the
  // translate of D2 it equals is D2 - d for some d in D2.
  const Z4Elt c1{BitVec{0}, BitVec{h_from_rds(d1).table[0]}};
  const Rds d1p = translate(d1, c1);
  const VecFun h1p = h_from_rds(d1p);
  for (Z4Elt d : d2.elems) {
    const Rds d2p = translate(d2, z4_neg(d));
    const VecFun h2p = h_from_rds(d2p);
    if (st.nodes >= budget) throw ResourceError("equivalence search budget exhausted before translate " + elt_text(d));
    auto m = find_star_isomorphism(h1p, h2p, budget, &st);
    if (!m) continue;
    const Z4Aut alpha = lift_isomorphism(*m, d1p, h2p);
    const Equivalence w{alpha, z4_add(z4_neg(d), aut_apply(alpha, c1))};
    if (!verify_witness(d1, d2, w)) throw InternalError("equivalence witness failed re-verification");
    return w;
  }
  return std::nullopt;
}

std::optional<Z4Aut> are_equivalent_semifield(const Rds& d1, const Rds& d2, std::uint64_t budget,
                                              SearchStats* stats) {
  if (d1.n != d2.n) throw DomainError("are_equivalent_semifield: dimension mismatch");
  if (d1.n > kMaxEquivalenceDegree) throw ResourceError("are_equivalent_semifield: n > 6 not supported");
  require_valid(d1, "first set");
  require_valid(d2, "second set");
  if (!d1.contains(Z4Elt{}) || !d2.contains(Z4Elt{})) throw DomainError("both sets must contain 0");
  const VecFun h1 = h_from_rds(d1);
  const VecFun h2 = h_from_rds(d2);
  if (!is_presemifield(h1) || !is_presemifield(h2)) throw DomainError("both sets must define commutative semifields");
  auto m = find_star_isomorphism(h1, h2, budget, stats);
  if (!m) return std::nullopt;
  const Z4Aut beta = lift_isomorphism(*m, d1, h2);
  if (apply_aut(beta, d1) != d2) throw InternalError("semifield equivalence witness failed re-verification");
  return beta;
}

}  // namespace z4rds
