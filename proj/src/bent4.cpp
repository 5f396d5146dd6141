#include "z4rds/bent4.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "parallel.hpp"
#include "z4rds/errors.hpp"

namespace z4rds {

namespace {

// Positions whose bit i is clear, i < 6.
constexpr std::uint64_t kLow[6] = {0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
                                   0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};

std::size_t word_count(unsigned m) { return m <= 6 ? 1 : std::size_t{1} << (m - 6); }

std::uint64_t valid_bits(unsigned m) { return m >= 6 ? ~0ull : (std::uint64_t{1} << (1u << m)) - 1; }

void check_arity(unsigned m) {
  if (m > kMaxBoolArity) throw ResourceError("Boolean functions on more than 24 variables are not supported");
}

}  // namespace

BoolFun BoolFun::zero(unsigned m) {
  check_arity(m);
  return BoolFun{m, std::vector<std::uint64_t>(word_count(m), 0)};
}

BoolFun BoolFun::linear(unsigned m, std::uint32_t c) {
  BoolFun f = zero(m);
  std::uint64_t pattern = 0;
  for (unsigned i = 0; i < std::min(m, 6u); ++i) {
    if ((c >> i) & 1u) pattern ^= ~kLow[i];
  }
  pattern &= valid_bits(m);
  const std::uint32_t high = m > 6 ? (c >> 6) & ((1u << (m - 6)) - 1) : 0;
  for (std::size_t j = 0; j < f.words.size(); ++j) {
    f.words[j] = std::popcount(static_cast<std::uint32_t>(j) & high) % 2 ? ~pattern : pattern;
  }
  return f;
}

void BoolFun::set(std::uint32_t x, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if (v) {
    words[x >> 6] |= bit;
  } else {
    words[x >> 6] &= ~bit;
  }
}

std::uint64_t BoolFun::weight() const {
  std::uint64_t c = 0;
  for (std::uint64_t w : words) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

BoolFun& BoolFun::operator^=(const BoolFun& o) {
  if (o.m != m) throw DomainError("Boolean functions of different arity");
  for (std::size_t j = 0; j < words.size(); ++j) words[j] ^= o.words[j];
  return *this;
}

BoolFun shift(const BoolFun& f, std::uint32_t a) {
  BoolFun out = f;
  for (unsigned i = 0; i < std::min(f.m, 6u); ++i) {
    if (!((a >> i) & 1u)) continue;
    const unsigned s = 1u << i;
    for (auto& w : out.words) w = ((w & kLow[i]) << s) | ((w >> s) & kLow[i]);
  }
  const std::uint32_t high = f.m > 6 ? a >> 6 : 0;
  if (high != 0) {
    std::vector<std::uint64_t> moved(out.words.size());
    for (std::size_t j = 0; j < moved.size(); ++j) moved[j] = out.words[j ^ high];
    out.words = std::move(moved);
  }
  return out;
}

unsigned Anf::degree() const {
  unsigned d = 0;
  for (std::uint32_t u : monomials) d = std::max(d, static_cast<unsigned>(std::popcount(u)));
  return d;
}

namespace {

// The binary Moebius transform, an involution on truth tables.
void moebius(BoolFun& f) {
  for (unsigned i = 0; i < std::min(f.m, 6u); ++i) {
    const unsigned s = 1u << i;
    for (auto& w : f.words) w ^= (w & kLow[i]) << s;
  }
  for (unsigned i = 6; i < f.m; ++i) {
    const std::size_t bit = std::size_t{1} << (i - 6);
    for (std::size_t j = 0; j < f.words.size(); ++j) {
      if (j & bit) f.words[j] ^= f.words[j ^ bit];
    }
  }
}

}  // namespace

Anf anf_of(const BoolFun& f) {
  BoolFun t = f;
  moebius(t);
  Anf a{f.m, {}};
  for (std::size_t j = 0; j < t.words.size(); ++j) {
    for (std::uint64_t w = t.words[j]; w != 0; w &= w - 1) {
      a.monomials.push_back(static_cast<std::uint32_t>(j * 64 + std::countr_zero(w)));
    }
  }
  return a;
}

BoolFun anf_eval(const Anf& a) {
  BoolFun t = BoolFun::zero(a.m);
  for (std::uint32_t u : a.monomials) {
    if (u >> a.m) throw DomainError("monomial " + std::to_string(u) + " uses a variable beyond the arity");
    t.set(u, !t(u));
  }
  moebius(t);
  return t;
}

unsigned algebraic_degree(const BoolFun& f) { return anf_of(f).degree(); }

bool is_balanced(const BoolFun& f) { return f.m > 0 && f.weight() == (std::uint64_t{1} << (f.m - 1)); }

bool is_shifted_bent(const BoolFun& f, std::uint32_t lambda) {
  const std::uint32_t size = 1u << f.m;
  if (f.m < 32 && (lambda >> f.m) != 0) throw DomainError("shift index set exceeds the arity");
  for (std::uint32_t a = 1; a < size; ++a) {
    BoolFun d = shift(f, a);
    d ^= f;
    d ^= BoolFun::linear(f.m, a & lambda);
    if (!is_balanced(d)) return false;
  }
  return true;
}

BoolFun mm_construct(const VecFun& pi, const BoolFun& g) {
  const unsigned n = pi.n;
  if (g.m != n) throw DomainError("mm_construct: g must have as many variables as Pi");
  if (pi.table.size() != (std::size_t{1} << n)) throw DomainError("mm_construct: Pi table must have 2^n entries");
  BoolFun f = BoolFun::zero(2 * n);
  for (std::uint32_t y = 0; y < (1u << n); ++y) {
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
      f.set(x | (y << n), (std::popcount(x & pi.table[y]) & 1) ^ g(y));
    }
  }
  return f;
}

BoolFun component(const MultiFun& f, std::uint32_t lambda) {
  BoolFun c = BoolFun::zero(f.m);
  for (std::uint32_t x = 0; x < f.table.size(); ++x) c.set(x, std::popcount(f.table[x] & lambda) & 1);
  return c;
}

BoolFun component(const VecFun& h, std::uint32_t lambda) {
  return component(MultiFun{h.n, h.n, h.table}, lambda);
}

MultiFun mm_vectorial(const FieldCtx& ctx, const FeFun& pi, const FeFun& g) {
  const unsigned n = ctx.n();
  if (pi.n != n || g.n != n) throw DomainError("mm_vectorial: functions must match the field context");
  check_arity(2 * n);
  MultiFun f{2 * n, n, std::vector<std::uint32_t>(std::size_t{1} << (2 * n))};
  for (std::uint32_t y = 0; y < ctx.size(); ++y) {
    const auto row = multiplication_table(ctx, Fe{pi.table[y]});
    for (std::uint32_t x = 0; x < ctx.size(); ++x) f.table[x | (y << n)] = row[x] ^ g.table[y];
  }
  return f;
}

ShiftedBent direct_sum(const ShiftedBent& a, const ShiftedBent& b) {
  if (!is_shifted_bent(a.f, a.lambda)) throw DomainError("direct_sum: first function is not shifted-bent");
  if (!is_shifted_bent(b.f, b.lambda)) throw DomainError("direct_sum: second function is not shifted-bent");
  const unsigned m1 = a.f.m;
  ShiftedBent s{BoolFun::zero(m1 + b.f.m), a.lambda | (b.lambda << m1)};
  for (std::uint32_t y = 0; y < (1u << b.f.m); ++y) {
    for (std::uint32_t x = 0; x < (1u << m1); ++x) s.f.set(x | (y << m1), a.f(x) ^ b.f(y));
  }
  if (!is_shifted_bent(s.f, s.lambda)) throw InternalError("direct sum of shifted-bent functions is not shifted-bent");
  return s;
}

bool components_criterion(const VecFun& h, unsigned threads) {
  if (h.table.size() != (std::size_t{1} << h.n)) throw DomainError("components_criterion: table must have 2^n entries");
  return detail::parallel_all_of(1, std::uint64_t{1} << h.n, threads, [&](std::uint64_t lambda) {
    const auto l = static_cast<std::uint32_t>(lambda);
    return is_shifted_bent(component(h, l), l);
  });
}

ShiftedBentCensus shifted_bent_census(unsigned n, unsigned threads) {
  if (n > 4) throw ResourceError("shifted_bent_census: n > 4 not supported");
  const std::uint32_t q = 1u << n;
  const std::uint64_t total = std::uint64_t{1} << q;
  struct Slot {
    std::vector<std::uint64_t> bent, nonquad;
  };
  std::vector<Slot> slots(std::max(threads, 1u), Slot{std::vector<std::uint64_t>(q, 0), std::vector<std::uint64_t>(q, 0)});
  detail::parallel_blocks(total, threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned slot) {
    Slot& s = slots[slot];
    for (std::uint64_t t = lo; t < hi; ++t) {
      const BoolFun f{n, {t}};
      const bool nonquad = algebraic_degree(f) > 2;
      for (std::uint32_t lambda = 0; lambda < q; ++lambda) {
        if (is_shifted_bent(f, lambda)) {
          ++s.bent[lambda];
          s.nonquad[lambda] += nonquad;
        }
      }
    }
  });
  ShiftedBentCensus c{n, std::vector<std::uint64_t>(q, 0), std::vector<std::uint64_t>(q, 0)};
  for (const Slot& s : slots) {
    for (std::uint32_t l = 0; l < q; ++l) {
      c.shifted_bent[l] += s.bent[l];
      c.non_quadratic[l] += s.nonquad[l];
    }
  }
  return c;
}

}  // namespace z4rds
