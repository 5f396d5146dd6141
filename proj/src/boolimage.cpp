#include "z4rds/boolimage.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "parallel.hpp"
#include "z4rds/errors.hpp"

namespace z4rds {

namespace {

void check_fun(const FieldCtx& ctx, const FeFun& f) {
  if (f.n != ctx.n() || f.table.size() != ctx.size()) throw DomainError("function does not match the field context");
}

void check_xi(const FieldCtx& ctx, Fe xi) {
  if (xi.word == 0 || xi.word > ctx.mask()) throw DomainError("xi must be a nonzero field element");
}

}  // namespace

bool af_member(const FieldCtx& ctx, const FeFun& f, Fe a, Fe b) {
  check_fun(ctx, f);
  const auto& t = f.table;
  const std::uint32_t ab = a.word ^ b.word;
  for (std::uint32_t x = 0; x < ctx.size(); ++x) {
    if ((t[x ^ a.word] ^ t[x] ^ t[x ^ ab] ^ t[x ^ b.word]) != 0) return false;
  }
  return true;
}

std::size_t AfSet::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : bits) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

AfSet af_build(const FieldCtx& ctx, const FeFun& f) {
  check_fun(ctx, f);
  const std::size_t cells = std::size_t{1} << (2 * ctx.n());
  AfSet s{ctx.n(), std::vector<std::uint64_t>((cells + 63) / 64, 0)};
  for (std::uint32_t a = 0; a < ctx.size(); ++a) {
    for (std::uint32_t b = 0; b < ctx.size(); ++b) {
      if (af_member(ctx, f, Fe{a}, Fe{b})) {
        const std::size_t i = (std::size_t{a} << ctx.n()) | b;
        s.bits[i >> 6] |= std::uint64_t{1} << (i & 63);
      }
    }
  }
  return s;
}

FePair af_wedge(FePair p, FePair q) {
  if (q.a != p.a + p.b) throw DomainError("af_wedge: second pair must start with a + b");
  return FePair{p.a + p.b, p.b + q.b};
}

FePair af_vee(FePair p, FePair q) {
  if (q.a != p.a) throw DomainError("af_vee: pairs must share the first entry");
  return FePair{p.a, p.b + q.b};
}

bool planar_twoimage_check(const FieldCtx& ctx, const FeFun& f, Fe xi) {
  check_fun(ctx, f);
  check_xi(ctx, xi);
  for (std::uint32_t x = 0; x < ctx.size(); ++x) {
    if (f.table[x] != 0 && f.table[x] != xi.word) {
      throw DomainError("f(" + std::to_string(x) + ") lies outside {0, xi}");
    }
  }
  for (std::uint32_t a = 1; a < ctx.size(); ++a) {
    if (!af_member(ctx, f, Fe{a}, fe_mul(ctx, xi, fe_inv(ctx, Fe{a})))) return false;
  }
  return true;
}

Fe fe_div0(const FieldCtx& ctx, Fe x, Fe y) { return y.word == 0 ? Fe{} : fe_mul(ctx, x, fe_inv(ctx, y)); }

bool SeqSa::has_zero_term() const {
  return std::any_of(terms.begin(), terms.end(), [](Fe t) { return t.word == 0; });
}

SeqSa sequence_sa(const FieldCtx& ctx, Fe a, Fe xi, std::size_t count) {
  check_xi(ctx, xi);
  if (a.word == 0 || a.word > ctx.mask()) throw DomainError("sequence_sa: a must be a nonzero field element");
  const Fe a2 = fe_sqr(ctx, a);
  if (a2 == xi) throw DomainError("sequence_sa: a must differ from sqrt(xi)");

  SeqSa s{xi, a, {}, {}, 0, 0};
  auto step = [&](Fe prev, Fe cur) { return prev + fe_div0(ctx, xi, cur); };
  const Fe a1 = a + fe_div0(ctx, xi, a);
  Fe prev = a;
  Fe cur = a1;
  for (std::size_t i = 0; i < count; ++i) {
    s.terms.push_back(prev);
    const Fe next = step(prev, cur);
    prev = cur;
    cur = next;
  }

  const Fe up = fe_mul(ctx, a2 + xi, fe_inv(ctx, a2));  // (a^2+xi)/a^2 = 1 + xi/a^2
  const Fe down = fe_inv(ctx, up);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t k = i / 2;
    s.closed_form.push_back(i % 2 == 0 ? fe_mul(ctx, a, fe_pow(ctx, down, k)) : fe_mul(ctx, a, fe_pow(ctx, up, k + 1)));
  }

  // The recurrence is determined by consecutive pairs, so the period is the
  // first return of (a_0, a_1).
  prev = a;
  cur = a1;
  const std::uint64_t limit = std::uint64_t{ctx.size()} * ctx.size();
  for (std::uint64_t p = 1; p <= limit; ++p) {
    const Fe next = step(prev, cur);
    prev = cur;
    cur = next;
    if (prev == a && cur == a1) {
      s.period = p;
      break;
    }
  }
  s.predicted_period = 2 * fe_order(ctx, up);
  return s;
}

std::vector<Fe> pn_set(const FieldCtx& ctx) {
  if (ctx.n() == 1) return {Fe{1}};
  const std::uint32_t q1 = ctx.mask();
  const LogTables lt = make_log_tables(ctx);
  std::vector<Fe> out{Fe{1}};
  for (std::uint32_t k = 1; k < q1; ++k) {
    if (std::gcd(k, q1) != 1) continue;
    const Fe alpha{lt.exp[k]};
    out.push_back(fe_inv(ctx, alpha + Fe{1}));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PnSpan pn_span(const FieldCtx& ctx) {
  const unsigned n = ctx.n();
  PnSpan r;
  std::vector<std::uint32_t> pivot(n, 0);  // reduced row with leading bit i
  for (Fe p : pn_set(ctx)) {
    std::uint32_t v = coords(ctx, p).word;
    for (unsigned i = n; i-- > 0;) {
      if (!((v >> i) & 1u)) continue;
      if (pivot[i] == 0) {
        pivot[i] = v;
        r.basis.push_back(p);
        break;
      }
      v ^= pivot[i];
    }
    if (r.basis.size() == n) break;
  }
  r.spans = r.basis.size() == n;
  if (!r.spans) {
    for (std::uint32_t beta = 1; beta < ctx.size(); ++beta) {
      const bool kills = std::all_of(r.basis.begin(), r.basis.end(),
                                     [&](Fe p) { return fe_trace(ctx, fe_mul(ctx, Fe{beta}, p)) == 0; });
      if (kills) {
        r.annihilator = Fe{beta};
        break;
      }
    }
  }
  return r;
}

bool pn_spans(const FieldCtx& ctx) { return pn_span(ctx).spans; }

bool is_additive(const FieldCtx& ctx, const FeFun& f) {
  check_fun(ctx, f);
  const auto& t = f.table;
  if (t[0] != 0) return false;
  for (std::uint32_t x = 1; x < ctx.size(); ++x) {
    for (std::uint32_t y = x + 1; y < ctx.size(); ++y) {
      if (t[x ^ y] != (t[x] ^ t[y])) return false;
    }
  }
  return true;
}

FeFun twoimage_function(const FieldCtx& ctx, Fe xi, std::uint64_t mask) {
  FeFun f = FeFun::zero(ctx.n());
  for (std::uint32_t x = 1; x < ctx.size(); ++x) {
    if ((mask >> (x - 1)) & 1u) f.table[x] = xi.word;
  }
  return f;
}

Thm41Report thm41_bruteforce(const FieldCtx& ctx, Fe xi, unsigned threads) {
  if (ctx.n() > 4) throw ResourceError("thm41_bruteforce: n > 4 not supported");
  check_xi(ctx, xi);
  Thm41Report r;
  r.n = ctx.n();
  r.xi = xi;
  r.candidates = std::uint64_t{1} << (ctx.size() - 1);

  struct Slot {
    std::uint64_t planar = 0, additive = 0, surjective = 0;
    std::vector<std::uint64_t> counterexamples;
  };
  std::vector<Slot> slots(std::max(threads, 1u));
  detail::parallel_blocks(r.candidates, threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned slot) {
    Slot& s = slots[slot];
    for (std::uint64_t m = lo; m < hi; ++m) {
      const FeFun f = twoimage_function(ctx, xi, m);
      const bool planar = is_planar(ctx, f);
      const bool additive = is_additive(ctx, f);
      s.planar += planar;
      s.additive += additive;
      s.surjective += planar && m != 0;
      if (planar != additive) s.counterexamples.push_back(m);
    }
  });
  for (const Slot& s : slots) {
    r.planar += s.planar;
    r.additive += s.additive;
    r.planar_surjective += s.surjective;
    r.counterexamples.insert(r.counterexamples.end(), s.counterexamples.begin(), s.counterexamples.end());
  }
  return r;
}

}  // namespace z4rds
