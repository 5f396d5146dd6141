#include "z4rds/reprs.hpp"

#include <bit>
#include <string>

#include "parallel.hpp"
#include "z4rds/errors.hpp"

namespace z4rds {

namespace {

void check_vec(const VecFun& h) {
  if (h.n > kMaxFieldDegree || h.table.size() != (std::size_t{1} << h.n)) {
    throw DomainError("vector function table must have 2^n entries");
  }
}

void check_fe(const FieldCtx& ctx, const FeFun& f) {
  if (f.n != ctx.n() || f.table.size() != ctx.size()) {
    throw DomainError("field function does not match the field context (n=" + std::to_string(ctx.n()) + ")");
  }
}

class Occupancy {
 public:
  explicit Occupancy(std::size_t size) : bits_((size + 63) / 64) {}

  /// False if v was already present.
  bool insert(std::uint32_t v) {
    std::uint64_t& w = bits_[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (w & bit) return false;
    w |= bit;
    return true;
  }

 private:
  std::vector<std::uint64_t> bits_;
};

// mu_B indexed by coordinate vector: adding coordinate k to v' contributes
// xi_k * (sum of xi_i over v').
std::vector<std::uint32_t> mu_table(const FieldCtx& ctx) {
  std::vector<std::uint32_t> mu(ctx.size(), 0);
  for (std::uint32_t v = 1; v < ctx.size(); ++v) {
    const unsigned k = static_cast<unsigned>(std::bit_width(v) - 1);
    const std::uint32_t rest = v ^ (1u << k);
    mu[v] = mu[rest] ^ fe_mul(ctx, ctx.basis()[k], from_coords(ctx, BitVec{rest})).word;
  }
  return mu;
}

bool is_power_of_two(std::uint32_t e) { return e != 0 && (e & (e - 1)) == 0; }

}  // namespace

void UniPoly::add_term(std::uint32_t e, Fe c) {
  const std::uint32_t q1 = (1u << n) - 1;
  if (e > q1) e = (e - 1) % q1 + 1;
  const Fe sum = terms[e] + c;
  if (sum.word == 0) {
    terms.erase(e);
  } else {
    terms[e] = sum;
  }
}

bool is_permutation(const std::vector<std::uint32_t>& table) {
  Occupancy seen(table.size());
  for (std::uint32_t v : table) {
    if (v >= table.size() || !seen.insert(v)) return false;
  }
  return true;
}

VecFun delta(const VecFun& h, BitVec a) {
  check_vec(h);
  VecFun out{h.n, std::vector<std::uint32_t>(h.table.size())};
  for (std::uint32_t d = 0; d < h.table.size(); ++d) out.table[d] = h.table[d ^ a.word] ^ h.table[d] ^ (d & a.word);
  return out;
}

bool is_planar_h(const VecFun& h, unsigned threads) {
  check_vec(h);
  const std::uint32_t q = static_cast<std::uint32_t>(h.table.size());
  return detail::parallel_all_of(1, q, threads, [&](std::uint64_t ai) {
    const auto a = static_cast<std::uint32_t>(ai);
    Occupancy seen(q);
    for (std::uint32_t d = 0; d < q; ++d) {
      if (!seen.insert(h.table[d ^ a] ^ h.table[d] ^ (d & a))) return false;
    }
    return true;
  });
}

MulTable star_h(const VecFun& h) {
  check_vec(h);
  if (h.n > kMaxTableDegree) throw ResourceError("star_h: n > 10 not supported");
  const std::uint32_t q = 1u << h.n;
  MulTable t{h.n, std::vector<std::uint32_t>(std::size_t{q} * q)};
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t y = 0; y < q; ++y) {
      t.cells[(std::size_t{x} << h.n) | y] = h.table[x ^ y] ^ h.table[x] ^ h.table[y] ^ (x & y);
    }
  }
  return t;
}

std::vector<std::uint32_t> anf_words(const VecFun& h) {
  check_vec(h);
  std::vector<std::uint32_t> t = h.table;
  for (unsigned i = 0; i < h.n; ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t u = 0; u < t.size(); ++u) {
      if (u & bit) t[u] ^= t[u ^ bit];
    }
  }
  return t;
}

VecFun normalize_h(const VecFun& h) {
  std::vector<std::uint32_t> t = anf_words(h);
  for (std::uint32_t u = 0; u < t.size(); ++u) {
    if (std::popcount(u) <= 1) t[u] = 0;
  }
  // The Moebius transform is an involution.
  return VecFun{h.n, anf_words(VecFun{h.n, std::move(t)})};
}

FeFun nabla(const FieldCtx& ctx, const FeFun& f, Fe a) {
  check_fe(ctx, f);
  const auto mul_a = multiplication_table(ctx, a);
  FeFun out{f.n, std::vector<std::uint32_t>(f.table.size())};
  const std::uint32_t fa = f.table[a.word];
  for (std::uint32_t x = 0; x < ctx.size(); ++x) out.table[x] = f.table[x ^ a.word] ^ f.table[x] ^ fa ^ mul_a[x];
  return out;
}

bool is_planar(const FieldCtx& ctx, const FeFun& f, unsigned threads) {
  check_fe(ctx, f);
  const std::uint32_t q = ctx.size();
  return detail::parallel_all_of(1, q, threads, [&](std::uint64_t ai) {
    const auto a = static_cast<std::uint32_t>(ai);
    const auto mul_a = multiplication_table(ctx, Fe{a});
    Occupancy seen(q);
    for (std::uint32_t x = 0; x < q; ++x) {
      if (!seen.insert(f.table[x ^ a] ^ f.table[x] ^ mul_a[x])) return false;
    }
    return true;
  });
}

Fe mu_B(const FieldCtx& ctx, Fe x) {
  const std::uint32_t c = coords(ctx, x).word;
  Fe sum{};
  for (unsigned i = 0; i < ctx.n(); ++i) {
    if (!((c >> i) & 1u)) continue;
    for (unsigned j = i + 1; j < ctx.n(); ++j) {
      if ((c >> j) & 1u) sum = sum + fe_mul(ctx, ctx.basis()[i], ctx.basis()[j]);
    }
  }
  return sum;
}

Fe odot_B(const FieldCtx& ctx, Fe x, Fe y) { return from_coords(ctx, odot(coords(ctx, x), coords(ctx, y))); }

FeFun h_to_f(const FieldCtx& ctx, const VecFun& h) {
  check_vec(h);
  if (h.n != ctx.n()) throw DomainError("h_to_f: table size does not match the field context");
  const auto mu = mu_table(ctx);
  FeFun f = FeFun::zero(ctx.n());
  for (std::uint32_t v = 0; v < ctx.size(); ++v) {
    const Fe hb = from_coords(ctx, BitVec{h.table[v]});
    f.table[from_coords(ctx, BitVec{v}).word] = fe_sqr(ctx, hb).word ^ mu[v];
  }
  return f;
}

VecFun f_to_h(const FieldCtx& ctx, const FeFun& f) {
  check_fe(ctx, f);
  const auto mu = mu_table(ctx);
  VecFun h = VecFun::zero(ctx.n());
  for (std::uint32_t v = 0; v < ctx.size(); ++v) {
    const Fe x = from_coords(ctx, BitVec{v});
    h.table[v] = coords(ctx, fe_sqrt(ctx, Fe{f.table[x.word] ^ mu[v]})).word;
  }
  return h;
}

UniPoly interpolate(const FieldCtx& ctx, const FeFun& f) {
  check_fe(ctx, f);
  if (ctx.n() > 14) throw ResourceError("interpolate: n > 14 not supported");
  const std::uint32_t q = ctx.size();
  const std::uint32_t q1 = q - 1;
  UniPoly p{ctx.n(), {}};
  p.add_term(0, Fe{f.table[0]});
  Fe total{};
  for (std::uint32_t x = 0; x < q; ++x) total = total + Fe{f.table[x]};
  p.add_term(q1, total);
  // c_k = sum_{x != 0} f(x) x^{-k}, 1 <= k <= q-2, accumulated in log space.
  const LogTables lt = make_log_tables(ctx);
  std::vector<std::uint32_t> c(q1, 0);
  for (std::uint32_t x = 1; x < q; ++x) {
    if (f.table[x] == 0) continue;
    const std::uint32_t t = lt.log[x];
    std::uint32_t idx = lt.log[f.table[x]];
    for (std::uint32_t k = 1; k < q1; ++k) {
      idx = idx >= t ? idx - t : idx + q1 - t;
      c[k] ^= lt.exp[idx];
    }
  }
  for (std::uint32_t k = 1; k < q1; ++k) p.add_term(k, Fe{c[k]});
  return p;
}

FeFun evaluate(const FieldCtx& ctx, const UniPoly& p) {
  if (p.n != ctx.n()) throw DomainError("evaluate: polynomial does not match the field context");
  const std::uint32_t q = ctx.size();
  const std::uint32_t q1 = q - 1;
  const LogTables lt = make_log_tables(ctx);
  FeFun f = FeFun::zero(ctx.n());
  if (auto it = p.terms.find(0); it != p.terms.end()) f.table[0] = it->second.word;
  for (std::uint32_t x = 1; x < q; ++x) {
    const std::uint64_t t = lt.log[x];
    std::uint32_t sum = 0;
    for (const auto& [e, c] : p.terms) {
      if (c.word == 0) continue;
      sum ^= lt.exp[(lt.log[c.word] + t * e) % q1];
    }
    f.table[x] = sum;
  }
  return f;
}

UniPoly normalize_f(const UniPoly& p) {
  UniPoly out{p.n, {}};
  for (const auto& [e, c] : p.terms) {
    if (e != 0 && !is_power_of_two(e)) out.terms.emplace(e, c);
  }
  return out;
}

FeFun construct_zero(const FieldCtx& ctx) { return FeFun::zero(ctx.n()); }

FeFun construct_knuth(const FieldCtx& ctx) {
  if (ctx.n() % 2 == 0) throw DomainError("Knuth construction needs odd n");
  FeFun f = FeFun::zero(ctx.n());
  for (std::uint32_t x = 0; x < ctx.size(); ++x) f.table[x] = fe_trace(ctx, Fe{x}) ? fe_sqr(ctx, Fe{x}).word : 0u;
  return f;
}

FeFun construct_kantor(const FieldCtx& ctx, const std::vector<unsigned>& chain, const std::vector<Fe>& zetas) {
  if (chain.size() < 2 || chain.front() != ctx.n()) {
    throw DomainError("Kantor chain must start with n and contain at least one subfield");
  }
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (chain[i] == 0 || chain[i] >= chain[i - 1] || chain[i - 1] % chain[i] != 0) {
      throw DomainError("Kantor chain: " + std::to_string(chain[i]) + " must be a proper divisor of " +
                        std::to_string(chain[i - 1]));
    }
  }
  if ((ctx.n() / chain.back()) % 2 == 0) throw DomainError("Kantor chain: [F : F_last] must be odd");
  if (zetas.size() != chain.size() - 1) throw DomainError("Kantor chain: need one zeta per subfield");
  for (Fe z : zetas) {
    if (z.word == 0 || (z.word >> ctx.n()) != 0) throw DomainError("Kantor chain: zetas must be nonzero field elements");
  }
  FeFun f = FeFun::zero(ctx.n());
  for (std::uint32_t x = 0; x < ctx.size(); ++x) {
    Fe s{};
    for (std::size_t i = 0; i < zetas.size(); ++i) s = s + fe_rel_trace(ctx, chain[i + 1], fe_mul(ctx, zetas[i], Fe{x}));
    f.table[x] = fe_sqr(ctx, fe_mul(ctx, Fe{x}, s)).word;
  }
  return f;
}

}  // namespace z4rds
