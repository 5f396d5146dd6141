#include "z4rds/search.hpp"

#include <bit>
#include <functional>
#include <random>

#include "z4rds/errors.hpp"
#include "z4rds/planegeo.hpp"
#include "z4rds/rdscore.hpp"

namespace z4rds {

namespace {

constexpr unsigned kMaxRandomSearch = 10;

// Monomials of degree >= 2 on n variables.
std::vector<std::uint32_t> high_monomials(unsigned n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t u = 0; u < (1u << n); ++u) {
    if (std::popcount(u) >= 2) out.push_back(u);
  }
  return out;
}

BoolFun from_monomial_bits(unsigned n, const std::vector<std::uint32_t>& monomials, std::uint64_t bits) {
  Anf a{n, {}};
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if ((bits >> i) & 1u) a.monomials.push_back(monomials[i]);
  }
  return anf_eval(a);
}

MultiFun assemble(unsigned n, const std::vector<BoolFun>& fs) {
  MultiFun f{n, static_cast<unsigned>(fs.size()), std::vector<std::uint32_t>(std::size_t{1} << n, 0)};
  for (std::uint32_t x = 0; x < f.table.size(); ++x) {
    for (std::size_t i = 0; i < fs.size(); ++i) f.table[x] |= std::uint32_t{fs[i](x)} << i;
  }
  return f;
}

bool system_holds(const MultiFun& f) {
  for (std::uint32_t omega = 1; omega < (1u << f.k); ++omega) {
    if (!is_shifted_bent(component(f, omega), omega)) return false;
  }
  return true;
}

bool any_non_quadratic(const MultiFun& f) {
  for (unsigned i = 0; i < f.k; ++i) {
    if (algebraic_degree(component(f, 1u << i)) > 2) return true;
  }
  return false;
}

VecFun as_vecfun(const MultiFun& f) { return VecFun{f.m, f.table}; }

bool is_do_h(const FieldCtx& ctx, const VecFun& h) { return is_DO(normalize_f(interpolate(ctx, h_to_f(ctx, h)))); }

// Exhaustive backtracking over systems modulo affine terms: f_k is a subset
// of the degree >= 2 monomials, encoded as an index r < 2^{#monomials}, and
// sums of functions are XORs of indices.
class SystemSearch {
 public:
  using Visit = std::function<void(const std::vector<std::uint64_t>&)>;

  SystemSearch(unsigned n, unsigned m, std::uint64_t budget) : m_(m), budget_(budget) {
    monomials_ = high_monomials(n);
    const std::uint64_t reps = std::uint64_t{1} << monomials_.size();
    funs_.reserve(reps);
    for (std::uint64_t r = 0; r < reps; ++r) funs_.push_back(from_monomial_bits(n, monomials_, r));
    ok_.assign(std::size_t{1} << m, std::vector<std::uint8_t>(reps, 0));
    for (std::uint32_t omega = 1; omega < (1u << m); ++omega) {
      for (std::uint64_t r = 0; r < reps; ++r) ok_[omega][r] = is_shifted_bent(funs_[r], omega);
    }
  }

  /// False when the budget ran out.
  bool run(const Visit& visit) {
    chosen_.assign(m_, 0);
    sums_.assign(std::size_t{1} << m_, 0);
    visit_ = &visit;
    return dfs(0);
  }

  std::uint64_t nodes() const { return nodes_; }
  const BoolFun& fun(std::uint64_t r) const { return funs_[r]; }

 private:
  bool dfs(unsigned k) {
    if (k == m_) {
      (*visit_)(chosen_);
      return true;
    }
    const std::uint32_t bit = 1u << k;
    for (std::uint64_t r = 0; r < funs_.size(); ++r) {
      if (!ok_[bit][r]) continue;
      if (nodes_ == budget_) return false;
      ++nodes_;
      bool good = true;
      for (std::uint32_t omega = 1; omega < bit && good; ++omega) {
        sums_[omega | bit] = sums_[omega] ^ r;
        good = ok_[omega | bit][sums_[omega | bit]];
      }
      if (!good) continue;
      sums_[bit] = r;
      chosen_[k] = r;
      if (!dfs(k + 1)) return false;
    }
    return true;
  }

  unsigned m_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> monomials_;
  std::vector<BoolFun> funs_;
  std::vector<std::vector<std::uint8_t>> ok_;
  std::vector<std::uint64_t> chosen_;
  std::vector<std::uint64_t> sums_;
  const Visit* visit_ = nullptr;
};

BoolFun random_high_degree(unsigned n, const std::vector<std::uint32_t>& monomials, std::mt19937_64& rng) {
  Anf a{n, {}};
  for (std::uint32_t u : monomials) {
    if (rng() & 1u) a.monomials.push_back(u);
  }
  return anf_eval(a);
}

void check_nondo_witness(const FieldCtx& ctx, const VecFun& h) {
  const Rds d = rds_from_h(h);
  if (!is_planar_h(h) || !verify_rds(d) || is_do_h(ctx, h) || semifield_report(ctx, d).plane()) {
    throw InternalError("search produced a witness that does not re-verify");
  }
}

void check_system_witness(const MultiFun& f) {
  if (!system_holds(f) || !any_non_quadratic(f)) throw InternalError("search produced a witness that does not re-verify");
}

}  // namespace

SearchReport search_nondo_planar(unsigned n, std::uint64_t budget, std::uint64_t seed) {
  if (n == 0 || n > kMaxRandomSearch) throw ResourceError("search nonDO-planar: n must be between 1 and 10");
  const FieldCtx ctx(n);
  SearchReport r;
  r.kind = "nonDO-planar";
  r.n = n;
  r.m = n;
  auto record = [&](const MultiFun& f) {
    const VecFun h = as_vecfun(f);
    ++r.solutions;
    if (is_do_h(ctx, h)) return;
    check_nondo_witness(ctx, h);
    ++r.witnesses;
    if (r.findings.size() < kMaxFindings) r.findings.push_back(f);
  };

  if (n <= kMaxExhaustiveSearch) {
    r.exhaustive = true;
    SystemSearch s(n, n, budget);
    r.complete = s.run([&](const std::vector<std::uint64_t>& chosen) {
      std::vector<BoolFun> fs;
      for (std::uint64_t c : chosen) fs.push_back(s.fun(c));
      const MultiFun f = assemble(n, fs);
      if (!is_planar_h(as_vecfun(f))) throw InternalError("shifted-bent components without planarity");
      record(f);
    });
    r.nodes = s.nodes();
    return r;
  }

  std::mt19937_64 rng(seed);
  const auto monomials = high_monomials(n);
  for (r.nodes = 0; r.nodes < budget; ++r.nodes) {
    std::vector<BoolFun> fs;
    for (unsigned i = 0; i < n; ++i) fs.push_back(random_high_degree(n, monomials, rng));
    const MultiFun f = assemble(n, fs);
    if (is_planar_h(as_vecfun(f))) record(f);
  }
  return r;
}

SearchReport search_shifted_bent_system(unsigned n, unsigned m, std::uint64_t budget, std::uint64_t seed) {
  if (n == 0 || n > kMaxRandomSearch) throw ResourceError("search shifted-bent-system: n must be between 1 and 10");
  if (m == 0 || m > n) throw DomainError("search shifted-bent-system: need 1 <= m <= n");
  SearchReport r;
  r.kind = "shifted-bent-system";
  r.n = n;
  r.m = m;
  auto record = [&](const MultiFun& f) {
    ++r.solutions;
    if (!any_non_quadratic(f)) return;
    check_system_witness(f);
    ++r.witnesses;
    if (r.findings.size() < kMaxFindings) r.findings.push_back(f);
  };

  if (n <= kMaxExhaustiveSearch) {
    r.exhaustive = true;
    SystemSearch s(n, m, budget);
    r.complete = s.run([&](const std::vector<std::uint64_t>& chosen) {
      std::vector<BoolFun> fs;
      for (std::uint64_t c : chosen) fs.push_back(s.fun(c));
      record(assemble(n, fs));
    });
    r.nodes = s.nodes();
    return r;
  }

  std::mt19937_64 rng(seed);
  const auto monomials = high_monomials(n);
  for (r.nodes = 0; r.nodes < budget; ++r.nodes) {
    std::vector<BoolFun> fs;
    for (unsigned i = 0; i < m; ++i) fs.push_back(random_high_degree(n, monomials, rng));
    const MultiFun f = assemble(n, fs);
    if (system_holds(f)) record(f);
  }
  return r;
}

}  // namespace z4rds
