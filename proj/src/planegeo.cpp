#include "z4rds/planegeo.hpp"

#include <bit>
#include <chrono>
#include <future>
#include <string>

#include "parallel.hpp"
#include "z4rds/errors.hpp"

namespace z4rds {

// ------------------------------------------------------------------- BitRow --

std::size_t BitRow::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitRow::count_and(const BitRow& other) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

std::size_t BitRow::first_common(const BitRow& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (const std::uint64_t w = words_[i] & other.words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
  }
  return npos;
}

std::vector<std::uint32_t> BitRow::indices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) out.push_back(static_cast<std::uint32_t>(i * 64 + std::countr_zero(w)));
  }
  return out;
}

bool BitRow::meets_all(const BitRow& b, const BitRow& c) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & b.words_[i] & c.words_[i]) return true;
  }
  return false;
}

// ---------------------------------------------------------------- Incidence --

Incidence Incidence::from_lines(std::uint32_t num_points, const std::vector<std::vector<std::uint32_t>>& lines) {
  Incidence inc;
  inc.num_points = num_points;
  inc.num_lines = static_cast<std::uint32_t>(lines.size());
  inc.point_lines.assign(num_points, BitRow(lines.size()));
  inc.line_points.assign(lines.size(), BitRow(num_points));
  for (std::uint32_t l = 0; l < lines.size(); ++l) {
    for (std::uint32_t p : lines[l]) {
      if (p >= num_points) throw DomainError("incidence: point index " + std::to_string(p) + " out of range");
      inc.line_points[l].set(p);
      inc.point_lines[p].set(l);
    }
  }
  return inc;
}

std::uint32_t Incidence::join(std::uint32_t p, std::uint32_t r) const {
  const std::size_t l = point_lines[p].first_common(point_lines[r]);
  if (l == BitRow::npos) throw InternalError("no line through points " + std::to_string(p) + " and " + std::to_string(r));
  return static_cast<std::uint32_t>(l);
}

std::uint32_t Incidence::meet(std::uint32_t l, std::uint32_t m) const {
  const std::size_t p = line_points[l].first_common(line_points[m]);
  if (p == BitRow::npos) throw InternalError("lines " + std::to_string(l) + " and " + std::to_string(m) + " do not meet");
  return static_cast<std::uint32_t>(p);
}

Incidence build_incidence(const Rds& d) {
  if (d.n > kMaxPlaneDegree) throw ResourceError("build_plane: n > 6 not supported");
  const unsigned n = d.n;
  const std::uint32_t q = 1u << n;
  const std::uint32_t q2 = q * q;
  std::vector<std::vector<std::uint32_t>> lines;
  lines.reserve(q2 + q + 1);
  for (std::uint32_t g = 0; g < q2; ++g) {
    const Z4Elt shift{BitVec{g >> n}, BitVec{g & (q - 1)}};
    std::vector<std::uint32_t> pts;
    for (Z4Elt x : d.elems) {
      const Z4Elt y = z4_add(x, shift);
      pts.push_back((y.a.word << n) | y.b.word);
    }
    pts.push_back(q2 + shift.a.word);
    lines.push_back(std::move(pts));
  }
  for (std::uint32_t c = 0; c < q; ++c) {
    std::vector<std::uint32_t> pts;
    for (std::uint32_t b = 0; b < q; ++b) pts.push_back((c << n) | b);
    pts.push_back(q2 + q);
    lines.push_back(std::move(pts));
  }
  std::vector<std::uint32_t> infinity;
  for (std::uint32_t c = 0; c <= q; ++c) infinity.push_back(q2 + c);
  lines.push_back(std::move(infinity));
  return Incidence::from_lines(q2 + q + 1, lines);
}

Incidence build_plane(const Rds& d) {
  if (!verify_rds(d)) throw DomainError("build_plane: input is not a relative difference set");
  return build_incidence(d);
}

namespace {

bool pairs_meet_once(const std::vector<BitRow>& rows, unsigned threads) {
  return detail::parallel_all_of(0, rows.size(), threads, [&](std::uint64_t i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[i].count_and(rows[j]) != 1) return false;
    }
    return true;
  });
}

// First quadrangle in lexicographic order, if any.
bool has_quadrangle(const Incidence& p) {
  const auto& pl = p.point_lines;
  const std::uint32_t np = p.num_points;
  for (std::uint32_t a = 0; a < np; ++a) {
    for (std::uint32_t b = a + 1; b < np; ++b) {
      for (std::uint32_t c = b + 1; c < np; ++c) {
        if (pl[a].meets_all(pl[b], pl[c])) continue;
        for (std::uint32_t e = c + 1; e < np; ++e) {
          if (!pl[a].meets_all(pl[b], pl[e]) && !pl[a].meets_all(pl[c], pl[e]) && !pl[b].meets_all(pl[c], pl[e])) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

PlaneCheck check_plane(const Incidence& p, unsigned threads) {
  PlaneCheck c;
  c.sizes = p.num_points == p.num_lines && p.num_lines > 0;
  if (c.sizes) {
    const std::size_t k = p.line_points[0].count();
    for (const auto& row : p.line_points) c.sizes = c.sizes && row.count() == k;
    for (const auto& row : p.point_lines) c.sizes = c.sizes && row.count() == k;
    if (c.sizes && k > 0) c.order = static_cast<std::uint32_t>(k - 1);
  }
  c.points_axiom = pairs_meet_once(p.point_lines, threads);
  c.lines_axiom = pairs_meet_once(p.line_points, threads);
  c.quadrangle = has_quadrangle(p);
  return c;
}

bool verify_plane(const Incidence& p, unsigned threads) { return check_plane(p, threads).ok(); }

// ----------------------------------------------------------- coordinatize --

namespace {

constexpr std::uint32_t kNone = ~0u;

Rds containing_zero(const Rds& d) {
  const std::uint32_t c = h_from_rds(d).table[0];
  return c == 0 ? d : translate(d, Z4Elt{BitVec{0}, BitVec{c}});
}

VecFun minus_constant(const VecFun& h) {
  VecFun out = h;
  for (auto& v : out.table) v ^= h.table[0];
  return out;
}

BitVec resolve_unit(unsigned n, std::optional<BitVec> unit) {
  const BitVec u = unit.value_or(default_unit(n));
  if (u.word == 0 || (u.word >> n) != 0) throw DomainError("unit vector must be a nonzero element of F_2^n");
  return u;
}

void expect(bool cond, const std::string& what) {
  if (!cond) throw InternalError("coordinatization: " + what);
}

}  // namespace

Ptr coordinatize(const Rds& d_in, std::optional<BitVec> unit) {
  if (!verify_rds(d_in)) throw DomainError("coordinatize: input is not a relative difference set");
  const Rds d = containing_zero(d_in);
  const unsigned n = d.n;
  const std::uint32_t q = 1u << n;
  const std::uint32_t q2 = q * q;
  const BitVec u = resolve_unit(n, unit);
  const VecFun h = h_from_rds(d);
  const Incidence p = build_incidence(d);

  // (i) the triangle L_x = D, L_y = N, L_inf.
  const std::uint32_t lx = 0;
  const std::uint32_t ly = q2;
  const std::uint32_t linf = q2 + q;
  const std::uint32_t origin = p.meet(lx, ly);
  const std::uint32_t p_inf = p.meet(ly, linf);
  const std::uint32_t p_zero = p.meet(lx, linf);
  expect(origin == 0, "D and N must meet in 0");

  // (ii) <x, h(x)> on L_x is (x, 0).
  std::vector<std::uint32_t> on_lx(q, kNone);
  for (std::uint32_t pt : p.line_points[lx].indices()) {
    if (pt != p_zero) on_lx[pt >> n] = pt;
  }
  for (std::uint32_t x = 0; x < q; ++x) expect(on_lx[x] != kNone, "L_x misses a coset");

  // (iii) J = (1), the ideal point of the class of D + <u, k>.
  const std::uint32_t j = p.meet(linf, u.word << n);

  // (iv) JX meets L_y in (0, x).
  std::vector<std::uint32_t> y_label(p.num_points, kNone);
  std::vector<std::uint32_t> on_ly(q, kNone);
  for (std::uint32_t x = 0; x < q; ++x) {
    const std::uint32_t pt = p.meet(p.join(j, on_lx[x]), ly);
    expect(y_label[pt] == kNone, "two points of L_x project to the same point of L_y");
    y_label[pt] = x;
    on_ly[x] = pt;
  }

  // (v) a line through (1, 0) meeting L_y in (0, m) meets L_inf in (m).
  const std::uint32_t one_zero = on_lx[u.word];
  const std::uint32_t vertical = p.join(one_zero, p_inf);
  std::vector<std::uint32_t> slope(q, kNone);
  for (std::uint32_t l : p.point_lines[one_zero].indices()) {
    if (l == vertical) continue;
    const std::uint32_t m = y_label[p.meet(l, ly)];
    expect(m != kNone && slope[m] == kNone, "slope labels are not a bijection");
    slope[m] = p.meet(l, linf);
  }

  // (vi) E = (x, y) with YE meeting L_x in (x, 0) and XE meeting L_y in (0, y).
  std::vector<std::uint32_t> coord(q2, kNone);
  std::vector<std::uint8_t> taken(q2, 0);
  for (std::uint32_t e = 0; e < q2; ++e) {
    const std::uint32_t x = p.meet(p.join(e, p_inf), lx) >> n;
    const std::uint32_t y = y_label[p.meet(p.join(e, p_zero), ly)];
    expect(y != kNone, "affine point without a y label");
    const std::uint32_t c = (x << n) | y;
    expect(!taken[c], "two affine points share a coordinate pair");
    taken[c] = 1;
    coord[e] = c;
  }
  for (std::uint32_t x = 0; x < q; ++x) {
    expect(coord[on_lx[x]] == (x << n), "labels on L_x are inconsistent");
    expect(coord[on_ly[x]] == x, "labels on L_y are inconsistent");
  }

  // m . x is the y-coordinate of the point with abscissa x on the line
  // through (0, 0) and (m).
  Ptr ptr{MulTable{n, std::vector<std::uint32_t>(std::size_t{q} * q)}, std::vector<std::uint32_t>(q, kNone), u};
  for (std::uint32_t m = 0; m < q; ++m) {
    const std::uint32_t line = p.join(origin, slope[m]);
    for (std::uint32_t x = 0; x < q; ++x) {
      const std::uint32_t e = p.meet(line, p.join(on_lx[x], p_inf));
      expect((coord[e] >> n) == x, "abscissa mismatch");
      ptr.mult.cells[(std::size_t{m} << n) | x] = coord[e] & (q - 1);
    }
  }

  // Cross-check against tau(m *_h x).
  const MulTable star = star_h(h);
  for (std::uint32_t x = 0; x < q; ++x) {
    const std::uint32_t ux = star.at(u, BitVec{x}).word;
    expect(ptr.tau[ux] == kNone, "x -> 1 * x is not bijective");
    ptr.tau[ux] = x;
  }
  for (std::uint32_t m = 0; m < q; ++m) {
    for (std::uint32_t x = 0; x < q; ++x) {
      expect(ptr.mult.cells[(std::size_t{m} << n) | x] == ptr.tau[star.at(BitVec{m}, BitVec{x}).word],
             "geometric product differs from tau(m * x)");
    }
  }
  return ptr;
}

std::optional<Ptr> ptr_from_h(const VecFun& h_in, BitVec unit) {
  const VecFun h = minus_constant(h_in);
  const unsigned n = h.n;
  const std::uint32_t q = 1u << n;
  const BitVec u = resolve_unit(n, unit);
  const MulTable star = star_h(h);
  Ptr ptr{MulTable{n, std::vector<std::uint32_t>(std::size_t{q} * q)}, std::vector<std::uint32_t>(q, kNone), u};
  for (std::uint32_t x = 0; x < q; ++x) {
    const std::uint32_t ux = star.at(u, BitVec{x}).word;
    if (ptr.tau[ux] != kNone) return std::nullopt;
    ptr.tau[ux] = x;
  }
  for (std::size_t i = 0; i < ptr.mult.cells.size(); ++i) ptr.mult.cells[i] = ptr.tau[star.cells[i]];
  return ptr;
}

// ------------------------------------------------------- semifield criteria --

namespace {

bool table_commutative(const MulTable& t) {
  const std::uint32_t q = 1u << t.n;
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t y = x + 1; y < q; ++y) {
      if (t.at(BitVec{x}, BitVec{y}) != t.at(BitVec{y}, BitVec{x})) return false;
    }
  }
  return true;
}

bool table_distributive(const MulTable& t) {
  const std::uint32_t q = 1u << t.n;
  for (std::uint32_t z = 0; z < q; ++z) {
    for (std::uint32_t x = 0; x < q; ++x) {
      for (std::uint32_t y = x + 1; y < q; ++y) {
        const BitVec xy{x ^ y};
        if (t.at(xy, BitVec{z}) != t.at(BitVec{x}, BitVec{z}) + t.at(BitVec{y}, BitVec{z})) return false;
        if (t.at(BitVec{z}, xy) != t.at(BitVec{z}, BitVec{x}) + t.at(BitVec{z}, BitVec{y})) return false;
      }
    }
  }
  return true;
}

bool table_no_zero_divisors(const MulTable& t) {
  const std::uint32_t q = 1u << t.n;
  for (std::uint32_t x = 1; x < q; ++x) {
    for (std::uint32_t y = 1; y < q; ++y) {
      if (t.at(BitVec{x}, BitVec{y}).word == 0) return false;
    }
  }
  return true;
}

bool commutative_presemifield(const MulTable& t) {
  return table_commutative(t) && table_distributive(t) && table_no_zero_divisors(t);
}

template <typename F>
Criterion timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  Criterion c;
  c.holds = f();
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

template <typename F>
std::future<Criterion> launch(unsigned threads, F f) {
  return std::async(threads > 1 ? std::launch::async : std::launch::deferred, [f] { return timed(f); });
}

}  // namespace

bool is_presemifield(const VecFun& h) {
  const std::uint32_t q = static_cast<std::uint32_t>(h.table.size());
  const auto& t = h.table;
  // Symmetric in x, y, z.
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t y = x; y < q; ++y) {
      const std::uint32_t base = t[x ^ y] ^ t[x] ^ t[y];
      for (std::uint32_t z = y; z < q; ++z) {
        if ((t[x ^ y ^ z] ^ t[x ^ z] ^ t[y ^ z] ^ t[z] ^ base) != 0) return false;
      }
    }
  }
  return true;
}

bool components_quadratic(const VecFun& h) {
  const auto anf = anf_words(h);
  for (std::uint32_t m = 0; m < anf.size(); ++m) {
    if (std::popcount(m) > 2 && anf[m] != 0) return false;
  }
  return true;
}

bool is_DO(const UniPoly& p) {
  bool all = true;
  for (const auto& [e, c] : p.terms) {
    if (e == 0 || std::has_single_bit(e)) {
      throw DomainError("is_DO: exponent " + std::to_string(e) + " is affine; apply normalize_f first");
    }
    all = all && std::popcount(e) == 2;
  }
  return all;
}

bool SemifieldReport::unanimous() const {
  const bool v = star_semifield.holds;
  return star_presemifield.holds == v && three_term.holds == v && quadratic.holds == v && dembowski_ostrom.holds == v;
}

bool SemifieldReport::plane() const {
  return star_semifield.holds && star_presemifield.holds && three_term.holds && quadratic.holds &&
         dembowski_ostrom.holds;
}

SemifieldReport semifield_criteria(const FieldCtx& ctx, const VecFun& h_in, std::optional<BitVec> unit,
                                   unsigned threads) {
  if (h_in.n != ctx.n()) throw DomainError("semifield_criteria: h does not match the field context");
  if (h_in.n > 8) throw ResourceError("semifield_criteria: n > 8 not supported");
  const VecFun h = minus_constant(h_in);
  const BitVec u = resolve_unit(h.n, unit);
  auto c1 = launch(threads, [&] {
    const auto ptr = ptr_from_h(h, u);
    return ptr.has_value() && commutative_presemifield(ptr->mult);
  });
  auto c2 = launch(threads, [&] { return commutative_presemifield(star_h(h)); });
  auto c3 = launch(threads, [&] { return is_presemifield(h); });
  auto c4 = launch(threads, [&] { return components_quadratic(h); });
  auto c5 = launch(threads, [&] { return is_DO(normalize_f(interpolate(ctx, h_to_f(ctx, h)))); });
  return SemifieldReport{c1.get(), c2.get(), c3.get(), c4.get(), c5.get()};
}

SemifieldReport semifield_report(const FieldCtx& ctx, const Rds& d, std::optional<BitVec> unit, unsigned threads) {
  if (d.n != ctx.n()) throw DomainError("semifield_report: RDS does not match the field context");
  if (!verify_rds(d)) throw DomainError("semifield_report: input is not a relative difference set");
  SemifieldReport r = semifield_criteria(ctx, h_from_rds(d), unit, threads);
  r.star_semifield = timed([&] { return commutative_presemifield(coordinatize(d, unit).mult); });
  if (!r.unanimous()) throw InternalError("semifield criteria disagree on a relative difference set");
  return r;
}

// ------------------------------------------------------------------ nuclei --

std::optional<BitVec> table_identity(const MulTable& t) {
  const std::uint32_t q = 1u << t.n;
  for (std::uint32_t e = 0; e < q; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < q && ok; ++x) {
      ok = t.at(BitVec{e}, BitVec{x}) == BitVec{x} && t.at(BitVec{x}, BitVec{e}) == BitVec{x};
    }
    if (ok) return BitVec{e};
  }
  return std::nullopt;
}

Nuclei nuclei(const MulTable& t, unsigned threads) {
  if (!table_identity(t)) throw DomainError("nuclei: table has no two-sided identity");
  const std::uint32_t q = 1u << t.n;
  auto mul = [&](std::uint32_t x, std::uint32_t y) { return t.cells[(std::size_t{x} << t.n) | y]; };
  auto scan = [&](auto&& assoc) {
    std::vector<std::uint8_t> member(q, 0);
    detail::parallel_blocks(q, threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
      for (std::uint64_t a = lo; a < hi; ++a) {
        bool in = true;
        for (std::uint32_t x = 0; x < q && in; ++x) {
          for (std::uint32_t y = 0; y < q && in; ++y) in = assoc(static_cast<std::uint32_t>(a), x, y);
        }
        member[a] = in;
      }
    });
    std::vector<std::uint32_t> out;
    for (std::uint32_t a = 0; a < q; ++a) {
      if (member[a]) out.push_back(a);
    }
    return out;
  };
  Nuclei nu;
  nu.left = scan([&](std::uint32_t a, std::uint32_t x, std::uint32_t y) { return mul(mul(a, x), y) == mul(a, mul(x, y)); });
  nu.middle = scan([&](std::uint32_t a, std::uint32_t x, std::uint32_t y) { return mul(mul(x, a), y) == mul(x, mul(a, y)); });
  nu.right = scan([&](std::uint32_t a, std::uint32_t x, std::uint32_t y) { return mul(mul(x, y), a) == mul(x, mul(y, a)); });
  return nu;
}

MulTable field_table(const FieldCtx& ctx) {
  if (ctx.n() > kMaxTableDegree) throw ResourceError("field_table: n > 10 not supported");
  const std::uint32_t q = ctx.size();
  MulTable t{ctx.n(), std::vector<std::uint32_t>(std::size_t{q} * q)};
  for (std::uint32_t x = 0; x < q; ++x) {
    const auto row = multiplication_table(ctx, Fe{x});
    std::copy(row.begin(), row.end(), t.cells.begin() + (std::ptrdiff_t{x} << ctx.n()));
  }
  return t;
}

}  // namespace z4rds
