#include "z4rds/gf2n.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <sstream>

#include "z4rds/errors.hpp"

namespace z4rds {

namespace {

// Lexicographically least irreducible polynomial of each degree 1..20.
constexpr std::array<std::uint32_t, kMaxFieldDegree + 1> kDefaultModuli = {
    0,       0x2,     0x7,     0xb,     0x13,    0x25,     0x43,
    0x83,    0x11b,   0x203,   0x409,   0x805,   0x1009,   0x201b,
    0x4021,  0x8003,  0x1002b, 0x20009, 0x40009, 0x80027,  0x100009,
};

// Prime divisors of 2^n - 1.
const std::array<std::vector<std::uint32_t>, kMaxFieldDegree + 1> kMersenneDivisors = {{
    {},
    {},
    {3},
    {7},
    {3, 5},
    {31},
    {3, 7},
    {127},
    {3, 5, 17},
    {7, 73},
    {3, 11, 31},
    {23, 89},
    {3, 5, 7, 13},
    {8191},
    {3, 43, 127},
    {7, 31, 151},
    {3, 5, 17, 257},
    {131071},
    {3, 7, 19, 73},
    {524287},
    {3, 5, 11, 31, 41},
}};

int degree(std::uint64_t poly) { return poly == 0 ? -1 : 63 - std::countl_zero(poly); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

void check_degree(unsigned n) {
  if (n < 1 || n > kMaxFieldDegree) {
    throw DomainError("field degree must lie in [1, 20], got " + std::to_string(n));
  }
}

std::string hex(std::uint32_t w) {
  std::ostringstream os;
  os << std::hex << w;
  return os.str();
}

std::uint32_t parse_hex(std::string_view s) {
  if (s.starts_with("0x") || s.starts_with("0X")) s.remove_prefix(2);
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, 16);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("bad hex value '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

// ---------------------------------------------------------------- matrices --

BinMat BinMat::zero(unsigned n) { return BinMat{n, std::vector<std::uint32_t>(n, 0)}; }

BinMat BinMat::identity(unsigned n) {
  BinMat m = zero(n);
  for (unsigned i = 0; i < n; ++i) m.rows[i] = 1u << i;
  return m;
}

BinMat BinMat::from_columns(std::span<const std::uint32_t> columns) {
  BinMat m = zero(static_cast<unsigned>(columns.size()));
  for (unsigned j = 0; j < m.n; ++j) {
    for (unsigned k = 0; k < m.n; ++k) m.set(k, j, (columns[j] >> k) & 1u);
  }
  return m;
}

void BinMat::set(unsigned k, unsigned j, bool bit) {
  if (bit) {
    rows[k] |= 1u << j;
  } else {
    rows[k] &= ~(1u << j);
  }
}

std::uint32_t BinMat::column(unsigned j) const {
  std::uint32_t c = 0;
  for (unsigned k = 0; k < n; ++k) c |= ((rows[k] >> j) & 1u) << k;
  return c;
}

BitVec mat_apply(const BinMat& m, BitVec v) {
  std::uint32_t out = 0;
  for (unsigned k = 0; k < m.n; ++k) {
    out |= static_cast<std::uint32_t>(std::popcount(m.rows[k] & v.word) & 1) << k;
  }
  return BitVec{out};
}

BinMat mat_mul(const BinMat& a, const BinMat& b) {
  if (a.n != b.n) throw DomainError("matrix dimension mismatch");
  BinMat c = BinMat::zero(a.n);
  for (unsigned k = 0; k < a.n; ++k) {
    for (std::uint32_t r = a.rows[k]; r != 0; r &= r - 1) c.rows[k] ^= b.rows[std::countr_zero(r)];
  }
  return c;
}

unsigned gf2_rank(std::span<const std::uint32_t> vectors) {
  // Basis indexed by leading bit.
  std::array<std::uint32_t, 32> pivots{};
  unsigned rank = 0;
  for (std::uint32_t v : vectors) {
    while (v != 0) {
      const int top = 31 - std::countl_zero(v);
      if (pivots[top] == 0) {
        pivots[top] = v;
        ++rank;
        break;
      }
      v ^= pivots[top];
    }
  }
  return rank;
}

bool mat_invertible(const BinMat& m) { return gf2_rank(m.rows) == m.n; }

BinMat mat_inverse(const BinMat& m) {
  BinMat a = m;
  BinMat inv = BinMat::identity(m.n);
  for (unsigned col = 0; col < m.n; ++col) {
    unsigned pivot = col;
    while (pivot < m.n && !a.get(pivot, col)) ++pivot;
    if (pivot == m.n) throw DomainError("matrix is singular");
    std::swap(a.rows[pivot], a.rows[col]);
    std::swap(inv.rows[pivot], inv.rows[col]);
    for (unsigned r = 0; r < m.n; ++r) {
      if (r != col && a.get(r, col)) {
        a.rows[r] ^= a.rows[col];
        inv.rows[r] ^= inv.rows[col];
      }
    }
  }
  return inv;
}

std::uint64_t gl_order(unsigned n) {
  std::uint64_t order = 1;
  for (unsigned i = 0; i < n; ++i) order *= (std::uint64_t{1} << n) - (std::uint64_t{1} << i);
  return order;
}

namespace {

// Depth-first row selection; span[k] marks the span of rows 0..k-1.
bool gl_recurse(unsigned row, BinMat& m, std::vector<std::vector<std::uint8_t>>& span,
                const std::function<bool(const BinMat&)>& visit, std::uint32_t lo, std::uint32_t hi) {
  const unsigned n = m.n;
  if (row == n) return visit(m);
  const std::uint32_t size = 1u << n;
  const std::uint32_t first = row == 0 ? lo : 1;
  const std::uint32_t last = row == 0 ? hi : size;
  for (std::uint32_t w = first; w < last; ++w) {
    if (span[row][w]) continue;
    m.rows[row] = w;
    if (row + 1 < n) {
      auto& next = span[row + 1];
      next = span[row];
      for (std::uint32_t v = 0; v < size; ++v) {
        if (span[row][v]) next[v ^ w] = 1;
      }
    }
    if (!gl_recurse(row + 1, m, span, visit, lo, hi)) return false;
  }
  return true;
}

}  // namespace

void gl_enumerate(unsigned n, const std::function<bool(const BinMat&)>& visit, const GlOptions& options) {
  if (n == 0 || n > kMaxFieldDegree) throw DomainError("gl_enumerate: n out of range");
  if (n > 5 && !options.streaming) {
    throw ResourceError("gl_enumerate: |GL(" + std::to_string(n) + ",2)| too large without streaming");
  }
  const std::uint32_t size = 1u << n;
  const std::uint32_t lo = std::max<std::uint32_t>(options.first_row_lo, 1);
  const std::uint32_t hi = options.first_row_hi == 0 ? size : std::min(options.first_row_hi, size);
  BinMat m = BinMat::zero(n);
  std::vector<std::vector<std::uint8_t>> span(n, std::vector<std::uint8_t>(size, 0));
  span[0][0] = 1;
  gl_recurse(0, m, span, visit, lo, hi);
}

// -------------------------------------------------------------- polynomials --

std::uint32_t default_modulus(unsigned n) {
  check_degree(n);
  return kDefaultModuli[n];
}

bool is_irreducible(std::uint32_t poly) {
  const int d = degree(poly);
  if (d < 1) return false;
  for (std::uint64_t q = 2; degree(q) <= d / 2; ++q) {
    if (poly_mod(poly, q) == 0) return false;
  }
  return true;
}

std::span<const std::uint32_t> mersenne_prime_divisors(unsigned n) {
  check_degree(n);
  return kMersenneDivisors[n];
}

// -------------------------------------------------------------------- field --

FieldCtx::FieldCtx(unsigned n) : FieldCtx(n, default_modulus(n)) {}

FieldCtx::FieldCtx(unsigned n, std::uint32_t modulus) : FieldCtx(n, modulus, {}) {}

FieldCtx::FieldCtx(unsigned n, std::uint32_t modulus, std::vector<Fe> basis)
    : n_(n), modulus_(modulus), basis_(std::move(basis)) {
  check_degree(n);
  if (degree(modulus) != static_cast<int>(n) || !is_irreducible(modulus)) {
    throw DomainError("modulus 0x" + hex(modulus) + " is not an irreducible polynomial of degree " +
                      std::to_string(n));
  }
  if (basis_.empty()) {
    for (unsigned i = 0; i < n; ++i) basis_.push_back(Fe{1u << i});
  }
  if (basis_.size() != n) throw DomainError("basis must have exactly n elements");
  std::vector<std::uint32_t> cols;
  for (unsigned i = 0; i < n; ++i) {
    if (basis_[i].word >> n) throw DomainError("basis element out of range");
    polynomial_basis_ = polynomial_basis_ && basis_[i].word == (1u << i);
    cols.push_back(basis_[i].word);
  }
  basis_matrix_ = BinMat::from_columns(cols);
  if (!mat_invertible(basis_matrix_)) throw DomainError("basis is not linearly independent");
  coords_matrix_ = mat_inverse(basis_matrix_);
}

std::string FieldCtx::header() const {
  std::string out = "n=" + std::to_string(n_) + " modulus=" + hex(modulus_) + " basis=";
  for (unsigned i = 0; i < n_; ++i) {
    if (i != 0) out += ',';
    out += hex(basis_[i].word);
  }
  return out;
}

FieldCtx FieldCtx::parse_header(std::string_view line) {
  std::istringstream is{std::string(line)};
  std::string token;
  int n = -1;
  std::uint32_t modulus = 0;
  std::vector<Fe> basis;
  while (is >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in field header, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "n") {
      int parsed = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
      if (ec != std::errc{} || ptr != value.data() + value.size()) throw ParseError("bad n '" + value + "'");
      n = parsed;
    } else if (key == "modulus") {
      modulus = parse_hex(value);
    } else if (key == "basis") {
      std::string_view rest = value;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        basis.push_back(Fe{parse_hex(rest.substr(0, comma))});
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
    } else {
      throw ParseError("unknown field header key '" + key + "'");
    }
  }
  if (n < 1 || n > static_cast<int>(kMaxFieldDegree)) throw ParseError("field header needs n in [1, 20]");
  const unsigned un = static_cast<unsigned>(n);
  try {
    return FieldCtx(un, modulus == 0 ? default_modulus(un) : modulus, std::move(basis));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Fe fe_mul(const FieldCtx& ctx, Fe x, Fe y) {
  std::uint64_t r = 0;
  const std::uint64_t a = x.word;
  for (std::uint32_t b = y.word; b != 0; b &= b - 1) r ^= a << std::countr_zero(b);
  const int n = static_cast<int>(ctx.n());
  const std::uint64_t m = ctx.modulus();
  for (int i = 2 * n - 2; i >= n; --i) {
    if ((r >> i) & 1u) r ^= m << (i - n);
  }
  return Fe{static_cast<std::uint32_t>(r)};
}

Fe fe_sqr(const FieldCtx& ctx, Fe x) { return fe_mul(ctx, x, x); }

Fe fe_pow(const FieldCtx& ctx, Fe x, std::uint64_t k) {
  Fe result{1};
  Fe base = x;
  for (; k != 0; k >>= 1) {
    if (k & 1u) result = fe_mul(ctx, result, base);
    base = fe_sqr(ctx, base);
  }
  return result;
}

Fe fe_inv(const FieldCtx& ctx, Fe x) {
  if (x.word == 0) throw DomainError("fe_inv: zero has no inverse");
  return fe_pow(ctx, x, ctx.size() - 2);
}

Fe fe_sqrt(const FieldCtx& ctx, Fe x) {
  for (unsigned i = 1; i < ctx.n(); ++i) x = fe_sqr(ctx, x);
  return x;
}

unsigned fe_trace(const FieldCtx& ctx, Fe x) {
  Fe sum{};
  for (unsigned i = 0; i < ctx.n(); ++i) {
    sum = sum + x;
    x = fe_sqr(ctx, x);
  }
  return sum.word;
}

Fe fe_rel_trace(const FieldCtx& ctx, unsigned m, Fe x) {
  if (m == 0 || ctx.n() % m != 0) {
    throw DomainError("fe_rel_trace: " + std::to_string(m) + " does not divide " + std::to_string(ctx.n()));
  }
  Fe sum{};
  for (unsigned i = 0; i < ctx.n() / m; ++i) {
    sum = sum + x;
    for (unsigned s = 0; s < m; ++s) x = fe_sqr(ctx, x);
  }
  return sum;
}

std::uint64_t fe_order(const FieldCtx& ctx, Fe x) {
  if (x.word == 0) throw DomainError("fe_order: zero has no multiplicative order");
  std::uint64_t order = ctx.size() - 1;
  for (std::uint32_t p : mersenne_prime_divisors(ctx.n())) {
    while (order % p == 0 && fe_pow(ctx, x, order / p) == Fe{1}) order /= p;
  }
  return order;
}

bool fe_is_primitive(const FieldCtx& ctx, Fe x) { return x.word != 0 && fe_order(ctx, x) == ctx.size() - 1; }

BitVec coords(const FieldCtx& ctx, Fe x) {
  if (ctx.has_polynomial_basis()) return BitVec{x.word};
  return mat_apply(ctx.coords_matrix(), BitVec{x.word});
}

Fe from_coords(const FieldCtx& ctx, BitVec v) {
  if (ctx.has_polynomial_basis()) return Fe{v.word};
  return Fe{mat_apply(ctx.basis_matrix(), v).word};
}

LogTables make_log_tables(const FieldCtx& ctx) {
  const std::uint32_t q = ctx.size();
  LogTables t;
  std::uint32_t g = 1;
  while (!fe_is_primitive(ctx, Fe{g})) ++g;
  t.generator = Fe{g};
  t.exp.resize(q - 1);
  t.log.assign(q, 0);
  Fe power{1};
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    t.exp[i] = power.word;
    t.log[power.word] = i;
    power = fe_mul(ctx, power, t.generator);
  }
  return t;
}

std::vector<std::uint32_t> multiplication_table(const FieldCtx& ctx, Fe a) {
  std::array<std::uint32_t, kMaxFieldDegree> cols{};
  for (unsigned i = 0; i < ctx.n(); ++i) cols[i] = fe_mul(ctx, a, Fe{1u << i}).word;
  std::vector<std::uint32_t> table(ctx.size(), 0);
  for (std::uint32_t x = 1; x < ctx.size(); ++x) table[x] = table[x & (x - 1)] ^ cols[std::countr_zero(x)];
  return table;
}

}  // namespace z4rds
