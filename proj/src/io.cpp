#include "z4rds/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "z4rds/errors.hpp"

namespace z4rds {

namespace {

struct Line {
  std::size_t number = 0;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const std::string_view t = trim(raw);
    if (!t.empty() && t.front() != '#') out.push_back(Line{number, t});
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    s = trim(s);
    if (s.empty()) return out;
    const auto sp = s.find_first_of(" \t");
    out.push_back(s.substr(0, sp));
    if (sp == std::string_view::npos) return out;
    s.remove_prefix(sp);
  }
}

std::uint64_t parse_dec(std::string_view s, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("bad decimal value '" + std::string(s) + "'", line);
  }
  return v;
}

// Value of key=... in a header token, or throws.
std::string_view header_value(std::string_view token, std::string_view key, std::size_t line) {
  if (!token.starts_with(key) || token.size() <= key.size() || token[key.size()] != '=') {
    throw ParseError("expected " + std::string(key) + "=<value>, got '" + std::string(token) + "'", line);
  }
  return token.substr(key.size() + 1);
}

FieldCtx parse_field(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError("missing field header");
  try {
    return FieldCtx::parse_header(lines[0].text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), lines[0].number);
  }
}

void expect_rows(const std::vector<Line>& lines, std::size_t rows, const char* what) {
  if (lines.size() - 1 != rows) {
    const std::size_t at = lines.size() - 1 < rows ? (lines.empty() ? 0 : lines.back().number) : lines[rows + 1].number;
    throw ParseError(std::string(what) + ": expected " + std::to_string(rows) + " data lines, found " +
                         std::to_string(lines.size() - 1),
                     at);
  }
}

std::string bit_row(std::uint32_t word, unsigned n) {
  std::string s(n, '0');
  for (unsigned j = 0; j < n; ++j) s[j] = ((word >> j) & 1u) ? '1' : '0';
  return s;
}

std::uint32_t parse_bit_row(std::string_view s, unsigned n, std::size_t line) {
  if (s.size() != n) throw ParseError("expected a row of " + std::to_string(n) + " bits", line);
  std::uint32_t w = 0;
  for (unsigned j = 0; j < n; ++j) {
    if (s[j] == '1') {
      w |= 1u << j;
    } else if (s[j] != '0') {
      throw ParseError("expected 0 or 1 in bit row", line);
    }
  }
  return w;
}

Z4Elt parse_elt(std::string_view s, unsigned n, std::size_t line) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected <a>:<b>, got '" + std::string(s) + "'", line);
  const std::uint32_t a = parse_hex_word(s.substr(0, colon), line);
  const std::uint32_t b = parse_hex_word(s.substr(colon + 1), line);
  if ((a | b) >> n) throw ParseError("group element exceeds n bits", line);
  return Z4Elt{BitVec{a}, BitVec{b}};
}

std::string elt_text(Z4Elt x) { return format_hex(x.a.word) + ":" + format_hex(x.b.word); }

}  // namespace

std::string format_hex(std::uint32_t w) {
  char buf[16];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w, 16);
  return std::string(buf, ptr);
}

std::uint32_t parse_hex_word(std::string_view s, std::size_t line) {
  if (s.starts_with("0x") || s.starts_with("0X")) s.remove_prefix(2);
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("bad hex value '" + std::string(s) + "'", line);
  }
  return v;
}

std::string write_table(const FieldCtx& ctx, const std::vector<std::uint32_t>& table) {
  if (table.size() != ctx.size()) throw DomainError("write_table: table must have 2^n entries");
  std::string out = ctx.header() + "\n";
  for (std::uint32_t v : table) out += format_hex(v) + "\n";
  return out;
}

TableFile read_table(std::string_view text) {
  const auto lines = content_lines(text);
  TableFile f{parse_field(lines), {}};
  expect_rows(lines, f.ctx.size(), "truth table");
  f.table.reserve(f.ctx.size());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::uint32_t v = parse_hex_word(lines[i].text, lines[i].number);
    if (v >> f.ctx.n()) throw ParseError("value exceeds n bits", lines[i].number);
    f.table.push_back(v);
  }
  return f;
}

std::string write_poly(const FieldCtx& ctx, const UniPoly& p) {
  if (p.n != ctx.n()) throw DomainError("write_poly: polynomial and field differ in n");
  std::string out = ctx.header() + "\n";
  for (const auto& [e, c] : p.terms) out += std::to_string(e) + " " + format_hex(c.word) + "\n";
  return out;
}

PolyFile read_poly(std::string_view text) {
  const auto lines = content_lines(text);
  PolyFile f{parse_field(lines), UniPoly{}};
  f.poly.n = f.ctx.n();
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto parts = split_ws(lines[i].text);
    if (parts.size() != 2) throw ParseError("expected `<exponent> <hex coefficient>`", lines[i].number);
    const std::uint64_t e = parse_dec(parts[0], lines[i].number);
    const std::uint32_t c = parse_hex_word(parts[1], lines[i].number);
    if (e >= f.ctx.size()) throw ParseError("exponent must be below 2^n", lines[i].number);
    if (c >> f.ctx.n()) throw ParseError("coefficient exceeds n bits", lines[i].number);
    if (f.poly.terms.count(static_cast<std::uint32_t>(e))) throw ParseError("repeated exponent", lines[i].number);
    if (c != 0) f.poly.terms[static_cast<std::uint32_t>(e)] = Fe{c};
  }
  return f;
}

std::string write_rds(const FieldCtx& ctx, const Rds& d) {
  if (d.n != ctx.n()) throw DomainError("write_rds: set and field differ in n");
  std::string out = ctx.header() + "\n";
  for (Z4Elt x : d.elems) out += elt_text(x) + "\n";
  return out;
}

RdsFile read_rds(std::string_view text) {
  const auto lines = content_lines(text);
  const FieldCtx ctx = parse_field(lines);
  expect_rows(lines, ctx.size(), "RDS");
  std::vector<Z4Elt> elems;
  for (std::size_t i = 1; i < lines.size(); ++i) elems.push_back(parse_elt(lines[i].text, ctx.n(), lines[i].number));
  try {
    return RdsFile{ctx, Rds::from_elements(ctx.n(), std::move(elems))};
  } catch (const DomainError& e) {
    throw ParseError(e.what(), lines[0].number);
  }
}

std::string write_boolfun(const BoolFun& f) {
  const std::size_t bits = std::size_t{1} << f.m;
  const std::size_t digits = bits < 4 ? 1 : bits / 4;
  std::string hex(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned nibble = 0;
    for (unsigned k = 0; k < 4 && 4 * d + k < bits; ++k) nibble |= unsigned{f(static_cast<std::uint32_t>(4 * d + k))} << k;
    hex[digits - 1 - d] = "0123456789abcdef"[nibble];
  }
  std::string out = "m=" + std::to_string(f.m) + "\n";
  for (std::size_t i = 0; i < hex.size(); i += 64) out += hex.substr(i, 64) + "\n";
  return out;
}

BoolFun read_boolfun(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing m=<m> header");
  const std::uint64_t m = parse_dec(header_value(lines[0].text, "m", lines[0].number), lines[0].number);
  if (m > kMaxBoolArity) throw ParseError("arity above 24", lines[0].number);
  std::string hex;
  for (std::size_t i = 1; i < lines.size(); ++i) hex += lines[i].text;
  const std::size_t bits = std::size_t{1} << m;
  const std::size_t digits = bits < 4 ? 1 : bits / 4;
  const std::size_t where = lines.size() > 1 ? lines[1].number : lines[0].number;
  if (hex.size() != digits) {
    throw ParseError("expected " + std::to_string(digits) + " hex digits, found " + std::to_string(hex.size()), where);
  }
  BoolFun f = BoolFun::zero(static_cast<unsigned>(m));
  for (std::size_t d = 0; d < digits; ++d) {
    const char ch = hex[digits - 1 - d];
    unsigned nibble = 0;
    if (ch >= '0' && ch <= '9') {
      nibble = static_cast<unsigned>(ch - '0');
    } else if (ch >= 'a' && ch <= 'f') {
      nibble = static_cast<unsigned>(ch - 'a' + 10);
    } else if (ch >= 'A' && ch <= 'F') {
      nibble = static_cast<unsigned>(ch - 'A' + 10);
    } else {
      throw ParseError("bad hex digit in truth table", where);
    }
    for (unsigned k = 0; k < 4; ++k) {
      if (!((nibble >> k) & 1u)) continue;
      if (4 * d + k >= bits) throw ParseError("truth table has bits beyond 2^m", where);
      f.set(static_cast<std::uint32_t>(4 * d + k), true);
    }
  }
  return f;
}

std::string write_incidence_lines(const Incidence& p) {
  std::string out =
      "points=" + std::to_string(p.num_points) + " lines=" + std::to_string(p.num_lines) + " format=lines\n";
  for (const BitRow& row : p.line_points) {
    std::string s;
    for (std::uint32_t i : row.indices()) s += (s.empty() ? "" : " ") + std::to_string(i);
    out += s + "\n";
  }
  return out;
}

std::string write_incidence_matrix(const Incidence& p) {
  std::string out =
      "points=" + std::to_string(p.num_points) + " lines=" + std::to_string(p.num_lines) + " format=matrix\n";
  for (const BitRow& row : p.line_points) {
    std::string s(p.num_points, '0');
    for (std::uint32_t i : row.indices()) s[i] = '1';
    out += s + "\n";
  }
  return out;
}

Incidence read_incidence(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing incidence header");
  const auto head = split_ws(lines[0].text);
  const std::size_t hl = lines[0].number;
  if (head.size() != 3) throw ParseError("expected points=<p> lines=<l> format=<lines|matrix>", hl);
  const std::uint64_t points = parse_dec(header_value(head[0], "points", hl), hl);
  const std::uint64_t count = parse_dec(header_value(head[1], "lines", hl), hl);
  const std::string_view format = header_value(head[2], "format", hl);
  if (format != "lines" && format != "matrix") throw ParseError("format must be lines or matrix", hl);
  if (points > (1u << 24) || count > (1u << 24)) throw ParseError("incidence structure too large", hl);
  expect_rows(lines, count, "incidence");
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::uint32_t> row;
    if (format == "lines") {
      for (std::string_view t : split_ws(lines[i].text)) {
        const std::uint64_t v = parse_dec(t, lines[i].number);
        if (v >= points) throw ParseError("point index out of range", lines[i].number);
        row.push_back(static_cast<std::uint32_t>(v));
      }
    } else {
      if (lines[i].text.size() != points) throw ParseError("matrix row has the wrong length", lines[i].number);
      for (std::uint32_t j = 0; j < points; ++j) {
        const char ch = lines[i].text[j];
        if (ch == '1') {
          row.push_back(j);
        } else if (ch != '0') {
          throw ParseError("expected 0 or 1 in matrix row", lines[i].number);
        }
      }
    }
    rows.push_back(std::move(row));
  }
  return Incidence::from_lines(static_cast<std::uint32_t>(points), rows);
}

std::string write_equivalence(unsigned n, const Equivalence& w) {
  std::string out = "n=" + std::to_string(n) + "\nU\n";
  for (std::uint32_t r : w.phi.u.rows) out += bit_row(r, n) + "\n";
  out += "V\n";
  for (std::uint32_t r : w.phi.v.rows) out += bit_row(r, n) + "\n";
  out += "g " + elt_text(w.g) + "\n";
  return out;
}

Equivalence read_equivalence(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing n=<n> header");
  const std::uint64_t n64 = parse_dec(header_value(lines[0].text, "n", lines[0].number), lines[0].number);
  if (n64 < 1 || n64 > kMaxFieldDegree) throw ParseError("n must be in [1, 20]", lines[0].number);
  const auto n = static_cast<unsigned>(n64);
  if (lines.size() != 2 * n + 4) {
    throw ParseError("expected U, V blocks of " + std::to_string(n) + " rows and a g line", lines.back().number);
  }
  Equivalence w{Z4Aut{BinMat::zero(n), BinMat::zero(n)}, Z4Elt{}};
  std::size_t i = 1;
  for (BinMat* m : {&w.phi.u, &w.phi.v}) {
    const char* tag = m == &w.phi.u ? "U" : "V";
    if (lines[i].text != tag) throw ParseError(std::string("expected ") + tag, lines[i].number);
    ++i;
    for (unsigned k = 0; k < n; ++k, ++i) m->rows[k] = parse_bit_row(lines[i].text, n, lines[i].number);
  }
  const auto parts = split_ws(lines[i].text);
  if (parts.size() != 2 || parts[0] != "g") throw ParseError("expected g <a>:<b>", lines[i].number);
  w.g = parse_elt(parts[1], n, lines[i].number);
  try {
    check_aut(w.phi);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), lines[1].number);
  }
  return w;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace z4rds
