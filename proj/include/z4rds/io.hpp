#pragma once

// Text formats for the data files read and written by the command line tool.
//
// Every field-dependent file starts with the field header
//   n=<n> modulus=<hex> basis=<hex,...>
// followed by the body:
//   truth table   2^n lines, one hex word per input 0..2^n-1
//   polynomial    lines `<exponent> <hex coefficient>`, exponent in decimal
//   RDS           2^n lines `<a hex>:<b hex>` for the element <a, b>
// Boolean functions use the header `m=<m>` followed by the truth table as one
// hex number (bit x is f(x)), possibly split over several lines.
// Blank lines and lines starting with '#' are ignored everywhere. Parse
// errors carry the 1-based line number.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "z4rds/bent4.hpp"
#include "z4rds/gf2n.hpp"
#include "z4rds/planegeo.hpp"
#include "z4rds/rdscore.hpp"
#include "z4rds/reprs.hpp"

namespace z4rds {

std::string format_hex(std::uint32_t w);
std::uint32_t parse_hex_word(std::string_view s, std::size_t line = 0);

struct TableFile {
  FieldCtx ctx;
  std::vector<std::uint32_t> table;

  VecFun as_h() const { return VecFun{ctx.n(), table}; }
  FeFun as_f() const { return FeFun{ctx.n(), table}; }
};

std::string write_table(const FieldCtx& ctx, const std::vector<std::uint32_t>& table);
TableFile read_table(std::string_view text);

struct PolyFile {
  FieldCtx ctx;
  UniPoly poly;
};

std::string write_poly(const FieldCtx& ctx, const UniPoly& p);
PolyFile read_poly(std::string_view text);

struct RdsFile {
  FieldCtx ctx;
  Rds rds;
};

std::string write_rds(const FieldCtx& ctx, const Rds& d);
RdsFile read_rds(std::string_view text);

std::string write_boolfun(const BoolFun& f);
BoolFun read_boolfun(std::string_view text);

/// Header `points=<p> lines=<l> format=lines`, then the points of each line.
std::string write_incidence_lines(const Incidence& p);
/// Header `points=<p> lines=<l> format=matrix`, then one 0/1 row per line.
std::string write_incidence_matrix(const Incidence& p);
/// Reads either layout.
Incidence read_incidence(std::string_view text);

/// Header `n=<n>`, then `U` and n rows of n characters 0/1, then `V` and n
/// rows, then `g <a hex>:<b hex>`.
std::string write_equivalence(unsigned n, const Equivalence& w);
Equivalence read_equivalence(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace z4rds
