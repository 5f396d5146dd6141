#pragma once

// The projective plane of a (2^n,2^n,2^n,1)-RDS, its coordinatization, and
// the commutative semifield criteria.
//
// Index layout for the plane of D in Z_4^n (q = 2^n):
//   points  [0, q^2)        affine point <a,b> at (a << n) | b
//           q^2 + c         ideal point of the parallel class {D + <c,k>}
//           q^2 + q         the point (infinity)
//   lines   [0, q^2)        D + g at the index of g
//           q^2 + c         the coset N + <c,0>
//           q^2 + q         the line at infinity

#include <cstdint>
#include <optional>
#include <vector>

#include "z4rds/rdscore.hpp"
#include "z4rds/reprs.hpp"

namespace z4rds {

/// Fixed-size bit set for incidence rows.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  std::size_t count() const;
  std::size_t count_and(const BitRow& other) const;
  /// Lowest index set in both rows, or npos.
  std::size_t first_common(const BitRow& other) const;
  std::vector<std::uint32_t> indices() const;
  /// Some index is set in all three rows.
  bool meets_all(const BitRow& b, const BitRow& c) const;

  static constexpr std::size_t npos = ~std::size_t{0};

 private:
  std::vector<std::uint64_t> words_;
};

/// Incidence structure stored both ways.
struct Incidence {
  std::uint32_t num_points = 0;
  std::uint32_t num_lines = 0;
  std::vector<BitRow> point_lines;  // lines through each point
  std::vector<BitRow> line_points;  // points on each line

  static Incidence from_lines(std::uint32_t num_points, const std::vector<std::vector<std::uint32_t>>& lines);
  bool incident(std::uint32_t point, std::uint32_t line) const { return line_points[line].test(point); }
  /// The unique common line of two points; InternalError if there is none.
  std::uint32_t join(std::uint32_t p, std::uint32_t r) const;
  /// The unique common point of two lines; InternalError if there is none.
  std::uint32_t meet(std::uint32_t l, std::uint32_t m) const;
};

inline constexpr unsigned kMaxPlaneDegree = 6;

/// The incidence structure of D without validating D.
Incidence build_incidence(const Rds& d);
/// As build_incidence; throws DomainError unless D is an RDS.
Incidence build_plane(const Rds& d);

struct PlaneCheck {
  bool sizes = false;       // |P| = |L| and uniform degrees
  bool points_axiom = false;
  bool lines_axiom = false;
  bool quadrangle = false;
  std::uint32_t order = 0;  // line size - 1 when uniform
  bool ok() const { return sizes && points_axiom && lines_axiom && quadrangle; }
};

PlaneCheck check_plane(const Incidence& p, unsigned threads = 1);
bool verify_plane(const Incidence& p, unsigned threads = 1);

/// Multiplication of the planar ternary ring: m * x at cells[(m << n) | x].
struct Ptr {
  MulTable mult;
  std::vector<std::uint32_t> tau;  // tau[unit *_h x] = x
  BitVec unit;
};

/// The vector the coordinatization labels as 1: e_{n-1} by default.
inline BitVec default_unit(unsigned n) { return unit_vector(n - 1); }

/// Labels the plane of D (translated to contain 0) and reads off the PTR
/// multiplication geometrically. Cross-checks m . x = tau(m *_h x) and every
/// labeling step; a failure is an InternalError.
Ptr coordinatize(const Rds& d, std::optional<BitVec> unit = std::nullopt);

/// m . x = tau(m *_h x), or nothing when x -> unit *_h x is not bijective.
std::optional<Ptr> ptr_from_h(const VecFun& h, BitVec unit);

/// h(x+y+z)+h(x+y)+h(x+z)+h(y+z)+h(x)+h(y)+h(z) = 0 for all x, y, z.
/// Forces h(0) = 0; subtract h(0) first to test the shape of h.
bool is_presemifield(const VecFun& h);
/// Every coordinate function has algebraic degree at most 2.
bool components_quadratic(const VecFun& h);
/// Every exponent has the form 2^i + 2^j, i != j. The input must be
/// normalized; DomainError otherwise.
bool is_DO(const UniPoly& p);

struct Criterion {
  bool holds = false;
  double seconds = 0;
};

/// The five computable statements of the semifield theorem; `plane` is the
/// conjunction.
struct SemifieldReport {
  Criterion star_semifield;      // (1) commutative semifield under the PTR product
  Criterion star_presemifield;   // (2) commutative presemifield under *_h
  Criterion three_term;          // (3) the seven-term identity
  Criterion quadratic;           // (4) component degrees <= 2
  Criterion dembowski_ostrom;    // (5) normalized f_B is DO
  bool unanimous() const;
  bool plane() const;
};

/// Evaluates the criteria on any h (after subtracting h(0)); the algebraic
/// PTR product is used for (1).
SemifieldReport semifield_criteria(const FieldCtx& ctx, const VecFun& h, std::optional<BitVec> unit = std::nullopt,
                                   unsigned threads = 1);

/// D must be an RDS. Criterion (1) uses the geometric coordinatization.
/// Throws InternalError if the criteria disagree.
SemifieldReport semifield_report(const FieldCtx& ctx, const Rds& d, std::optional<BitVec> unit = std::nullopt,
                                 unsigned threads = 1);

struct Nuclei {
  std::vector<std::uint32_t> left;
  std::vector<std::uint32_t> middle;
  std::vector<std::uint32_t> right;
};

/// Two-sided identity of a table, if any.
std::optional<BitVec> table_identity(const MulTable& t);
/// DomainError when the table has no two-sided identity.
Nuclei nuclei(const MulTable& t, unsigned threads = 1);

/// Field multiplication of the context as a table (polynomial coordinates).
MulTable field_table(const FieldCtx& ctx);

}  // namespace z4rds
