#pragma once

// Arithmetic in F_{2^n} (n <= 20) and F_2-linear algebra on n-bit words.
//
// Field elements are words holding coordinates with respect to the
// polynomial basis 1, alpha, ..., alpha^{n-1}, where alpha is a root of the
// context's modulus. Bit i of a word is the coefficient of alpha^i.
// A FieldCtx additionally carries a (possibly non-polynomial) basis B that
// the representation maps of reprs.hpp use; coords/from_coords translate
// between the two coordinate systems.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace z4rds {

inline constexpr unsigned kMaxFieldDegree = 20;

/// Element of F_{2^n} in polynomial-basis coordinates.
struct Fe {
  std::uint32_t word = 0;

  friend constexpr Fe operator+(Fe x, Fe y) { return Fe{x.word ^ y.word}; }
  friend constexpr bool operator==(Fe, Fe) = default;
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

/// Element of F_2^n; bit i is the coordinate x_i.
struct BitVec {
  std::uint32_t word = 0;

  friend constexpr BitVec operator+(BitVec x, BitVec y) { return BitVec{x.word ^ y.word}; }
  friend constexpr bool operator==(BitVec, BitVec) = default;
  friend constexpr auto operator<=>(BitVec, BitVec) = default;
};

/// Coordinatewise product x ⊙ y of two vectors.
constexpr BitVec odot(BitVec x, BitVec y) { return BitVec{x.word & y.word}; }

/// Unit vector e_i.
constexpr BitVec unit_vector(unsigned i) { return BitVec{1u << i}; }

/// n x n matrix over F_2. rows[k] bit j holds entry (k, j), so applying the
/// matrix to a column vector v gives bit k = parity(rows[k] & v).
struct BinMat {
  unsigned n = 0;
  std::vector<std::uint32_t> rows;

  static BinMat zero(unsigned n);
  static BinMat identity(unsigned n);
  /// Matrix whose j-th column is columns[j].
  static BinMat from_columns(std::span<const std::uint32_t> columns);

  bool get(unsigned k, unsigned j) const { return (rows[k] >> j) & 1u; }
  void set(unsigned k, unsigned j, bool bit);
  std::uint32_t column(unsigned j) const;

  friend bool operator==(const BinMat&, const BinMat&) = default;
};

BitVec mat_apply(const BinMat& m, BitVec v);
BinMat mat_mul(const BinMat& a, const BinMat& b);
bool mat_invertible(const BinMat& m);
/// Throws DomainError when m is singular.
BinMat mat_inverse(const BinMat& m);

/// Rank over F_2 of a list of words.
unsigned gf2_rank(std::span<const std::uint32_t> vectors);

/// |GL(n, 2)| = prod_{i<n} (2^n - 2^i).
std::uint64_t gl_order(unsigned n);

/// Visits every invertible n x n matrix exactly once, in lexicographic order
/// of the row words. The visitor returns false to stop early.
///
/// Restricting first_row to [first_row_lo, first_row_hi) partitions the
/// stream into disjoint pieces that can be consumed in parallel. Without
/// `streaming`, n > 5 is refused with ResourceError.
struct GlOptions {
  bool streaming = false;
  std::uint32_t first_row_lo = 1;
  std::uint32_t first_row_hi = 0;  // 0 means 2^n
};
void gl_enumerate(unsigned n, const std::function<bool(const BinMat&)>& visit,
                  const GlOptions& options = {});

/// Lexicographically least irreducible polynomial of degree n (bitmask with
/// bit n set).
std::uint32_t default_modulus(unsigned n);

/// Irreducibility over F_2 by trial division.
bool is_irreducible(std::uint32_t poly);

/// Prime divisors of 2^n - 1 for 1 <= n <= 20 (empty for n = 1).
std::span<const std::uint32_t> mersenne_prime_divisors(unsigned n);

class FieldCtx {
 public:
  /// Default modulus and polynomial basis.
  explicit FieldCtx(unsigned n);
  FieldCtx(unsigned n, std::uint32_t modulus);
  FieldCtx(unsigned n, std::uint32_t modulus, std::vector<Fe> basis);

  unsigned n() const { return n_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return 1u << n_; }
  std::uint32_t mask() const { return size() - 1; }
  std::span<const Fe> basis() const { return basis_; }
  bool has_polynomial_basis() const { return polynomial_basis_; }

  /// Columns are the basis elements: from_coords = basis_matrix * v.
  const BinMat& basis_matrix() const { return basis_matrix_; }
  const BinMat& coords_matrix() const { return coords_matrix_; }

  /// `n=<n> modulus=<hex> basis=<hex,hex,...>`
  std::string header() const;
  static FieldCtx parse_header(std::string_view line);

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.n_ == b.n_ && a.modulus_ == b.modulus_ && a.basis_ == b.basis_;
  }

 private:
  unsigned n_;
  std::uint32_t modulus_;
  std::vector<Fe> basis_;
  bool polynomial_basis_ = true;
  BinMat basis_matrix_;
  BinMat coords_matrix_;
};

Fe fe_mul(const FieldCtx& ctx, Fe x, Fe y);
Fe fe_sqr(const FieldCtx& ctx, Fe x);
Fe fe_pow(const FieldCtx& ctx, Fe x, std::uint64_t k);
/// Throws DomainError for x = 0.
Fe fe_inv(const FieldCtx& ctx, Fe x);
/// x^(2^(n-1)), the inverse of squaring.
Fe fe_sqrt(const FieldCtx& ctx, Fe x);
/// Absolute trace to F_2, returned as 0 or 1.
unsigned fe_trace(const FieldCtx& ctx, Fe x);
/// Relative trace to the subfield of order 2^m; m must divide n.
Fe fe_rel_trace(const FieldCtx& ctx, unsigned m, Fe x);
/// Multiplicative order; throws DomainError for 0.
std::uint64_t fe_order(const FieldCtx& ctx, Fe x);
bool fe_is_primitive(const FieldCtx& ctx, Fe x);

BitVec coords(const FieldCtx& ctx, Fe x);
Fe from_coords(const FieldCtx& ctx, BitVec v);

/// Discrete log tables for the least primitive element g:
/// exp[t] = g^t for 0 <= t < 2^n - 1, log[exp[t]] = t (log[0] unused).
struct LogTables {
  Fe generator;
  std::vector<std::uint32_t> exp;
  std::vector<std::uint32_t> log;
};
LogTables make_log_tables(const FieldCtx& ctx);

/// Table of the F_2-linear map x -> a*x, indexed by the word of x.
std::vector<std::uint32_t> multiplication_table(const FieldCtx& ctx, Fe a);

}  // namespace z4rds
