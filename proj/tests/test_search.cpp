#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "support.hpp"
#include "z4rds/errors.hpp"
#include "z4rds/rdscore.hpp"
#include "z4rds/search.hpp"

using namespace z4rds;

namespace {

// Number of planar h on F_2^n by listing every table.
std::uint64_t brute_planar_count(unsigned n) {
  const std::uint32_t q = 1u << n;
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < q; ++i) total *= q;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    VecFun h = VecFun::zero(n);
    std::uint64_t c = code;
    for (auto& v : h.table) {
      v = static_cast<std::uint32_t>(c % q);
      c /= q;
    }
    count += is_planar_h(h);
  }
  return count;
}

// Number of planar h on F_2^3 whose coordinates have only monomials of degree >= 2.
std::uint64_t planar_count_n3_high() {
  const std::uint32_t monomials[4] = {3, 5, 6, 7};
  std::uint64_t count = 0;
  for (std::uint32_t code = 0; code < (1u << 12); ++code) {
    VecFun h = VecFun::zero(3);
    for (std::uint32_t x = 0; x < 8; ++x) {
      for (unsigned i = 0; i < 3; ++i) {
        unsigned bit = 0;
        for (unsigned j = 0; j < 4; ++j) {
          if ((code >> (4 * i + j)) & 1u) bit ^= (x & monomials[j]) == monomials[j];
        }
        h.table[x] |= bit << i;
      }
    }
    count += is_planar_h(h);
  }
  return count;
}

}  // namespace

TEST_CASE("exhaustive nonDO-planar search for n <= 2 matches a brute-force count") {
  for (unsigned n = 1; n <= 2; ++n) {
    const SearchReport r = search_nondo_planar(n, 1u << 20, 0);
    CHECK(r.exhaustive);
    CHECK(r.complete);
    CHECK(r.witnesses == 0);
    CHECK(r.findings.empty());
    // Affine maps F_2^n -> F_2^n preserve planarity.
    CHECK((r.solutions << (n * n + n)) == brute_planar_count(n));
  }
}

TEST_CASE("exhaustive nonDO-planar search for n = 3, 4") {
  const SearchReport r3 = search_nondo_planar(3, 1u << 20, 0);
  CHECK(r3.complete);
  CHECK(r3.solutions == planar_count_n3_high());
  CHECK(r3.witnesses == 0);
  const SearchReport r4 = search_nondo_planar(4, 1u << 24, 0);
  CHECK(r4.complete);
  CHECK(r4.solutions > 0);
  CHECK(r4.witnesses == 0);
}

TEST_CASE("system search agrees with the single-function census and with planarity") {
  const ShiftedBentCensus census = shifted_bent_census(4, 2);
  const SearchReport one = search_shifted_bent_system(4, 1, 1u << 20, 0);
  CHECK(one.complete);
  // Modulo the 32 affine Boolean functions on 4 variables.
  CHECK(one.solutions * 32 == census.shifted_bent[1]);
  const SearchReport full = search_shifted_bent_system(4, 4, 1u << 24, 0);
  CHECK(full.complete);
  CHECK(full.solutions == search_nondo_planar(4, 1u << 24, 0).solutions);
  for (unsigned m = 1; m <= 4; ++m) CHECK(search_shifted_bent_system(4, m, 1u << 24, 0).witnesses == 0);
}

TEST_CASE("a small budget gives an incomplete report") {
  const SearchReport r = search_nondo_planar(4, 10, 0);
  CHECK(r.exhaustive);
  CHECK_FALSE(r.complete);
  CHECK(r.nodes == 10);
  CHECK_FALSE(search_shifted_bent_system(4, 3, 5, 0).complete);
}

TEST_CASE("random mode is seeded and never complete") {
  const SearchReport a = search_shifted_bent_system(5, 1, 300, 11);
  const SearchReport b = search_shifted_bent_system(5, 1, 300, 11);
  CHECK_FALSE(a.exhaustive);
  CHECK_FALSE(a.complete);
  CHECK(a.nodes == 300);
  CHECK(a.solutions == b.solutions);
  CHECK(a.witnesses == b.witnesses);
  const SearchReport c = search_nondo_planar(5, 50, 3);
  CHECK_FALSE(c.complete);
  CHECK(c.nodes == 50);
}

TEST_CASE("search argument errors") {
  CHECK_THROWS_AS(search_nondo_planar(0, 10, 0), ResourceError);
  CHECK_THROWS_AS(search_nondo_planar(11, 10, 0), ResourceError);
  CHECK_THROWS_AS(search_shifted_bent_system(4, 0, 10, 0), DomainError);
  CHECK_THROWS_AS(search_shifted_bent_system(4, 5, 10, 0), DomainError);
}
