#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "z4rds/errors.hpp"
#include "z4rds/planegeo.hpp"

using namespace z4rds;
using namespace z4rds::testing;

namespace {

// Both axioms from explicit point sets, without the bit rows.
bool naive_axioms(const Incidence& p) {
  std::vector<std::set<std::uint32_t>> lines(p.num_lines);
  for (std::uint32_t l = 0; l < p.num_lines; ++l) {
    for (std::uint32_t pt = 0; pt < p.num_points; ++pt) {
      if (p.incident(pt, l)) lines[l].insert(pt);
    }
  }
  for (std::uint32_t a = 0; a < p.num_points; ++a) {
    for (std::uint32_t b = a + 1; b < p.num_points; ++b) {
      int common = 0;
      for (const auto& s : lines) common += s.count(a) && s.count(b);
      if (common != 1) return false;
    }
  }
  for (std::uint32_t l = 0; l < p.num_lines; ++l) {
    for (std::uint32_t m = l + 1; m < p.num_lines; ++m) {
      int common = 0;
      for (std::uint32_t pt : lines[l]) common += static_cast<int>(lines[m].count(pt));
      if (common != 1) return false;
    }
  }
  return true;
}

std::uint32_t mul(const MulTable& t, std::uint32_t x, std::uint32_t y) { return t.cells[(std::size_t{x} << t.n) | y]; }

VecFun h_of_f(unsigned n, FeFun (*make)(const FieldCtx&)) {
  const FieldCtx ctx(n);
  return f_to_h(ctx, make(ctx));
}

}  // namespace

TEST_CASE("Fano plane") {
  const Incidence p = build_plane(zero_rds(1));
  CHECK(p.num_points == 7);
  CHECK(p.num_lines == 7);
  for (const auto& row : p.line_points) CHECK(row.count() == 3);
  const PlaneCheck c = check_plane(p);
  CHECK(c.ok());
  CHECK(c.order == 2);
  CHECK(naive_axioms(p));

  const Incidence fano = Incidence::from_lines(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
  CHECK(verify_plane(fano));
  CHECK(naive_axioms(fano));
}

TEST_CASE("planes of order 4 and 8") {
  const Incidence p2 = build_plane(zero_rds(2));
  CHECK(p2.num_points == 21);
  CHECK(check_plane(p2).ok());
  CHECK(check_plane(p2).order == 4);
  CHECK(naive_axioms(p2));

  const Incidence p3 = build_plane(knuth_rds(3));
  CHECK(p3.num_points == 73);
  CHECK(p3.num_lines == 73);
  const PlaneCheck c3 = check_plane(p3, 4);
  CHECK(c3.ok());
  CHECK(c3.order == 8);
  CHECK(naive_axioms(p3));
}

TEST_CASE("planes from random valid sets") {
  std::mt19937_64 rng(21);
  for (unsigned n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const Rds d = translate(apply_aut(random_aut(n, rng), rds_from_h(random_planar_quadratic_h(n, rng))),
                              random_elt(n, rng));
      const Incidence p = build_plane(d);
      const std::uint32_t q = 1u << n;
      CHECK(p.num_points == q * q + q + 1);
      CHECK(verify_plane(p));
      for (const auto& row : p.line_points) CHECK(row.count() == q + 1);
      for (const auto& row : p.point_lines) CHECK(row.count() == q + 1);
    }
  }
  const Incidence p4 = build_plane(zero_rds(4));
  CHECK(verify_plane(p4, 2));
}

TEST_CASE("invalid sets do not give planes") {
  const Rds bad = rds_from_h(VecFun::zero(2));
  CHECK_THROWS_AS(build_plane(bad), DomainError);
  const Incidence p = build_incidence(bad);
  CHECK_FALSE(verify_plane(p));
  CHECK(check_plane(p).sizes);
  CHECK_FALSE(check_plane(p).points_axiom);
  CHECK_FALSE(naive_axioms(p));
  CHECK_THROWS_AS(build_plane(zero_rds(7)), ResourceError);
}

TEST_CASE("quadrangle condition") {
  // Near-pencil: one long line plus lines through a fixed point. Both
  // incidence axioms hold but there is no quadrangle.
  const Incidence pencil = Incidence::from_lines(5, {{1, 2, 3, 4}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const PlaneCheck c = check_plane(pencil);
  CHECK(c.points_axiom);
  CHECK(c.lines_axiom);
  CHECK_FALSE(c.quadrangle);
  CHECK_FALSE(c.sizes);
  CHECK_FALSE(verify_plane(pencil));
  // Triangle: axioms hold, three points only.
  CHECK_FALSE(check_plane(Incidence::from_lines(3, {{0, 1}, {1, 2}, {0, 2}})).quadrangle);
  CHECK_THROWS_AS(Incidence::from_lines(2, {{0, 2}}), DomainError);
}

TEST_CASE("join and meet") {
  const Incidence p = build_plane(knuth_rds(3));
  for (std::uint32_t a = 0; a < p.num_points; a += 5) {
    for (std::uint32_t b = a + 1; b < p.num_points; b += 7) {
      const std::uint32_t l = p.join(a, b);
      CHECK(p.incident(a, l));
      CHECK(p.incident(b, l));
    }
  }
  const Incidence pencil = Incidence::from_lines(3, {{0, 1}, {2}});
  CHECK_THROWS_AS(pencil.meet(0, 1), InternalError);
  CHECK_THROWS_AS(pencil.join(0, 2), InternalError);
}

TEST_CASE("coordinatization laws") {
  std::mt19937_64 rng(22);
  for (unsigned n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      const VecFun h = random_planar_quadratic_h(n, rng);
      const Rds d = translate(rds_from_h(h), Z4Elt{BitVec{0}, BitVec{static_cast<std::uint32_t>(rng()) & ((1u << n) - 1)}});
      const BitVec u{1u << (rng() % n)};
      const Ptr ptr = coordinatize(d, u);
      const std::uint32_t q = 1u << n;
      for (std::uint32_t x = 0; x < q; ++x) {
        CHECK(mul(ptr.mult, u.word, x) == x);
        CHECK(mul(ptr.mult, x, u.word) == x);
        CHECK(mul(ptr.mult, 0, x) == 0);
        for (std::uint32_t y = 0; y < q; ++y) CHECK(mul(ptr.mult, x, y) == mul(ptr.mult, y, x));
      }
      CHECK(is_permutation(ptr.tau));
      const auto alg = ptr_from_h(h, u);
      REQUIRE(alg.has_value());
      CHECK(alg->mult.cells == ptr.mult.cells);
      CHECK(alg->tau == ptr.tau);
    }
  }
  CHECK(coordinatize(zero_rds(3)).unit == BitVec{4});
  CHECK_THROWS_AS(coordinatize(rds_from_h(VecFun::zero(2))), DomainError);
  CHECK_THROWS_AS(coordinatize(zero_rds(2), BitVec{0}), DomainError);
  CHECK_THROWS_AS(coordinatize(zero_rds(2), BitVec{4}), DomainError);
}

TEST_CASE("distributive laws when the criterion holds") {
  for (unsigned n = 1; n <= 5; n += 2) {
    const Ptr ptr = coordinatize(knuth_rds(n));
    const std::uint32_t q = 1u << n;
    for (std::uint32_t x = 0; x < q; ++x) {
      for (std::uint32_t y = 0; y < q; ++y) {
        for (std::uint32_t z = 0; z < q; ++z) {
          CHECK(mul(ptr.mult, x ^ y, z) == (mul(ptr.mult, x, z) ^ mul(ptr.mult, y, z)));
          CHECK(mul(ptr.mult, z, x ^ y) == (mul(ptr.mult, z, x) ^ mul(ptr.mult, z, y)));
        }
      }
    }
  }
}

TEST_CASE("ptr_from_h without a bijective unit row") {
  // h = 0 at n = 2: 1 * x = 1 . x is not bijective.
  CHECK_FALSE(ptr_from_h(VecFun::zero(2), BitVec{2}).has_value());
}

TEST_CASE("seven-term identity and component degrees") {
  CHECK(is_presemifield(VecFun::zero(3)));
  CHECK(components_quadratic(VecFun::zero(3)));
  const VecFun knuth = h_of_f(3, construct_knuth);
  CHECK(is_presemifield(knuth));
  CHECK(components_quadratic(knuth));

  VecFun cubic = VecFun::zero(3);
  cubic.table[7] = 1;  // x0 x1 x2 in coordinate 0
  CHECK_FALSE(is_presemifield(cubic));
  CHECK_FALSE(components_quadratic(cubic));
  // The identity at x = y = z = 0 reads h(0) = 0.
  VecFun constant = VecFun::zero(3);
  for (auto& v : constant.table) v = 5;
  CHECK_FALSE(is_presemifield(constant));
  CHECK(components_quadratic(constant));

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    VecFun h = trial % 2 ? random_quadratic_h(3, rng) : random_h(3, rng);
    const std::uint32_t c = h.table[0];
    for (auto& v : h.table) v ^= c;
    const bool p = is_presemifield(h);
    CHECK(p == components_quadratic(h));
    if (trial % 2) CHECK(p);
  }
}

TEST_CASE("Dembowski-Ostrom test") {
  CHECK(is_DO(UniPoly{3, {}}));
  CHECK_FALSE(is_DO(UniPoly{3, {{7, Fe{1}}}}));
  CHECK(is_DO(UniPoly{3, {{3, Fe{1}}, {5, Fe{2}}, {6, Fe{7}}}}));
  CHECK_THROWS_AS(is_DO(UniPoly{3, {{1, Fe{1}}}}), DomainError);
  CHECK_THROWS_AS(is_DO(UniPoly{3, {{0, Fe{1}}}}), DomainError);
  CHECK_THROWS_AS(is_DO(UniPoly{3, {{4, Fe{1}}}}), DomainError);

  const FieldCtx c5(5);
  const UniPoly k5 = normalize_f(interpolate(c5, construct_knuth(c5)));
  CHECK(is_DO(k5));
  for (const auto& [e, c] : k5.terms) CHECK((std::popcount(e) == 2 && (e & 2u)));

  std::mt19937_64 rng(24);
  for (unsigned n = 2; n <= 4; ++n) {
    const FieldCtx ctx(n);
    for (int trial = 0; trial < 30; ++trial) {
      const VecFun h = trial % 2 ? random_quadratic_h(n, rng) : random_h(n, rng);
      CHECK(is_DO(normalize_f(interpolate(ctx, h_to_f(ctx, h)))) == components_quadratic(h));
    }
  }
}

TEST_CASE("semifield reports") {
  for (unsigned n = 1; n <= 5; ++n) {
    const FieldCtx ctx(n);
    const SemifieldReport z = semifield_report(ctx, zero_rds(n));
    CHECK(z.plane());
    if (n % 2) {
      const SemifieldReport k = semifield_report(ctx, knuth_rds(n), std::nullopt, 4);
      CHECK(k.plane());
      CHECK(k.dembowski_ostrom.seconds >= 0);
    }
  }
  const FieldCtx c3(3);
  CHECK_THROWS_AS(semifield_report(c3, rds_from_h(VecFun::zero(3))), DomainError);
  CHECK_THROWS_AS(semifield_report(FieldCtx(2), zero_rds(3)), DomainError);
}

TEST_CASE("criteria on random inputs") {
  std::mt19937_64 rng(25);
  const FieldCtx ctx(3);
  for (int trial = 0; trial < 30; ++trial) {
    const VecFun h = random_planar_quadratic_h(3, rng);
    const SemifieldReport r = semifield_criteria(ctx, h, std::nullopt, trial % 2 ? 3 : 1);
    CHECK(r.unanimous());
    CHECK(r.plane());
    CHECK(semifield_report(ctx, rds_from_h(h)).plane());
  }
  for (int trial = 0; trial < 30; ++trial) {
    VecFun h = random_h(3, rng);
    if (components_quadratic(h)) continue;
    const SemifieldReport r = semifield_criteria(ctx, h);
    CHECK(r.unanimous());
    CHECK_FALSE(r.star_semifield.holds);
  }
  // Quadratic but not planar: (3)-(5) hold while (1) and (2) fail, so the
  // criteria only coincide on relative difference sets.
  const SemifieldReport zero = semifield_criteria(ctx, VecFun::zero(3));
  CHECK_FALSE(zero.star_presemifield.holds);
  CHECK(zero.three_term.holds);
  CHECK(zero.quadratic.holds);
  CHECK(zero.dembowski_ostrom.holds);
}

TEST_CASE("nuclei") {
  for (unsigned n = 1; n <= 4; ++n) {
    const FieldCtx ctx(n);
    const Nuclei f = nuclei(field_table(ctx), 2);
    CHECK(f.left.size() == ctx.size());
    CHECK(f.middle.size() == ctx.size());
    CHECK(f.right.size() == ctx.size());
    // The plane of f = 0 is Desarguesian.
    const Nuclei z = nuclei(coordinatize(zero_rds(n)).mult);
    CHECK(z.left.size() == ctx.size());
    CHECK(z.middle.size() == ctx.size());
    CHECK(z.right.size() == ctx.size());
  }

  const Ptr k5 = coordinatize(knuth_rds(5));
  const Nuclei nu = nuclei(k5.mult, 4);
  CHECK(nu.left == nu.right);
  // The middle nucleus is a subfield: it holds 0 and 1 and is closed under
  // both operations.
  const std::set<std::uint32_t> mid(nu.middle.begin(), nu.middle.end());
  CHECK(mid.count(0));
  CHECK(mid.count(k5.unit.word));
  CHECK(std::has_single_bit(mid.size()));
  for (std::uint32_t a : mid) {
    for (std::uint32_t b : mid) {
      CHECK(mid.count(a ^ b));
      CHECK(mid.count(mul(k5.mult, a, b)));
    }
  }
  MESSAGE("Knuth order 32: |N_l| = " << nu.left.size() << ", |N_m| = " << nu.middle.size());

  MulTable zero{2, std::vector<std::uint32_t>(16, 0)};
  CHECK_FALSE(table_identity(zero).has_value());
  CHECK_THROWS_AS(nuclei(zero), DomainError);
}
