#pragma once

// Planar functions whose image is {0, xi}: the pair set A_f, the sequence
// S_a, the spanning set P_n, and an exhaustive check that such planar
// functions are exactly the additive ones.

#include <cstdint>
#include <optional>
#include <vector>

#include "z4rds/gf2n.hpp"
#include "z4rds/reprs.hpp"

namespace z4rds {

struct FePair {
  Fe a;
  Fe b;
  friend bool operator==(FePair, FePair) = default;
};

/// f(x+a) + f(x) + f(x+a+b) + f(x+b) = 0 for all x.
bool af_member(const FieldCtx& ctx, const FeFun& f, Fe a, Fe b);

/// Membership bits of A_f, pair (a, b) at (a << n) | b.
struct AfSet {
  unsigned n = 0;
  std::vector<std::uint64_t> bits;

  bool contains(Fe a, Fe b) const {
    const std::size_t i = (std::size_t{a.word} << n) | b.word;
    return (bits[i >> 6] >> (i & 63)) & 1u;
  }
  std::size_t count() const;
  bool full() const { return count() == std::size_t{1} << (2 * n); }
};

AfSet af_build(const FieldCtx& ctx, const FeFun& f);

/// (a, b) ^ (a+b, c) = (a+b, b+c); DomainError unless q.a = p.a + p.b.
FePair af_wedge(FePair p, FePair q);
/// (a, b) v (a, c) = (a, b+c); DomainError unless q.a = p.a.
FePair af_vee(FePair p, FePair q);

/// (a, xi/a) in A_f for every a != 0. DomainError unless xi != 0 and
/// Im(f) is contained in {0, xi}.
bool planar_twoimage_check(const FieldCtx& ctx, const FeFun& f, Fe xi);

/// x / y with x / 0 := 0.
Fe fe_div0(const FieldCtx& ctx, Fe x, Fe y);

/// S_a: a_0 = a, a_1 = a + xi/a, a_{i+1} = a_{i-1} + xi/a_i.
struct SeqSa {
  Fe xi;
  Fe a0;
  std::vector<Fe> terms;        // by the recurrence
  std::vector<Fe> closed_form;  // a (a^2/(a^2+xi))^i and a ((a^2+xi)/a^2)^{i+1}
  std::uint64_t period = 0;     // observed
  std::uint64_t predicted_period = 0;  // 2 ord(1 + xi/a^2)

  bool has_zero_term() const;
  bool consistent() const { return terms == closed_form && period == predicted_period && !has_zero_term(); }
};

/// DomainError unless xi != 0, a != 0 and a^2 != xi.
SeqSa sequence_sa(const FieldCtx& ctx, Fe a, Fe xi, std::size_t count);

/// {1/(1+alpha) : alpha primitive} together with 1, sorted. For n = 1 this is {1}.
std::vector<Fe> pn_set(const FieldCtx& ctx);

struct PnSpan {
  bool spans = false;
  std::vector<Fe> basis;              // members of P_n that are independent
  std::optional<Fe> annihilator;      // beta != 0 with Tr(beta p) = 0 on P_n
};

PnSpan pn_span(const FieldCtx& ctx);
bool pn_spans(const FieldCtx& ctx);

/// f(x+y) = f(x) + f(y) for all x, y.
bool is_additive(const FieldCtx& ctx, const FeFun& f);

struct Thm41Report {
  unsigned n = 0;
  Fe xi;
  std::uint64_t candidates = 0;
  std::uint64_t planar = 0;
  std::uint64_t additive = 0;
  std::uint64_t planar_surjective = 0;  // planar with image exactly {0, xi}
  std::vector<std::uint64_t> counterexamples;  // support masks, bit x-1 for f(x) = xi
};

/// Every f with f(0) = 0 and Im(f) in {0, xi}, compared on planarity and
/// additivity; n <= 4.
Thm41Report thm41_bruteforce(const FieldCtx& ctx, Fe xi, unsigned threads = 1);

/// The function with support mask m as enumerated by thm41_bruteforce.
FeFun twoimage_function(const FieldCtx& ctx, Fe xi, std::uint64_t mask);

}  // namespace z4rds
