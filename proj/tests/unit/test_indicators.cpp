#include <doctest.h>

#include "algebras.hpp"
#include "hopfind/error.hpp"
#include "hopfind/indicators.hpp"
#include "hopfind/oracle.hpp"

using namespace hopfind;
using namespace hopfind::testing;

namespace {

Polynomial poly(std::uint64_t q, std::initializer_list<std::int64_t> c) {
  return Polynomial::from_integers(PrimeField(q), c);
}

LRSequence make_seq(std::uint64_t q, std::int64_t offset, Vector values) {
  return LRSequence{PrimeField(q), offset, std::move(values), std::nullopt, std::nullopt};
}

// Small examples covering both pertinent and non-pertinent sequences.
std::vector<HopfAlgebraData> examples() {
  return {kg(cyclic_group(2), 2),       kg(cyclic_group(4), 2),        kg(cyclic_group(3), 3),
          kg(cyclic_group(2), 3),       kg(cyclic_group(3), 2),        kg(s3(), 2),
          kg(s3(), 3),                  function_algebra(s3(), 2),     h_delta(2, 1),
          h_delta(3, 0),                h_delta(5, 1),                 u_heisenberg(2),
          tensor(kg(s3(), 2), function_algebra(s3(), 2))};
}

}  // namespace

TEST_CASE("Sweedler powers") {
  const HopfAlgebraData h = kg(cyclic_group(3), 3);
  CHECK(sweedler_power(h, 0) == unit_counit_map(h));
  CHECK(sweedler_power(h, 1) == identity_map(h));
  CHECK(sweedler_power(h, -1) == antipode_map(h));
  const Endomorphism sq = sweedler_power(h, 2);
  for (std::size_t g = 0; g < 3; ++g) CHECK(sq(basis_vector(h, g)) == basis_vector(h, 2 * g % 3));
  for (const auto& a : examples()) {
    const ConvolutionAlgebra conv(a);
    CHECK(sweedler_power(a, -2) == conv.convolve(conv.antipode(), conv.antipode()));
  }
}

TEST_CASE("indicator examples") {
  const HopfAlgebraData c2 = kg(cyclic_group(2), 2);
  CHECK(indicator(c2, 1) == 1);
  CHECK(indicator(c2, 2) == 0);
  CHECK(indicator(c2, 3) == 1);
  CHECK(indicator(c2, 4) == 0);
  for (const auto& h : examples()) {
    CHECK(indicator(h, 1) == 1);
    CHECK(indicator(h, 2) == h.antipode.trace());
    CHECK(indicator(h, 2) == trace_antipode_power(h, 1));
    CHECK(indicator(h, 0) == trace_antipode_power(h, 2));
  }
}

TEST_CASE("indicator sequences") {
  CHECK(indicator_sequence(h_delta(3, 0), 1, 6).values == Vector{1, 1, 0, 1, 1, 0});
  for (const auto& h : examples()) CHECK(indicator_sequence(h, 1, 1).values == Vector{1});
  const LRSequence neg = indicator_sequence(kg(cyclic_group(2), 2), -4, -1);
  CHECK(neg.values == Vector{0, 1, 0, 1});
  CHECK(neg.at(-1) == 1);
  CHECK_THROWS_AS(indicator_sequence(h_delta(2, 0), 3, 2), Error);
}

TEST_CASE("windows away from zero agree with the ladder through zero") {
  for (const auto& h : examples()) {
    const LRSequence full = indicator_sequence(h, -20, 20);
    const LRSequence right = indicator_sequence(h, 5, 20);
    const LRSequence left = indicator_sequence(h, -20, -5);
    for (std::int64_t n = 5; n <= 20; ++n) {
      CHECK(right.at(n) == full.at(n));
      CHECK(left.at(-n) == full.at(-n));
    }
    CHECK(indicator(h, 7) == full.at(7));
    CHECK(indicator(h, -7) == full.at(-7));
  }
}

TEST_CASE("parallel windows match the sequential ladder") {
  for (const auto& h : examples()) {
    const LRSequence seq = indicator_sequence(h, -13, 17, 1);
    for (unsigned threads : {2u, 3u, 7u}) CHECK(indicator_sequence(h, -13, 17, threads).values == seq.values);
  }
}

TEST_CASE("indicator minimal polynomials") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    Vector coeffs(p + 1, 0);
    coeffs[0] = PrimeField(p).neg(1);
    coeffs[p] = 1;
    const Polynomial expected(PrimeField(p), coeffs);
    CHECK(indicator_min_poly(kg(cyclic_group(p), p)) == expected);
  }
  CHECK(indicator_min_poly(h_delta(2, 1)) == poly(2, {-1, 0, 1}));
  CHECK(indicator_min_poly(tensor(kg(cyclic_group(3), 3), kg(cyclic_group(3), 3))) == poly(3, {-1, 0, 0, 1}));
  // kC_2 over GF(3): nu_n = 1, 2, 1, 2, ...
  CHECK(indicator_min_poly(kg(cyclic_group(2), 3)) == poly(3, {1, 1}));
  for (const auto& h : examples()) {
    const Polynomial f = indicator_min_poly(h);
    CHECK(f.coeff(0) != 0);
    CHECK(divides(f, convolution_min_poly(h)));
    CHECK(f.degree() <= static_cast<int>(h.dim * h.dim));
  }
}

TEST_CASE("p-pertinence test") {
  CHECK(check_p_pertinent(indicator_sequence(u_heisenberg(2), -8, 8), 2));
  CHECK_FALSE(check_p_pertinent(make_seq(2, 1, Vector(10, 1)), 2));
  CHECK_FALSE(check_p_pertinent(make_seq(3, 1, Vector(12, 1)), 3));
  CHECK_FALSE(check_p_pertinent(make_seq(2, 1, {1, 1, 0, 1, 1, 0}), 2));
  CHECK(check_p_pertinent(make_seq(3, -3, {0, 1, 1, 0, 1, 1, 0}), 3));
  CHECK_THROWS_AS(check_p_pertinent(make_seq(3, 1, {1, 1, 0, 1, 1}), 3), Error);
  CHECK(check_p_pertinent(indicator_sequence(kg(s3(), 2), -8, 8), 2));
  CHECK_FALSE(check_p_pertinent(indicator_sequence(kg(cyclic_group(3), 2), -8, 8), 2));
}

TEST_CASE("traces of antipode powers") {
  CHECK(trace_antipode_power(kg(cyclic_group(9), 3), 0) == 0);
  CHECK(trace_antipode_power(u_heisenberg(2), 0) == 0);
  const HopfAlgebraData f3 = function_algebra(cyclic_group(3), 3);
  for (std::uint64_t n = 0; n <= 12; ++n) CHECK(trace_antipode_power(f3, n) == n % 2);
  const HopfAlgebraData v4 = kg(klein4(), 2);
  for (std::uint64_t n = 0; n <= 8; ++n) CHECK(trace_antipode_power(v4, n) == 0);
}

TEST_CASE("binomial profile") {
  CHECK(binomial_profile(3, 6).values == Vector{1, 1, 0, 1, 1, 0});
  CHECK(binomial_profile(2, 4).values == Vector{1, 0, 1, 0});
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
    const LRSequence b = binomial_profile(p, static_cast<std::int64_t>(4 * p));
    CHECK(b.at(static_cast<std::int64_t>(p)) == 0);
    CHECK(check_p_pertinent(b, p));
  }
  CHECK_THROWS_AS(binomial_profile(5, 9), Error);
}

TEST_CASE("dual invariance, op/cop equality, tensor multiplicativity") {
  const auto hs = examples();
  for (const auto& h : hs) {
    const Vector seq = indicator_sequence(h, -12, 12).values;
    CHECK(indicator_sequence(dual(h), -12, 12).values == seq);
    CHECK(indicator_sequence(opposite(h), -12, 12).values == indicator_sequence(co_opposite(h), -12, 12).values);
  }
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i; j < hs.size(); ++j) {
      if (!(hs[i].field == hs[j].field) || hs[i].dim * hs[j].dim > 40) continue;
      const PrimeField& f = hs[i].field;
      const Vector a = indicator_sequence(hs[i], -8, 8).values, b = indicator_sequence(hs[j], -8, 8).values;
      const Vector t = indicator_sequence(tensor(hs[i], hs[j]), -8, 8).values;
      for (std::size_t k = 0; k < t.size(); ++k) CHECK(t[k] == f.mul(a[k], b[k]));
    }
}

TEST_CASE("periodicity over the integers") {
  for (const auto& h : examples()) {
    const Polynomial f = indicator_min_poly(h);
    const auto t = static_cast<std::int64_t>(sequence_period(f));
    const std::int64_t r = default_window_radius(h.field.modulus());
    const LRSequence seq = indicator_sequence(h, -r, r);
    for (std::int64_t n = -r; n + t <= r; ++n) CHECK(seq.at(n + t) == seq.at(n));
    CHECK(satisfies_recurrence(f, seq.values));
  }
}

TEST_CASE("group algebras count solutions of g^n = 1") {
  const std::vector<std::pair<GroupTable, std::uint64_t>> cases = {
      {cyclic_group(4), 2}, {s3(), 2}, {s3(), 3}, {s3(), 5}, {heisenberg27(), 3}, {cyclic_group(6), 5}};
  for (const auto& [g, p] : cases) {
    const LRSequence seq = indicator_sequence(kg(g, p), -18, 18);
    for (std::int64_t n = -18; n <= 18; ++n) CHECK(seq.at(n) == group_indicator_count(g, n, p));
  }
}

TEST_CASE("p-pertinent algebras match the binomial profile") {
  for (const auto& h : examples()) {
    const std::uint64_t p = h.field.modulus();
    const auto hi = static_cast<std::int64_t>(4 * p);
    const LRSequence seq = indicator_sequence(h, 1, hi);
    if (!check_p_pertinent(seq, p)) continue;
    CHECK(seq.values == binomial_profile(p, hi).values);
  }
}

TEST_CASE("indicator reports") {
  const IndicatorReport r = make_indicator_report(kg(cyclic_group(2), 2), "c2", 1, 4);
  CHECK(r.sequence.values == Vector{1, 0, 1, 0});
  CHECK(r.min_poly == poly(2, {1, 0, 1}));
  CHECK(r.period == 2);
  CHECK(r.p_pertinent);
  // A window too short to judge on its own still gets a verdict.
  const IndicatorReport one = make_indicator_report(h_delta(5, 0), "h5", 1, 1);
  CHECK(one.sequence.values == Vector{1});
  CHECK(one.p_pertinent);
  CHECK(make_indicator_report(kg(s3(), 3), "s3", -3, 3).p_pertinent);
  CHECK_FALSE(make_indicator_report(kg(cyclic_group(2), 3), "c2", -3, 3).p_pertinent);
}
