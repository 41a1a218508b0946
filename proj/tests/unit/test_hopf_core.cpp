#include <doctest.h>

#include <random>

#include "algebras.hpp"
#include "hopfind/error.hpp"
#include "hopfind/hopf.hpp"

using namespace hopfind;
using namespace hopfind::testing;

namespace {

std::vector<HopfAlgebraData> examples() {
  return {kg(cyclic_group(2), 2),
          kg(cyclic_group(3), 3),
          kg(klein4(), 2),
          kg(s3(), 2),
          function_algebra(s3(), 3),
          h_delta(3, 0),
          h_delta(3, 1),
          u_heisenberg(2),
          tensor(kg(s3(), 2), function_algebra(cyclic_group(2), 2))};
}

}  // namespace

TEST_CASE("validation accepts the examples") {
  for (const auto& h : examples()) {
    const auto r = validate(h);
    CHECK_MESSAGE(r.valid(), r.summary());
    CHECK(validate(dual(h)).valid());
  }
}

TEST_CASE("broken antipode is reported at g") {
  HopfAlgebraData h = kg(cyclic_group(3), 3);
  h.antipode = FieldMatrix::identity(h.field, 3);
  const auto r = validate(h);
  REQUIRE_FALSE(r.valid());
  CHECK(r.has_failure("antipode axiom"));
  CHECK(r.failures.size() == 1);
  CHECK(r.failures[0].indices == std::vector<std::size_t>{1});
  CHECK_THROWS_WITH_AS(require_valid(h, "test"), doctest::Contains("antipode axiom"), Error);
}

TEST_CASE("each axiom failure is named") {
  const HopfAlgebraData base = h_delta(3, 0);
  auto mutated = [&](auto change) {
    HopfAlgebraData h = base;
    change(h);
    return validate(h);
  };
  CHECK(mutated([](HopfAlgebraData& h) { h.mult.set(1, 2, 1, 1); }).has_failure("associativity"));
  CHECK(mutated([](HopfAlgebraData& h) { h.unit = {0, 1, 0}; }).has_failure("unit law"));
  CHECK(mutated([](HopfAlgebraData& h) { h.comult.set(1, 2, 2, 1); }).has_failure("coassociativity"));
  CHECK(mutated([](HopfAlgebraData& h) { h.counit = {1, 1, 0}; }).has_failure("counit law"));
  CHECK(mutated([](HopfAlgebraData& h) { h.comult.set(2, 1, 1, 1); }).has_failure("bialgebra compatibility"));
}

TEST_CASE("structural errors come before axiom checks") {
  HopfAlgebraData h = kg(cyclic_group(2), 2);
  h.unit = {1};
  CHECK_THROWS_AS(check_structure(h), Error);
  CHECK_THROWS_AS(validate(h), Error);
  HopfAlgebraData g = kg(cyclic_group(2), 2);
  g.antipode = FieldMatrix(PrimeField(3), 2, 2);
  CHECK_THROWS_AS(validate(g), Error);
}

TEST_CASE("dual") {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const HopfAlgebraData h = kg(cyclic_group(p), p);
    CHECK(same_structure(dual(h), function_algebra(cyclic_group(p), p)));
  }
  for (const auto& h : examples()) {
    CHECK(dual(dual(h)) == h);
    CHECK(dual(h).dim == h.dim);
  }
}

TEST_CASE("tensor") {
  const HopfAlgebraData t = tensor(h_delta(2, 0), h_delta(2, 0));
  CHECK(t.dim == 4);
  CHECK(validate(t).valid());
  CHECK(same_structure(tensor(kg(cyclic_group(2), 2), kg(cyclic_group(2), 2)), kg(klein4(), 2)));
  CHECK(tensor(kg(s3(), 2), h_delta(2, 1)).dim == 12);
  CHECK_THROWS_AS(tensor(h_delta(2, 0), h_delta(3, 0)), Error);
}

TEST_CASE("opposite and co-opposite") {
  const HopfAlgebraData comm = h_delta(3, 1);
  CHECK(same_structure(opposite(comm), comm));
  const HopfAlgebraData cocomm = kg(s3(), 3);
  CHECK(same_structure(co_opposite(cocomm), cocomm));
  for (const auto& h : examples()) {
    const HopfAlgebraData op = opposite(h), cop = co_opposite(h);
    CHECK(validate(op).valid());
    CHECK(validate(cop).valid());
    CHECK(op.antipode == inverse(h.antipode));
    CHECK(h.antipode * op.antipode == FieldMatrix::identity(h.field, h.dim));
  }
}

TEST_CASE("convolution examples") {
  const HopfAlgebraData h = kg(cyclic_group(3), 3);
  const ConvolutionAlgebra conv(h);
  CHECK(conv.convolve(conv.identity(), conv.antipode()) == conv.unit());
  CHECK(conv.convolve(conv.antipode(), conv.identity()) == conv.unit());
  const Endomorphism sq = conv.convolve(conv.identity(), conv.identity());
  for (std::size_t g = 0; g < 3; ++g) CHECK(sq(basis_vector(h, g)) == basis_vector(h, (2 * g) % 3));
  CHECK(conv.power(conv.identity(), -1) == conv.antipode());
  CHECK(conv.power(conv.identity(), 0) == conv.unit());

  const HopfAlgebraData c2 = kg(cyclic_group(2), 2);
  const Endomorphism cube = convolution_power(identity_map(c2), 3, c2);
  CHECK(cube(basis_vector(c2, 1)) == basis_vector(c2, 1));
}

TEST_CASE("convolution is associative and unital") {
  std::mt19937 rng(2024);
  for (const auto& h : examples()) {
    if (h.dim > 12) continue;
    const ConvolutionAlgebra conv(h);
    for (int trial = 0; trial < 3; ++trial) {
      const Endomorphism f = random_endomorphism(h, rng), g = random_endomorphism(h, rng),
                         k = random_endomorphism(h, rng);
      CHECK(conv.convolve(conv.convolve(f, g), k) == conv.convolve(f, conv.convolve(g, k)));
      CHECK(conv.convolve(conv.unit(), f) == f);
      CHECK(conv.convolve(f, conv.unit()) == f);
    }
  }
}

TEST_CASE("convolution powers add") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (const auto& h : examples()) {
    const ConvolutionAlgebra conv(h);
    for (int trial = 0; trial < 4; ++trial) {
      const int n = dist(rng), m = dist(rng);
      CHECK(conv.power(conv.identity(), n + m) ==
            conv.convolve(conv.power(conv.identity(), n), conv.power(conv.identity(), m)));
    }
  }
}

TEST_CASE("non-invertible endomorphisms have no negative powers") {
  const HopfAlgebraData h = h_delta(2, 0);
  const ConvolutionAlgebra conv(h);
  const Endomorphism zero(FieldMatrix(h.field, 2, 2));
  CHECK_FALSE(conv.inverse(zero));
  CHECK_THROWS_AS(conv.power(zero, -1), Error);
}

TEST_CASE("subspace predicates") {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const HopfAlgebraData h = kg(cyclic_group(p), p);
    std::vector<Vector> aug;
    for (std::size_t g = 1; g < p; ++g) {
      Vector v(p, 0);
      v[g] = 1;
      v[0] = h.field.neg(1);
      aug.push_back(v);
    }
    const Subspace a = Subspace::span(h.field, p, aug);
    CHECK(subspace_is_ideal(a, h));
    CHECK(subspace_is_coideal_two_sided(a, h));
    CHECK(subspace_is_stable_under(antipode_map(h).matrix(), a));
    CHECK(subspace_is_hopf_ideal(a, h));

    const Subspace zero = Subspace::zero(h.field, p);
    CHECK(subspace_is_ideal(zero, h));
    CHECK(subspace_is_coideal_two_sided(zero, h));
    CHECK(subspace_is_stable_under(antipode_map(h).matrix(), zero));

    const Subspace ones = Subspace::span(h.field, p, {h.unit});
    CHECK(subspace_is_subalgebra(ones, h));
    CHECK_FALSE(subspace_is_ideal(ones, h));
    CHECK(subspace_is_hopf_subalgebra(ones, h));
  }
}

TEST_CASE("commutativity flags and primitives") {
  CHECK_FALSE(is_commutative(kg(heisenberg27(), 3)));
  CHECK(is_cocommutative(kg(heisenberg27(), 3)));
  CHECK(is_commutative(function_algebra(s3(), 2)));
  CHECK_FALSE(is_cocommutative(function_algebra(s3(), 2)));
  CHECK(primitive_space(h_delta(5, 0)).dim() == 1);
  CHECK(primitive_space(kg(cyclic_group(3), 3)).dim() == 0);
}

TEST_CASE("dimension cap") {
  CHECK(dimension_cap() >= 512);
  CHECK_THROWS_AS(check_dimension(dimension_cap() + 1), Error);
}
