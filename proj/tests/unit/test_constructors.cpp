#include <doctest.h>

#include "algebras.hpp"
#include "hopfind/error.hpp"
#include "hopfind/filtration.hpp"

using namespace hopfind;
using namespace hopfind::testing;

TEST_CASE("group tables") {
  const GroupTable c4 = cyclic_group(4);
  CHECK_NOTHROW(validate_group(c4));
  CHECK(c4.inverse(1) == 3);
  CHECK(c4.power(1, -1) == 3);
  CHECK(c4.power(1, 6) == 2);
  CHECK(c4.element_order(2) == 2);

  const GroupTable h = heisenberg27();
  CHECK(h.order == 27);
  for (std::size_t g = 1; g < 27; ++g) CHECK(h.element_order(g) == 3);
  CHECK(s3().order == 6);

  GroupTable bad = cyclic_group(3);
  bad.table[1][1] = 1;
  CHECK_THROWS_AS(validate_group(bad), Error);
  GroupTable nonassoc;
  // A Latin square with identity 0 that is not associative (order 5 loop).
  nonassoc.order = 5;
  nonassoc.identity = 0;
  nonassoc.table = {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_WITH_AS(validate_group(nonassoc), doctest::Contains("associativity"), Error);
}

TEST_CASE("group algebras") {
  const HopfAlgebraData c2 = kg(cyclic_group(2), 2);
  CHECK(c2.dim == 2);
  CHECK(validate(c2).valid());

  const HopfAlgebraData c9 = kg(cyclic_group(9), 3);
  CHECK(c9.dim == 9);
  CHECK(coradical(c9).dim() == 9);

  const HopfAlgebraData heis = kg(heisenberg27(), 3);
  CHECK(heis.dim == 27);
  CHECK_FALSE(is_commutative(heis));
  CHECK(is_cocommutative(heis));

  for (const auto& g : {cyclic_group(4), s3(), klein4()}) {
    CHECK(is_cocommutative(kg(g, 2)));
    CHECK(is_commutative(function_algebra(g, 2)));
    CHECK(validate(function_algebra(g, 3)).valid());
  }
}

TEST_CASE("H(delta)") {
  const HopfAlgebraData h0 = h_delta(3, 0), h1 = h_delta(3, 1);
  CHECK(multiply(h0, basis_vector(h0, 1), basis_vector(h0, 2)) == Vector{0, 0, 0});
  CHECK(multiply(h1, basis_vector(h1, 1), basis_vector(h1, 2)) == basis_vector(h1, 1));
  for (int delta : {0, 1}) {
    const HopfAlgebraData h = h_delta(2, delta);
    // Delta(x^2) has no cross terms over GF(2); here x^2 = delta x.
    const FieldMatrix d = comultiply(h, multiply(h, basis_vector(h, 1), basis_vector(h, 1)));
    CHECK(d.at(1, 1) == 0);
  }
  // In H(0) at p = 5, Delta(x^2) = x^2 (x) 1 + 2 x (x) x + 1 (x) x^2.
  const HopfAlgebraData h5 = h_delta(5, 0);
  const FieldMatrix d = comultiply(h5, basis_vector(h5, 2));
  CHECK(d.at(2, 0) == 1);
  CHECK(d.at(1, 1) == 2);
  CHECK(d.at(0, 2) == 1);
  CHECK_THROWS_AS(h_delta(3, 2), Error);
  CHECK_THROWS_AS(h_delta(4, 0), Error);
}

TEST_CASE("one-dimensional restricted Lie algebras give H(delta)") {
  CHECK(same_structure(u_abelian(3, 1, {}), h_delta(3, 0)));
  CHECK(same_structure(u_abelian(3, 1, {{0, 0, 1}}), h_delta(3, 1)));
  CHECK(same_structure(u_abelian(5, 1, {{0, 0, 1}}), h_delta(5, 1)));
  CHECK(same_structure(u_abelian(2, 2, {}), tensor(h_delta(2, 0), h_delta(2, 0))));
}

TEST_CASE("Heisenberg restricted enveloping algebra") {
  for (std::uint64_t p : {2u, 3u}) {
    const HopfAlgebraData u = u_heisenberg(p);
    CHECK(u.dim == p * p * p);
    CHECK(validate(u).valid());
    CHECK_FALSE(is_commutative(u));
    CHECK(is_cocommutative(u));
    CHECK(is_connected(u));
    // Primitive elements are exactly the span of the generators.
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < 3; ++i) {
      Vector v(u.dim, 0);
      std::size_t idx = 1;
      for (std::size_t k = i + 1; k < 3; ++k) idx *= p;
      v[idx] = 1;
      gens.push_back(v);
    }
    CHECK(primitive_space(u) == Subspace::span(u.field, u.dim, gens));
  }
}

TEST_CASE("restricted enveloping algebras are connected of dimension p^d") {
  const std::vector<RestrictedLieData> lies = {
      make_lie_data(2, 2, {}, {{0, 1, 1}}),
      make_lie_data(2, 3, {}, {{0, 0, 1}, {1, 2, 1}}),
      make_lie_data(3, 2, {}, {{0, 1, 1}, {1, 1, 2}}),
      make_lie_data(2, 2, {{0, 1, 1, 1}}, {{1, 1, 1}}),  // [x, y] = y with y^[2] = y
  };
  for (std::size_t i = 0; i < 3; ++i) {
    const HopfAlgebraData u = restricted_enveloping(lies[i]);
    std::size_t expected = 1;
    for (std::size_t k = 0; k < lies[i].dim; ++k) expected *= lies[i].field.modulus();
    CHECK(u.dim == expected);
    CHECK(is_connected(u));
    CHECK(primitive_space(u).dim() == lies[i].dim);
  }
  // The last one is a valid restricted Lie algebra only with x^[2] = x.
  CHECK_THROWS_WITH_AS(validate_lie(lies[3]), doctest::Contains("restrictedness"), Error);
  const RestrictedLieData fixed = make_lie_data(2, 2, {{0, 1, 1, 1}}, {{0, 0, 1}});
  const HopfAlgebraData u = restricted_enveloping(fixed);
  CHECK(u.dim == 4);
  CHECK_FALSE(is_commutative(u));
}

TEST_CASE("invalid Lie data is rejected") {
  // [e0, e1] = e2, [e1, e2] = e0, [e0, e2] = e0 breaks Jacobi over GF(5).
  const RestrictedLieData bad = make_lie_data(5, 3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 0, 1}}, {});
  CHECK_THROWS_WITH_AS(validate_lie(bad), doctest::Contains("Jacobi"), Error);
  CHECK_THROWS_AS(restricted_enveloping(bad), Error);
  CHECK_THROWS_AS(make_lie_data(3, 2, {{1, 0, 0, 1}}, {}), Error);
  CHECK_THROWS_AS(make_lie_data(3, 2, {{0, 1, 2, 1}}, {}), Error);
}

TEST_CASE("dimension cap applies to enveloping algebras") {
  CHECK_THROWS_AS(restricted_enveloping(make_lie_data(2, 10, {}, {})), Error);
}
