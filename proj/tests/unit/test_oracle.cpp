#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "algebras.hpp"
#include "hopfind/error.hpp"
#include "hopfind/filtration.hpp"
#include "hopfind/indicators.hpp"
#include "hopfind/oracle.hpp"

using namespace hopfind;
using namespace hopfind::testing;

namespace {

bool within(const HopfAlgebraData& h, std::uint64_t cap) {
  return std::pow(double(h.field.modulus()), double(h.dim)) <= double(cap);
}

std::vector<HopfAlgebraData> small_examples() {
  return {kg(cyclic_group(2), 2),
          kg(cyclic_group(4), 2),
          kg(klein4(), 2),
          kg(cyclic_group(3), 3),
          kg(cyclic_group(2), 3),
          kg(s3(), 2),
          kg(s3(), 3),
          function_algebra(cyclic_group(2), 3),
          function_algebra(cyclic_group(4), 2),
          function_algebra(s3(), 2),
          h_delta(2, 0),
          h_delta(2, 1),
          h_delta(3, 1),
          h_delta(5, 0),
          u_heisenberg(2),
          u_abelian(2, 3, {{0, 1, 1}}),
          tensor(kg(cyclic_group(2), 2), h_delta(2, 1)),
          tensor(kg(cyclic_group(3), 3), function_algebra(cyclic_group(3), 3))};
}

}  // namespace

TEST_CASE("brute-force Sweedler examples") {
  const HopfAlgebraData c3 = kg(cyclic_group(3), 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(sweedler_bruteforce(c3, basis_vector(c3, i), 1) == basis_vector(c3, i));
  const HopfAlgebraData c4 = kg(cyclic_group(4), 2);
  CHECK(sweedler_bruteforce(c4, basis_vector(c4, 1), 3) == basis_vector(c4, 3));
  CHECK(sweedler_bruteforce(c4, basis_vector(c4, 1), -1) == basis_vector(c4, 3));
  const HopfAlgebraData h = h_delta(2, 0);
  CHECK(sweedler_bruteforce(h, basis_vector(h, 1), 2) == Vector{0, 0});
  CHECK(sweedler_bruteforce(h, basis_vector(h, 1), 0) == Vector{0, 0});
  CHECK(sweedler_bruteforce(h, basis_vector(h, 0), 0) == Vector{1, 0});
  CHECK_THROWS_AS(sweedler_bruteforce(h, basis_vector(h, 0), 9), Error);
  CHECK_THROWS_AS(sweedler_bruteforce(h, basis_vector(h, 0), -9), Error);
}

TEST_CASE("brute-force Sweedler powers agree with convolution powers") {
  std::vector<HopfAlgebraData> hs = small_examples();
  hs.push_back(tensor(u_heisenberg(2), kg(cyclic_group(4), 2)));
  hs.push_back(tensor(kg(s3(), 3), h_delta(3, 1)));
  for (const auto& h : hs) {
    REQUIRE(h.dim <= 32);
    const std::int64_t reach = h.dim <= 8 ? 6 : 4;
    for (std::int64_t m = -reach; m <= reach; ++m) {
      const Endomorphism f = sweedler_power(h, m);
      for (std::size_t i = 0; i < h.dim; ++i) {
        const Vector e = basis_vector(h, i);
        CHECK(sweedler_bruteforce(h, e, m) == f(e));
      }
    }
  }
}

TEST_CASE("radical enumeration examples") {
  const HopfAlgebraData t = h_delta(2, 0);
  CHECK(radical_enumeration(t.field, t.mult) == Subspace::span(PrimeField(2), 2, {{0, 1}}));
  CHECK(radical_enumeration(function_algebra(cyclic_group(3), 3)).dim() == 0);
  CHECK(radical_enumeration(kg(cyclic_group(2), 3)).dim() == 0);
  const Subspace j = radical_enumeration(kg(klein4(), 2));
  CHECK(j.dim() == 3);
  for (std::size_t g = 1; g < 4; ++g) {
    Vector v(4, 0);
    v[0] = 1;
    v[g] = 1;
    CHECK(j.contains(v));
  }
  CHECK_THROWS_AS(radical_enumeration(kg(cyclic_group(11), 3)), Error);
}

TEST_CASE("radical enumeration agrees with the trace chain") {
  std::size_t compared = 0;
  std::vector<HopfAlgebraData> hs = small_examples();
  hs.push_back(kg(cyclic_group(9), 2));
  hs.push_back(tensor(kg(cyclic_group(4), 2), function_algebra(cyclic_group(4), 2)));
  for (const auto& h : hs) {
    if (!within(h, kRadicalEnumerationCap)) continue;
    ++compared;
    CHECK(radical_enumeration(h) == jacobson_radical(h));
  }
  CHECK(compared >= 15);
}

TEST_CASE("grouplike enumeration examples") {
  for (const auto& g : {cyclic_group(4), klein4(), s3()}) {
    const HopfAlgebraData h = kg(g, 2);
    const GrouplikeSet set = grouplike_enumeration(h);
    REQUIRE(set.elements.size() == g.order);
    for (std::size_t i = 0; i < g.order; ++i)
      CHECK(std::find(set.elements.begin(), set.elements.end(), basis_vector(h, i)) != set.elements.end());
    CHECK_NOTHROW(validate_group(set.table));
  }
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const GrouplikeSet set = grouplike_enumeration(h_delta(p, 0));
    REQUIRE(set.elements.size() == 1);
    CHECK(set.elements[0] == basis_vector(h_delta(p, 0), 0));
  }
  // Characters of kC_2: two when 1 != -1, one in characteristic 2.
  CHECK(grouplike_enumeration(function_algebra(cyclic_group(2), 3)).elements.size() == 2);
  CHECK(grouplike_enumeration(function_algebra(cyclic_group(2), 2)).elements.size() == 1);
  CHECK(grouplike_enumeration(function_algebra(s3(), 5)).elements.size() == 2);
  CHECK_THROWS_AS(grouplike_enumeration(kg(cyclic_group(9), 5)), Error);
}

TEST_CASE("grouplikes are closed under products and sorted") {
  for (const auto& h : small_examples()) {
    if (!within(h, kGrouplikeEnumerationCap)) continue;
    const GrouplikeSet set = grouplike_enumeration(h);
    CHECK(std::is_sorted(set.elements.begin(), set.elements.end()));
    CHECK(set.table.order == set.elements.size());
    for (std::size_t a = 0; a < set.elements.size(); ++a)
      for (std::size_t b = 0; b < set.elements.size(); ++b)
        CHECK(multiply(h, set.elements[a], set.elements[b]) == set.elements[set.table.multiply(a, b)]);
  }
}

TEST_CASE("local dual Chevalley algebras have p-groups of grouplikes") {
  std::size_t checked = 0;
  for (const auto& h : small_examples()) {
    if (!within(h, kGrouplikeEnumerationCap) || !has_local_dual_chevalley(h)) continue;
    ++checked;
    CHECK(is_power_of(grouplike_enumeration(h).elements.size(), h.field.modulus()));
  }
  CHECK(checked >= 8);
}

TEST_CASE("group indicator counts") {
  CHECK(group_indicator_count(cyclic_group(4), 2, 2) == 0);
  CHECK(group_indicator_count(klein4(), 2, 2) == 0);
  for (const auto& g : {cyclic_group(5), s3(), klein4(), heisenberg27()})
    for (std::uint64_t p : {2u, 3u, 7u}) CHECK(group_indicator_count(g, 1, p) == 1);
  CHECK(group_indicator_count(s3(), 2, 5) == 4);
  CHECK(group_indicator_count(s3(), -3, 5) == 3);
  CHECK(group_indicator_count(heisenberg27(), 3, 5) == 2);
}

TEST_CASE("group indicator counts match indicators of group algebras") {
  const std::vector<GroupTable> groups = {cyclic_group(2), cyclic_group(4), klein4(),     cyclic_group(3),
                                          s3(),            cyclic_group(9), heisenberg27(), load_group("c4.json")};
  for (const auto& g : groups)
    for (std::uint64_t p : {2u, 3u, 5u}) {
      const auto r = static_cast<std::int64_t>(2 * p * p);
      const LRSequence seq = indicator_sequence(kg(g, p), -r, r);
      for (std::int64_t n = -r; n <= r; ++n) CHECK(seq.at(n) == group_indicator_count(g, n, p));
    }
}
