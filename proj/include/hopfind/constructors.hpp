#ifndef HOPFIND_CONSTRUCTORS_HPP
#define HOPFIND_CONSTRUCTORS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "hopfind/hopf.hpp"

namespace hopfind {

// Cayley table of a finite group: table[i][j] is the index of g_i g_j.
struct GroupTable {
  std::size_t order = 0;
  std::size_t identity = 0;
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::string> labels;  // optional

  std::size_t multiply(std::size_t a, std::size_t b) const { return table[a][b]; }
  std::size_t inverse(std::size_t a) const;
  // g^n, negative n meaning (g^{-1})^{|n|}.
  std::size_t power(std::size_t g, std::int64_t n) const;
  std::size_t element_order(std::size_t g) const;
};

// Throws Error unless the table is a group (closure, identity, inverses,
// associativity on all triples).
void validate_group(const GroupTable& g);
GroupTable cyclic_group(std::size_t n);
// (a, b) at index a * |H| + b.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

HopfAlgebraData group_algebra(const GroupTable& g, std::uint64_t p);
// The dual of the group algebra; the basis is the indicator functions.
HopfAlgebraData function_algebra(const GroupTable& g, std::uint64_t p);
// k[x]/(x^p - delta x) with x primitive; delta in {0, 1}.
HopfAlgebraData h_delta(std::uint64_t p, int delta);

// Restricted Lie algebra on e_0 .. e_{d-1}:
//   [e_i, e_j]  = sum_k bracket(i, j, k) e_k
//   e_i^{[p]}   = sum_k pmap(i, k) e_k
struct RestrictedLieData {
  PrimeField field;
  std::size_t dim;
  Tensor3 bracket;
  FieldMatrix pmap;
  std::vector<std::string> labels;  // optional
};

// Sparse description with antisymmetry implied: triples (i, j, k, c), i < j.
RestrictedLieData make_lie_data(std::uint64_t p, std::size_t dim,
                                const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::int64_t>>& bracket,
                                const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& pmap);

// Throws Error naming the first failed invariant: antisymmetry, Jacobi
// identity, or [x^{[p]}, y] = (ad x)^p (y) on basis pairs.
void validate_lie(const RestrictedLieData& lie);
Vector lie_bracket(const RestrictedLieData& lie, std::span<const Residue> x, std::span<const Residue> y);

inline constexpr std::uint64_t kRewriteStepCap = 10'000'000;

// u(g) on the restricted PBW basis e_0^{a_0} ... e_{d-1}^{a_{d-1}}, 0 <= a_i < p,
// ordered lexicographically on (a_0, ..., a_{d-1}). The output is validated.
HopfAlgebraData restricted_enveloping(const RestrictedLieData& lie);

}  // namespace hopfind

#endif
