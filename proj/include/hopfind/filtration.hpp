#ifndef HOPFIND_FILTRATION_HPP
#define HOPFIND_FILTRATION_HPP

#include <string_view>
#include <vector>

#include "hopfind/hopf.hpp"

namespace hopfind {

// Jacobson radical of the (not necessarily unital) associative algebra with
// e_i e_j = sum_k mult(i, j, k) e_k over a prime field. The result is checked
// to be a nilpotent two-sided ideal.
Subspace jacobson_radical(const PrimeField& field, const Tensor3& mult);
Subspace jacobson_radical(const HopfAlgebraData& h);

enum class FiltrationKind { coradical, jadic };
std::string_view to_string(FiltrationKind kind);

// Coradical chains ascend H_0 c H_1 c ... c H_m = H; J-adic chains descend
// H = J^0 > J > ... > J^m = 0. Both stop at the first repeated term.
struct Filtration {
  FiltrationKind kind;
  std::vector<Subspace> chain;

  std::vector<std::size_t> dims() const;
};

Filtration jadic_filtration(const HopfAlgebraData& h);
// Annihilator of J(H*) under the evaluation pairing.
Subspace coradical(const HopfAlgebraData& h);
Filtration coradical_filtration(const HopfAlgebraData& h);

// Basis adapted to a filtration (rows, in the original coordinates) with the
// degree of each row: block n of a coradical chain completes H_{n-1} to H_n,
// block i of a J-adic chain completes J^{i+1} to J^i. Rows are sorted by
// degree.
struct AdaptedBasis {
  FieldMatrix basis;
  std::vector<std::size_t> degrees;
};
AdaptedBasis adapted_basis(const Filtration& f);

struct GradedHopfAlgebra {
  HopfAlgebraData base;
  std::vector<std::size_t> degrees;
  FiltrationKind source;
};

// Throws Error if a structure constant is not homogeneous or the degree-0
// part is not a Hopf subalgebra.
void check_grading(const HopfAlgebraData& h, const std::vector<std::size_t>& degrees);

GradedHopfAlgebra graded_from_coradical(const HopfAlgebraData& h);
GradedHopfAlgebra graded_from_jadic(const HopfAlgebraData& h);

bool is_local(const HopfAlgebraData& h);
bool is_connected(const HopfAlgebraData& h);
bool has_dual_chevalley(const HopfAlgebraData& h);
bool has_chevalley(const HopfAlgebraData& h);
bool has_local_dual_chevalley(const HopfAlgebraData& h);
bool has_connected_chevalley(const HopfAlgebraData& h);

// All of the above from one radical and one coradical computation.
struct StructureProfile {
  std::size_t dim = 0;
  std::size_t radical_dim = 0;
  std::size_t coradical_dim = 0;
  bool local = false;
  bool connected = false;
  bool dual_chevalley = false;
  bool chevalley = false;
  bool local_dual_chevalley = false;
  bool connected_chevalley = false;
};
StructureProfile structure_profile(const HopfAlgebraData& h);

// True iff n = p^k for some k >= 0.
bool is_power_of(std::uint64_t n, std::uint64_t p);

}  // namespace hopfind

#endif
