#ifndef HOPFIND_HOPF_HPP
#define HOPFIND_HOPF_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hopfind/linalg.hpp"

namespace hopfind {

// Structure constants of a finite-dimensional Hopf algebra on a fixed basis
// e_0 .. e_{d-1}:
//   e_i e_j   = sum_k mult(i, j, k) e_k
//   1         = sum_k unit[k] e_k
//   Delta(e_k) = sum_{i,j} comult(k, i, j) e_i (x) e_j
//   eps(e_k)  = counit[k]
//   S(e_i)    = sum_j antipode(i, j) e_j        (row i is the image of e_i)
// Only the antipode is stored row-wise; Endomorphism uses the column
// convention.
struct HopfAlgebraData {
  PrimeField field;
  std::size_t dim;
  std::vector<std::string> labels;
  Tensor3 mult;
  Vector unit;
  Tensor3 comult;
  Vector counit;
  FieldMatrix antipode;

  friend bool operator==(const HopfAlgebraData&, const HopfAlgebraData&) = default;
};

// Equality of everything except basis labels.
bool same_structure(const HopfAlgebraData& a, const HopfAlgebraData& b);

// Global dimension cap: 512 unless HOPFIND_DIM_CAP is set.
std::size_t dimension_cap();
void check_dimension(std::size_t dim);

struct AxiomFailure {
  std::string axiom;
  std::vector<std::size_t> indices;  // first violating index tuple
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomFailure> failures;
  bool valid() const { return failures.empty(); }
  bool has_failure(std::string_view axiom) const;
  std::string summary() const;
};

// Throws Error on inconsistent sizes, fields or unreduced entries.
void check_structure(const HopfAlgebraData& h);
// Exhaustive check of every Hopf algebra axiom on all basis index tuples.
ValidationReport validate(const HopfAlgebraData& h);
// Throws Error listing failed axioms when h is not a Hopf algebra.
void require_valid(const HopfAlgebraData& h, std::string_view context);

HopfAlgebraData dual(const HopfAlgebraData& h);
// Basis e_i (x) f_j at index i * dim(b) + j.
HopfAlgebraData tensor(const HopfAlgebraData& a, const HopfAlgebraData& b);
HopfAlgebraData opposite(const HopfAlgebraData& h);
HopfAlgebraData co_opposite(const HopfAlgebraData& h);

// Element-level operations.
Vector basis_vector(const HopfAlgebraData& h, std::size_t i);
Vector multiply(const HopfAlgebraData& h, std::span<const Residue> x, std::span<const Residue> y);
// Delta(v) as a d x d matrix of coefficients on e_i (x) e_j.
FieldMatrix comultiply(const HopfAlgebraData& h, std::span<const Residue> v);
Residue counit_of(const HopfAlgebraData& h, std::span<const Residue> v);
Vector apply_antipode(const HopfAlgebraData& h, std::span<const Residue> v);
Vector power(const HopfAlgebraData& h, std::span<const Residue> x, std::uint64_t n);

bool is_commutative(const HopfAlgebraData& h);
bool is_cocommutative(const HopfAlgebraData& h);
// {x : Delta(x) = x (x) 1 + 1 (x) x}
Subspace primitive_space(const HopfAlgebraData& h);

// A linear map H -> H; column i of the matrix is the image of e_i.
class Endomorphism {
 public:
  explicit Endomorphism(FieldMatrix matrix);
  const FieldMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }
  Vector operator()(std::span<const Residue> v) const { return apply(matrix_, v); }
  Endomorphism then(const Endomorphism& next) const { return Endomorphism(next.matrix_ * matrix_); }
  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  FieldMatrix matrix_;
};

Endomorphism identity_map(const HopfAlgebraData& h);
Endomorphism antipode_map(const HopfAlgebraData& h);
// u o eps, the unit of the convolution algebra.
Endomorphism unit_counit_map(const HopfAlgebraData& h);

// Sparse lists of the nonzero structure constants, built once per algebra.
class StructureView {
 public:
  struct Term {
    std::uint32_t index;
    Residue c;
  };
  struct PairTerm {
    std::uint32_t i, j;
    Residue c;
  };

  explicit StructureView(const HopfAlgebraData& h);

  std::size_t dim() const { return dim_; }
  const PrimeField& field() const { return field_; }
  // e_a e_b
  std::span<const Term> product(std::size_t a, std::size_t b) const {
    return {mult_terms_.data() + mult_offsets_[a * dim_ + b], mult_terms_.data() + mult_offsets_[a * dim_ + b + 1]};
  }
  // Delta(e_k)
  std::span<const PairTerm> coproduct(std::size_t k) const {
    return {comult_terms_.data() + comult_offsets_[k], comult_terms_.data() + comult_offsets_[k + 1]};
  }
  Vector multiply(std::span<const Residue> x, std::span<const Residue> y) const;

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<std::uint32_t> mult_offsets_;
  std::vector<Term> mult_terms_;
  std::vector<std::uint32_t> comult_offsets_;
  std::vector<PairTerm> comult_terms_;
};

// End(H) under f * g = m o (f (x) g) o Delta, with unit u o eps.
class ConvolutionAlgebra {
 public:
  explicit ConvolutionAlgebra(const HopfAlgebraData& h);

  std::size_t dim() const { return view_.dim(); }
  const PrimeField& field() const { return view_.field(); }
  const Endomorphism& unit() const { return unit_; }
  const Endomorphism& identity() const { return identity_; }
  const Endomorphism& antipode() const { return antipode_; }

  Endomorphism convolve(const Endomorphism& f, const Endomorphism& g) const;
  // Convolution inverse, or nullopt when f is not invertible.
  std::optional<Endomorphism> inverse(const Endomorphism& f) const;
  // Square-and-multiply; negative n uses the convolution inverse.
  Endomorphism power(const Endomorphism& f, std::int64_t n) const;

 private:
  StructureView view_;
  Endomorphism unit_;
  Endomorphism identity_;
  Endomorphism antipode_;
};

Endomorphism convolve(const Endomorphism& f, const Endomorphism& g, const HopfAlgebraData& h);
Endomorphism convolution_power(const Endomorphism& f, std::int64_t n, const HopfAlgebraData& h);

// Exact membership tests against canonical subspace bases.
bool subspace_is_subalgebra(const Subspace& v, const HopfAlgebraData& h);
bool subspace_is_ideal(const Subspace& v, const HopfAlgebraData& h);
// Delta(V) in V (x) H + H (x) V and eps(V) = 0.
bool subspace_is_coideal_two_sided(const Subspace& v, const HopfAlgebraData& h);
// m uses the column convention of Endomorphism.
bool subspace_is_stable_under(const FieldMatrix& m, const Subspace& v);
bool subspace_is_hopf_ideal(const Subspace& v, const HopfAlgebraData& h);
// Subalgebra, S-stable and a subcoalgebra.
bool subspace_is_hopf_subalgebra(const Subspace& v, const HopfAlgebraData& h);

// Structure constants of the subalgebra V in its canonical basis. V must be
// closed under multiplication.
Tensor3 restricted_multiplication(const Subspace& v, const HopfAlgebraData& h);
// Structure constants of the quotient coalgebra H / V, basis indexed by the
// free columns of V. V must be a two-sided coideal.
Tensor3 quotient_comultiplication(const Subspace& v, const HopfAlgebraData& h);

}  // namespace hopfind

#endif
