#ifndef HOPFIND_LINALG_HPP
#define HOPFIND_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "hopfind/field.hpp"
#include "hopfind/polynomial.hpp"

namespace hopfind {

// Dense row-major matrix over GF(q). Every entry is a reduced residue.
class FieldMatrix {
 public:
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FieldMatrix identity(PrimeField field, std::size_t n);
  // Row-major integer entries, reduced into the field.
  static FieldMatrix from_integers(PrimeField field, std::size_t rows, std::size_t cols,
                                   std::initializer_list<std::int64_t> values);
  static FieldMatrix from_rows(PrimeField field, std::size_t cols, const std::vector<Vector>& rows);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Residue v) { data_[r * cols_ + c] = v; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  const Vector& data() const { return data_; }

  bool is_zero() const;
  Residue trace() const;
  FieldMatrix transpose() const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  Vector data_;
};

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix scaled(const FieldMatrix& a, Residue s);
FieldMatrix matrix_power(const FieldMatrix& m, std::uint64_t n);
// Kronecker product; row index (i, k) maps to i * b.rows() + k.
FieldMatrix kronecker(const FieldMatrix& a, const FieldMatrix& b);
// M * v for a column vector v.
Vector apply(const FieldMatrix& m, std::span<const Residue> v);
// v * M for a row vector v.
Vector apply_row(std::span<const Residue> v, const FieldMatrix& m);
// Trace of a * b without forming the product.
Residue trace_of_product(const FieldMatrix& a, const FieldMatrix& b);
std::optional<FieldMatrix> try_inverse(const FieldMatrix& m);
// Throws Error when m is singular.
FieldMatrix inverse(const FieldMatrix& m);

// Dense 3-index tensor c[i][j][k] over GF(q).
class Tensor3 {
 public:
  Tensor3(PrimeField field, std::size_t d1, std::size_t d2, std::size_t d3)
      : field_(field), d1_(d1), d2_(d2), d3_(d3), data_(d1 * d2 * d3, 0) {}

  const PrimeField& field() const { return field_; }
  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }
  std::size_t dim3() const { return d3_; }
  Residue at(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * d2_ + j) * d3_ + k]; }
  void set(std::size_t i, std::size_t j, std::size_t k, Residue v) { data_[(i * d2_ + j) * d3_ + k] = v; }
  // Contiguous fiber c[i][j][*].
  std::span<const Residue> fiber(std::size_t i, std::size_t j) const {
    return {data_.data() + (i * d2_ + j) * d3_, d3_};
  }
  const Vector& data() const { return data_; }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  PrimeField field_;
  std::size_t d1_, d2_, d3_;
  Vector data_;
};

struct RowReduction {
  FieldMatrix form;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

// Reduced row-echelon form; pivot is the first nonzero column, rows top-down.
RowReduction rref(const FieldMatrix& m);

// A subspace of GF(q)^n stored by its canonical reduced row-echelon basis,
// so two subspaces are equal exactly when their bases are equal.
class Subspace {
 public:
  static Subspace zero(PrimeField field, std::size_t ambient);
  static Subspace full(PrimeField field, std::size_t ambient);
  static Subspace span(const FieldMatrix& rows);
  static Subspace span(PrimeField field, std::size_t ambient, const std::vector<Vector>& vectors);

  const PrimeField& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const FieldMatrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Columns that are not pivots; they index coordinates on the quotient.
  std::vector<std::size_t> free_columns() const;

  // v minus its projection onto this subspace along the free coordinates;
  // the result vanishes on every pivot column.
  Vector reduce(std::span<const Residue> v) const;
  bool contains(std::span<const Residue> v) const;
  // Coordinates of v in the canonical basis. v must lie in the subspace.
  Vector coordinates(std::span<const Residue> v) const;
  // Image of v in ambient / this, in coordinates indexed by free_columns().
  Vector quotient_coordinates(std::span<const Residue> v) const;
  // Matrix of the quotient map (codim x ambient).
  FieldMatrix quotient_map() const;

  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(FieldMatrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  FieldMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
// Canonical complement of `inner` inside `outer` (inner must be contained in
// outer): the row-reduced residues of outer's basis modulo inner.
FieldMatrix complement_basis(const Subspace& outer, const Subspace& inner);

// {v : M v = 0}.
Subspace kernel(const FieldMatrix& m);

// Incremental linear-dependence detector for a sequence v_0, v_1, ... of
// vectors. push() returns the monic relation v_m + c_{m-1} v_{m-1} + ... +
// c_0 v_0 = 0 the first time the new vector depends on its predecessors.
class KrylovRelation {
 public:
  KrylovRelation(PrimeField field, std::size_t length) : field_(field), length_(length) {}
  std::optional<Polynomial> push(std::span<const Residue> v);
  std::size_t count() const { return rows_.size(); }

 private:
  struct Row {
    Vector vec;
    Vector combo;  // expression of vec in terms of v_0..v_k
    std::size_t pivot;
  };
  PrimeField field_;
  std::size_t length_;
  std::vector<Row> rows_;
};

// Monic minimal polynomial of a square matrix, by Krylov iteration on the
// powers I, M, M^2, ... viewed as vectors in the full matrix space.
Polynomial min_poly_matrix(const FieldMatrix& m);

// p(M) for a polynomial p.
FieldMatrix evaluate(const Polynomial& p, const FieldMatrix& m);

}  // namespace hopfind

#endif
