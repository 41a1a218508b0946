#include "hopfind/linalg.hpp"

#include <algorithm>
#include <string>

#include "hopfind/error.hpp"

namespace hopfind {

namespace {

void require_same_field(const PrimeField& a, const PrimeField& b) {
  if (!(a == b)) throw Error("field mismatch: GF(" + std::to_string(a.modulus()) + ") vs GF(" +
                             std::to_string(b.modulus()) + ")");
}

}  // namespace

FieldMatrix FieldMatrix::identity(PrimeField field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FieldMatrix FieldMatrix::from_integers(PrimeField field, std::size_t rows, std::size_t cols,
                                       std::initializer_list<std::int64_t> values) {
  if (values.size() != rows * cols) throw Error("matrix literal has wrong number of entries");
  FieldMatrix m(field, rows, cols);
  std::size_t i = 0;
  for (auto v : values) m.data_[i++] = field.reduce(v);
  return m;
}

FieldMatrix FieldMatrix::from_rows(PrimeField field, std::size_t cols, const std::vector<Vector>& rows) {
  FieldMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c] % field.modulus());
  }
  return m;
}

Vector FieldMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

Residue FieldMatrix::trace() const {
  if (!is_square()) throw Error("trace of a non-square matrix");
  Residue t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t = field_.add(t, at(i, i));
  return t;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) throw Error("matrix product dimension mismatch");
  const auto& f = a.field();
  FieldMatrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto orow = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Residue aik = a.at(i, k);
      if (aik == 0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (brow[j] != 0) orow[j] = f.mul_add(orow[j], aik, brow[j]);
    }
  }
  return out;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix sum dimension mismatch");
  FieldMatrix out(a.field(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.field().add(a.at(r, c), b.at(r, c)));
  return out;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix difference dimension mismatch");
  FieldMatrix out(a.field(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.field().sub(a.at(r, c), b.at(r, c)));
  return out;
}

FieldMatrix scaled(const FieldMatrix& a, Residue s) {
  FieldMatrix out(a.field(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.field().mul(a.at(r, c), s));
  return out;
}

FieldMatrix matrix_power(const FieldMatrix& m, std::uint64_t n) {
  if (!m.is_square()) throw Error("power of a non-square matrix");
  FieldMatrix result = FieldMatrix::identity(m.field(), m.rows());
  FieldMatrix base = m;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

FieldMatrix kronecker(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a.field(), b.field());
  const auto& f = a.field();
  FieldMatrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Residue aij = a.at(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.set(i * b.rows() + k, j * b.cols() + l, f.mul(aij, b.at(k, l)));
    }
  return out;
}

Vector apply(const FieldMatrix& m, std::span<const Residue> v) {
  if (v.size() != m.cols()) throw Error("matrix-vector dimension mismatch");
  const auto& f = m.field();
  Vector out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    Residue acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (row[c] != 0 && v[c] != 0) acc = f.mul_add(acc, row[c], v[c]);
    out[r] = acc;
  }
  return out;
}

Vector apply_row(std::span<const Residue> v, const FieldMatrix& m) {
  if (v.size() != m.rows()) throw Error("vector-matrix dimension mismatch");
  const auto& f = m.field();
  Vector out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r] == 0) continue;
    auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (row[c] != 0) out[c] = f.mul_add(out[c], v[r], row[c]);
  }
  return out;
}

Residue trace_of_product(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw Error("trace of product dimension mismatch");
  const auto& f = a.field();
  Residue t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0) t = f.mul_add(t, a.at(i, j), b.at(j, i));
  return t;
}

std::optional<FieldMatrix> try_inverse(const FieldMatrix& m) {
  if (!m.is_square()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const auto& f = m.field();
  FieldMatrix aug(f, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m.at(r, c));
    aug.set(r, n + r, 1);
  }
  auto red = rref(aug);
  for (std::size_t r = 0; r < n; ++r)
    if (r >= red.pivots.size() || red.pivots[r] != r) return std::nullopt;
  FieldMatrix inv(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, red.form.at(r, n + c));
  return inv;
}

FieldMatrix inverse(const FieldMatrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw Error("matrix is not invertible");
  return *std::move(inv);
}

RowReduction rref(const FieldMatrix& m) {
  const auto& f = m.field();
  FieldMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && a.at(sel, c) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r) {
      auto x = a.row(sel);
      auto y = a.row(r);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    auto prow = a.row(r);
    Residue s = f.inv(prow[c]);
    for (std::size_t k = c; k < a.cols(); ++k) prow[k] = f.mul(prow[k], s);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      auto row = a.row(i);
      Residue factor = row[c];
      if (factor == 0) continue;
      Residue nf = f.neg(factor);
      for (std::size_t k = c; k < a.cols(); ++k)
        if (prow[k] != 0) row[k] = f.mul_add(row[k], nf, prow[k]);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), r, std::move(pivots)};
}

Subspace Subspace::zero(PrimeField field, std::size_t ambient) { return Subspace(FieldMatrix(field, 0, ambient), {}); }

Subspace Subspace::full(PrimeField field, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(FieldMatrix::identity(field, ambient), std::move(piv));
}

Subspace Subspace::span(const FieldMatrix& rows) {
  auto red = rref(rows);
  FieldMatrix basis(rows.field(), red.rank, rows.cols());
  for (std::size_t r = 0; r < red.rank; ++r) {
    auto src = red.form.row(r);
    std::copy(src.begin(), src.end(), basis.row(r).begin());
  }
  return Subspace(std::move(basis), std::move(red.pivots));
}

Subspace Subspace::span(PrimeField field, std::size_t ambient, const std::vector<Vector>& vectors) {
  return span(FieldMatrix::from_rows(field, ambient, vectors));
}

Vector Subspace::basis_vector(std::size_t i) const {
  auto r = basis_.row(i);
  return Vector(r.begin(), r.end());
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    if (k < pivots_.size() && pivots_[k] == c)
      ++k;
    else
      out.push_back(c);
  }
  return out;
}

Vector Subspace::reduce(std::span<const Residue> v) const {
  if (v.size() != ambient_dim()) throw Error("vector length does not match subspace ambient dimension");
  const auto& f = field();
  Vector out(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Residue c = out[pivots_[i]];
    if (c == 0) continue;
    Residue nc = f.neg(c);
    auto row = basis_.row(i);
    for (std::size_t k = pivots_[i]; k < out.size(); ++k)
      if (row[k] != 0) out[k] = f.mul_add(out[k], nc, row[k]);
  }
  return out;
}

bool Subspace::contains(std::span<const Residue> v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Residue x) { return x == 0; });
}

Vector Subspace::coordinates(std::span<const Residue> v) const {
  Vector out(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) out[i] = v[pivots_[i]];
  return out;
}

Vector Subspace::quotient_coordinates(std::span<const Residue> v) const {
  auto r = reduce(v);
  Vector out;
  out.reserve(ambient_dim() - dim());
  for (auto c : free_columns()) out.push_back(r[c]);
  return out;
}

FieldMatrix Subspace::quotient_map() const {
  const auto free = free_columns();
  FieldMatrix q(field(), free.size(), ambient_dim());
  Vector e(ambient_dim(), 0);
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    e[c] = 1;
    auto img = quotient_coordinates(e);
    for (std::size_t r = 0; r < free.size(); ++r) q.set(r, c, img[r]);
    e[c] = 0;
  }
  return q;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (!other.contains(basis_.row(i))) return false;
  return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
  for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
  return Subspace::span(a.field(), a.ambient_dim(), rows);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  // (x, y) with x A = y B  <=>  [A^T | -B^T] (x, y)^T = 0
  const auto& f = a.field();
  const std::size_t n = a.ambient_dim();
  FieldMatrix sys(f, n, a.dim() + b.dim());
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < a.dim(); ++i) sys.set(c, i, a.basis().at(i, c));
    for (std::size_t j = 0; j < b.dim(); ++j) sys.set(c, a.dim() + j, f.neg(b.basis().at(j, c)));
  }
  auto ker = kernel(sys);
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    auto sol = ker.basis_vector(k);
    rows.push_back(apply_row(std::span<const Residue>(sol.data(), a.dim()), a.basis()));
  }
  return Subspace::span(f, n, rows);
}

FieldMatrix complement_basis(const Subspace& outer, const Subspace& inner) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < outer.dim(); ++i) rows.push_back(inner.reduce(outer.basis().row(i)));
  return Subspace::span(outer.field(), outer.ambient_dim(), rows).basis();
}

Subspace kernel(const FieldMatrix& m) {
  const auto& f = m.field();
  auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> rows;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    Vector v(m.cols(), 0);
    v[fc] = 1;
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = f.neg(red.form.at(r, fc));
    rows.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), rows);
}

std::optional<Polynomial> KrylovRelation::push(std::span<const Residue> v) {
  if (v.size() != length_) throw Error("Krylov vector length mismatch");
  const auto& f = field_;
  const std::size_t idx = rows_.size();
  Vector vec(v.begin(), v.end());
  Vector combo(idx + 1, 0);
  combo[idx] = 1;
  for (const auto& row : rows_) {
    Residue c = vec[row.pivot];
    if (c == 0) continue;
    Residue nc = f.neg(c);
    for (std::size_t k = 0; k < length_; ++k)
      if (row.vec[k] != 0) vec[k] = f.mul_add(vec[k], nc, row.vec[k]);
    for (std::size_t k = 0; k < row.combo.size(); ++k)
      if (row.combo[k] != 0) combo[k] = f.mul_add(combo[k], nc, row.combo[k]);
  }
  auto piv = std::find_if(vec.begin(), vec.end(), [](Residue x) { return x != 0; });
  if (piv == vec.end()) return Polynomial(f, std::move(combo));
  std::size_t pivot = static_cast<std::size_t>(piv - vec.begin());
  Residue s = f.inv(vec[pivot]);
  for (auto& x : vec) x = f.mul(x, s);
  for (auto& x : combo) x = f.mul(x, s);
  rows_.push_back({std::move(vec), std::move(combo), pivot});
  return std::nullopt;
}

Polynomial min_poly_matrix(const FieldMatrix& m) {
  if (!m.is_square()) throw Error("minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  KrylovRelation krylov(m.field(), n * n);
  FieldMatrix power = FieldMatrix::identity(m.field(), n);
  for (;;) {
    if (auto rel = krylov.push(power.data())) return *rel;
    power = power * m;
  }
}

FieldMatrix evaluate(const Polynomial& p, const FieldMatrix& m) {
  const std::size_t n = m.rows();
  FieldMatrix acc(m.field(), n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    for (std::size_t k = 0; k < n; ++k) acc.set(k, k, m.field().add(acc.at(k, k), p.coeffs()[i]));
  }
  return acc;
}

}  // namespace hopfind
