#include "hopfind/hopf.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "hopfind/error.hpp"

namespace hopfind {

namespace {

std::string join_indices(const std::vector<std::size_t>& idx) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? ", " : "") << idx[i];
  out << ')';
  return out.str();
}

// Adds c * Delta(e_k) into a flattened d x d accumulator.
void add_coproduct(const StructureView& view, std::size_t k, Residue c, Vector& acc) {
  const auto& f = view.field();
  const std::size_t d = view.dim();
  for (const auto& t : view.coproduct(k)) acc[t.i * d + t.j] = f.mul_add(acc[t.i * d + t.j], c, t.c);
}

}  // namespace

bool same_structure(const HopfAlgebraData& a, const HopfAlgebraData& b) {
  return a.field == b.field && a.dim == b.dim && a.mult == b.mult && a.unit == b.unit && a.comult == b.comult &&
         a.counit == b.counit && a.antipode == b.antipode;
}

std::size_t dimension_cap() {
  if (const char* env = std::getenv("HOPFIND_DIM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 512;
}

void check_dimension(std::size_t dim) {
  if (dim > dimension_cap())
    throw Error("dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(dimension_cap()));
}

bool ValidationReport::has_failure(std::string_view axiom) const {
  return std::any_of(failures.begin(), failures.end(), [&](const AxiomFailure& f) { return f.axiom == axiom; });
}

std::string ValidationReport::summary() const {
  if (valid()) return "valid";
  std::ostringstream out;
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (i) out << "; ";
    out << failures[i].axiom << " fails at " << join_indices(failures[i].indices);
    if (!failures[i].detail.empty()) out << " [" << failures[i].detail << "]";
  }
  return out.str();
}

void check_structure(const HopfAlgebraData& h) {
  const std::size_t d = h.dim;
  if (d == 0) throw Error("Hopf algebra must have positive dimension");
  check_dimension(d);
  auto fail = [](const std::string& what) { throw Error("structure mismatch: " + what); };
  if (!h.labels.empty() && h.labels.size() != d) fail("label count");
  if (h.mult.dim1() != d || h.mult.dim2() != d || h.mult.dim3() != d) fail("mult tensor dimensions");
  if (h.comult.dim1() != d || h.comult.dim2() != d || h.comult.dim3() != d) fail("comult tensor dimensions");
  if (h.unit.size() != d) fail("unit length");
  if (h.counit.size() != d) fail("counit length");
  if (h.antipode.rows() != d || h.antipode.cols() != d) fail("antipode dimensions");
  if (!(h.mult.field() == h.field) || !(h.comult.field() == h.field) || !(h.antipode.field() == h.field))
    fail("field of a component");
  const Residue q = h.field.modulus();
  auto reduced = [q](const Vector& v) { return std::all_of(v.begin(), v.end(), [q](Residue x) { return x < q; }); };
  if (!reduced(h.mult.data()) || !reduced(h.comult.data()) || !reduced(h.unit) || !reduced(h.counit) ||
      !reduced(h.antipode.data()))
    fail("entries must be reduced modulo p");
}

ValidationReport validate(const HopfAlgebraData& h) {
  check_structure(h);
  const auto& f = h.field;
  const std::size_t d = h.dim;
  const StructureView view(h);
  ValidationReport report;
  auto record = [&](std::string axiom, std::vector<std::size_t> idx, std::string detail = {}) {
    report.failures.push_back({std::move(axiom), std::move(idx), std::move(detail)});
  };

  // (e_i e_j) e_k = e_i (e_j e_k)
  [&] {
    Vector lhs(d), rhs(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          std::fill(lhs.begin(), lhs.end(), 0);
          std::fill(rhs.begin(), rhs.end(), 0);
          for (const auto& t : view.product(i, j))
            for (const auto& u : view.product(t.index, k)) lhs[u.index] = f.mul_add(lhs[u.index], t.c, u.c);
          for (const auto& t : view.product(j, k))
            for (const auto& u : view.product(i, t.index)) rhs[u.index] = f.mul_add(rhs[u.index], t.c, u.c);
          if (lhs != rhs) return record("associativity", {i, j, k});
        }
  }();

  [&] {
    for (std::size_t i = 0; i < d; ++i) {
      auto e = basis_vector(h, i);
      if (view.multiply(h.unit, e) != e || view.multiply(e, h.unit) != e) return record("unit law", {i});
    }
  }();

  // (Delta (x) id) Delta = (id (x) Delta) Delta, compared as d^3 tensors.
  [&] {
    Vector lhs(d * d * d), rhs(d * d * d);
    for (std::size_t k = 0; k < d; ++k) {
      std::fill(lhs.begin(), lhs.end(), 0);
      std::fill(rhs.begin(), rhs.end(), 0);
      for (const auto& t : view.coproduct(k)) {
        for (const auto& u : view.coproduct(t.i)) {
          auto& x = lhs[(u.i * d + u.j) * d + t.j];
          x = f.mul_add(x, t.c, u.c);
        }
        for (const auto& u : view.coproduct(t.j)) {
          auto& x = rhs[(t.i * d + u.i) * d + u.j];
          x = f.mul_add(x, t.c, u.c);
        }
      }
      for (std::size_t n = 0; n < lhs.size(); ++n)
        if (lhs[n] != rhs[n]) return record("coassociativity", {k, n / (d * d), (n / d) % d, n % d});
    }
  }();

  [&] {
    for (std::size_t k = 0; k < d; ++k) {
      Vector left(d, 0), right(d, 0);
      for (const auto& t : view.coproduct(k)) {
        left[t.j] = f.mul_add(left[t.j], t.c, h.counit[t.i]);
        right[t.i] = f.mul_add(right[t.i], t.c, h.counit[t.j]);
      }
      auto e = basis_vector(h, k);
      if (left != e || right != e) return record("counit law", {k});
    }
  }();

  // Delta(e_i e_j) = Delta(e_i) Delta(e_j) and Delta(1) = 1 (x) 1.
  [&] {
    Vector lhs(d * d), rhs(d * d);
    std::fill(lhs.begin(), lhs.end(), 0);
    for (std::size_t k = 0; k < d; ++k)
      if (h.unit[k]) add_coproduct(view, k, h.unit[k], lhs);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) rhs[a * d + b] = f.mul(h.unit[a], h.unit[b]);
    if (lhs != rhs) return record("bialgebra compatibility", {}, "Delta(1) != 1 (x) 1");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto& t : view.product(i, j)) add_coproduct(view, t.index, t.c, lhs);
        for (const auto& s : view.coproduct(i))
          for (const auto& t : view.coproduct(j)) {
            Residue c = f.mul(s.c, t.c);
            for (const auto& x : view.product(s.i, t.i))
              for (const auto& y : view.product(s.j, t.j)) {
                auto& z = rhs[x.index * d + y.index];
                z = f.mul_add(z, c, f.mul(x.c, y.c));
              }
          }
        if (lhs != rhs) return record("bialgebra compatibility", {i, j});
      }
  }();

  [&] {
    if (counit_of(h, h.unit) != 1) return record("counit multiplicativity", {}, "eps(1) != 1");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Residue lhs = 0;
        for (const auto& t : view.product(i, j)) lhs = f.mul_add(lhs, t.c, h.counit[t.index]);
        if (lhs != f.mul(h.counit[i], h.counit[j])) return record("counit multiplicativity", {i, j});
      }
  }();

  // m (S (x) id) Delta = u eps = m (id (x) S) Delta
  [&] {
    for (std::size_t k = 0; k < d; ++k) {
      Vector left(d, 0), right(d, 0);
      for (const auto& t : view.coproduct(k)) {
        for (std::size_t a = 0; a < d; ++a) {
          Residue s = h.antipode.at(t.i, a);
          if (s != 0)
            for (const auto& u : view.product(a, t.j)) left[u.index] = f.mul_add(left[u.index], f.mul(t.c, s), u.c);
          Residue s2 = h.antipode.at(t.j, a);
          if (s2 != 0)
            for (const auto& u : view.product(t.i, a)) right[u.index] = f.mul_add(right[u.index], f.mul(t.c, s2), u.c);
        }
      }
      Vector expected(d);
      for (std::size_t m = 0; m < d; ++m) expected[m] = f.mul(h.counit[k], h.unit[m]);
      if (left != expected || right != expected) return record("antipode axiom", {k});
    }
  }();

  return report;
}

void require_valid(const HopfAlgebraData& h, std::string_view context) {
  auto report = validate(h);
  if (!report.valid()) throw Error(std::string(context) + ": " + report.summary());
}

HopfAlgebraData dual(const HopfAlgebraData& h) {
  check_structure(h);
  const std::size_t d = h.dim;
  Tensor3 mult(h.field, d, d, d), comult(h.field, d, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        mult.set(i, j, k, h.comult.at(k, i, j));
        comult.set(k, i, j, h.mult.at(i, j, k));
      }
  std::vector<std::string> labels;
  for (const auto& l : h.labels) labels.push_back(l.ends_with('*') ? l.substr(0, l.size() - 1) : l + "*");
  return {h.field, d, std::move(labels), std::move(mult), h.counit, std::move(comult), h.unit, h.antipode.transpose()};
}

HopfAlgebraData tensor(const HopfAlgebraData& a, const HopfAlgebraData& b) {
  check_structure(a);
  check_structure(b);
  if (!(a.field == b.field)) throw Error("tensor product of Hopf algebras over different fields");
  const auto& f = a.field;
  const std::size_t da = a.dim, db = b.dim, d = da * db;
  check_dimension(d);
  Tensor3 mult(f, d, d, d), comult(f, d, d, d);
  const StructureView va(a), vb(b);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < da; ++k)
      for (const auto& x : va.product(i, k))
        for (std::size_t j = 0; j < db; ++j)
          for (std::size_t l = 0; l < db; ++l)
            for (const auto& y : vb.product(j, l))
              mult.set(i * db + j, k * db + l, x.index * db + y.index, f.mul(x.c, y.c));
  for (std::size_t m = 0; m < da; ++m)
    for (const auto& x : va.coproduct(m))
      for (std::size_t n = 0; n < db; ++n)
        for (const auto& y : vb.coproduct(n)) comult.set(m * db + n, x.i * db + y.i, x.j * db + y.j, f.mul(x.c, y.c));
  Vector unit(d), counit(d);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      unit[i * db + j] = f.mul(a.unit[i], b.unit[j]);
      counit[i * db + j] = f.mul(a.counit[i], b.counit[j]);
      if (!a.labels.empty() && !b.labels.empty()) labels.push_back(a.labels[i] + "|" + b.labels[j]);
    }
  return {f, d, std::move(labels), std::move(mult), std::move(unit), std::move(comult), std::move(counit),
          kronecker(a.antipode, b.antipode)};
}

HopfAlgebraData opposite(const HopfAlgebraData& h) {
  check_structure(h);
  auto s_inv = try_inverse(h.antipode);
  if (!s_inv) throw Error("antipode is not invertible");
  HopfAlgebraData out = h;
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j)
      for (std::size_t k = 0; k < h.dim; ++k) out.mult.set(i, j, k, h.mult.at(j, i, k));
  out.antipode = *std::move(s_inv);
  return out;
}

HopfAlgebraData co_opposite(const HopfAlgebraData& h) {
  check_structure(h);
  auto s_inv = try_inverse(h.antipode);
  if (!s_inv) throw Error("antipode is not invertible");
  HopfAlgebraData out = h;
  for (std::size_t k = 0; k < h.dim; ++k)
    for (std::size_t i = 0; i < h.dim; ++i)
      for (std::size_t j = 0; j < h.dim; ++j) out.comult.set(k, i, j, h.comult.at(k, j, i));
  out.antipode = *std::move(s_inv);
  return out;
}

Vector basis_vector(const HopfAlgebraData& h, std::size_t i) {
  Vector e(h.dim, 0);
  e.at(i) = 1;
  return e;
}

Vector multiply(const HopfAlgebraData& h, std::span<const Residue> x, std::span<const Residue> y) {
  const auto& f = h.field;
  Vector out(h.dim, 0);
  for (std::size_t a = 0; a < h.dim; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < h.dim; ++b) {
      if (y[b] == 0) continue;
      Residue c = f.mul(x[a], y[b]);
      auto fib = h.mult.fiber(a, b);
      for (std::size_t k = 0; k < h.dim; ++k)
        if (fib[k] != 0) out[k] = f.mul_add(out[k], c, fib[k]);
    }
  }
  return out;
}

FieldMatrix comultiply(const HopfAlgebraData& h, std::span<const Residue> v) {
  const auto& f = h.field;
  FieldMatrix out(f, h.dim, h.dim);
  for (std::size_t k = 0; k < h.dim; ++k) {
    if (v[k] == 0) continue;
    for (std::size_t i = 0; i < h.dim; ++i) {
      auto fib = h.comult.fiber(k, i);
      auto row = out.row(i);
      for (std::size_t j = 0; j < h.dim; ++j)
        if (fib[j] != 0) row[j] = f.mul_add(row[j], v[k], fib[j]);
    }
  }
  return out;
}

Residue counit_of(const HopfAlgebraData& h, std::span<const Residue> v) {
  Residue acc = 0;
  for (std::size_t k = 0; k < h.dim; ++k) acc = h.field.mul_add(acc, v[k], h.counit[k]);
  return acc;
}

Vector apply_antipode(const HopfAlgebraData& h, std::span<const Residue> v) { return apply_row(v, h.antipode); }

Vector power(const HopfAlgebraData& h, std::span<const Residue> x, std::uint64_t n) {
  Vector acc = h.unit;
  for (std::uint64_t i = 0; i < n; ++i) acc = multiply(h, acc, x);
  return acc;
}

bool is_commutative(const HopfAlgebraData& h) {
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = i + 1; j < h.dim; ++j)
      for (std::size_t k = 0; k < h.dim; ++k)
        if (h.mult.at(i, j, k) != h.mult.at(j, i, k)) return false;
  return true;
}

bool is_cocommutative(const HopfAlgebraData& h) {
  for (std::size_t k = 0; k < h.dim; ++k)
    for (std::size_t i = 0; i < h.dim; ++i)
      for (std::size_t j = i + 1; j < h.dim; ++j)
        if (h.comult.at(k, i, j) != h.comult.at(k, j, i)) return false;
  return true;
}

Subspace primitive_space(const HopfAlgebraData& h) {
  const auto& f = h.field;
  const std::size_t d = h.dim;
  FieldMatrix m(f, d * d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Residue v = h.comult.at(k, i, j);
        if (i == k) v = f.sub(v, h.unit[j]);
        if (j == k) v = f.sub(v, h.unit[i]);
        m.set(i * d + j, k, v);
      }
  return kernel(m);
}

Endomorphism::Endomorphism(FieldMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw Error("endomorphism matrix must be square");
}

Endomorphism identity_map(const HopfAlgebraData& h) { return Endomorphism(FieldMatrix::identity(h.field, h.dim)); }

Endomorphism antipode_map(const HopfAlgebraData& h) { return Endomorphism(h.antipode.transpose()); }

Endomorphism unit_counit_map(const HopfAlgebraData& h) {
  FieldMatrix m(h.field, h.dim, h.dim);
  for (std::size_t r = 0; r < h.dim; ++r)
    for (std::size_t c = 0; c < h.dim; ++c) m.set(r, c, h.field.mul(h.unit[r], h.counit[c]));
  return Endomorphism(std::move(m));
}

StructureView::StructureView(const HopfAlgebraData& h) : field_(h.field), dim_(h.dim) {
  const std::size_t d = h.dim;
  mult_offsets_.reserve(d * d + 1);
  mult_offsets_.push_back(0);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      auto fib = h.mult.fiber(a, b);
      for (std::size_t k = 0; k < d; ++k)
        if (fib[k] != 0) mult_terms_.push_back({static_cast<std::uint32_t>(k), fib[k]});
      mult_offsets_.push_back(static_cast<std::uint32_t>(mult_terms_.size()));
    }
  comult_offsets_.reserve(d + 1);
  comult_offsets_.push_back(0);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      auto fib = h.comult.fiber(k, i);
      for (std::size_t j = 0; j < d; ++j)
        if (fib[j] != 0)
          comult_terms_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), fib[j]});
    }
    comult_offsets_.push_back(static_cast<std::uint32_t>(comult_terms_.size()));
  }
}

Vector StructureView::multiply(std::span<const Residue> x, std::span<const Residue> y) const {
  const auto& f = field_;
  Vector out(dim_, 0);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (y[b] == 0) continue;
      Residue c = f.mul(x[a], y[b]);
      for (const auto& t : product(a, b)) out[t.index] = f.mul_add(out[t.index], c, t.c);
    }
  }
  return out;
}

ConvolutionAlgebra::ConvolutionAlgebra(const HopfAlgebraData& h)
    : view_(h), unit_(unit_counit_map(h)), identity_(identity_map(h)), antipode_(antipode_map(h)) {}

Endomorphism ConvolutionAlgebra::convolve(const Endomorphism& f, const Endomorphism& g) const {
  const std::size_t d = dim();
  if (f.dim() != d || g.dim() != d) throw Error("convolution dimension mismatch");
  const auto& fld = field();
  struct Entry {
    std::uint32_t row;
    Residue val;
  };
  auto columns = [d](const FieldMatrix& m) {
    std::vector<std::vector<Entry>> cols(d);
    for (std::size_t r = 0; r < d; ++r) {
      auto row = m.row(r);
      for (std::size_t c = 0; c < d; ++c)
        if (row[c] != 0) cols[c].push_back({static_cast<std::uint32_t>(r), row[c]});
    }
    return cols;
  };
  const auto fcols = columns(f.matrix());
  const auto gcols = columns(g.matrix());

  FieldMatrix out(fld, d, d);
  // scratch[a * d + b] accumulates the coefficient of e_a (x) e_b in
  // (f (x) g)(Delta(e_k)) before the multiplication is applied.
  Vector scratch(d * d, 0);
  std::vector<std::uint8_t> seen(d * d, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t k = 0; k < d; ++k) {
    touched.clear();
    for (const auto& t : view_.coproduct(k)) {
      for (const auto& fa : fcols[t.i]) {
        Residue cf = fld.mul(t.c, fa.val);
        for (const auto& gb : gcols[t.j]) {
          std::uint32_t idx = fa.row * static_cast<std::uint32_t>(d) + gb.row;
          scratch[idx] = fld.mul_add(scratch[idx], cf, gb.val);
          if (!seen[idx]) {
            seen[idx] = 1;
            touched.push_back(idx);
          }
        }
      }
    }
    for (auto idx : touched) {
      Residue c = scratch[idx];
      scratch[idx] = 0;
      seen[idx] = 0;
      if (c == 0) continue;
      for (const auto& m : view_.product(idx / d, idx % d)) out.set(m.index, k, fld.mul_add(out.at(m.index, k), c, m.c));
    }
  }
  return Endomorphism(std::move(out));
}

std::optional<Endomorphism> ConvolutionAlgebra::inverse(const Endomorphism& f) const {
  if (f == identity_) return antipode_;
  const auto& fld = field();
  // Minimal polynomial of f in the convolution algebra; f is invertible iff
  // its constant term is nonzero.
  KrylovRelation krylov(fld, dim() * dim());
  std::vector<Endomorphism> powers{unit_};
  std::optional<Polynomial> rel;
  while (!(rel = krylov.push(powers.back().matrix().data()))) powers.push_back(convolve(powers.back(), f));
  if (rel->coeff(0) == 0) return std::nullopt;
  // f^{-1} = -c_0^{-1} (f^{m-1} + c_{m-1} f^{m-2} + ... + c_1)
  FieldMatrix acc(fld, dim(), dim());
  for (int i = 1; i <= rel->degree(); ++i) acc = acc + scaled(powers[i - 1].matrix(), rel->coeff(i));
  return Endomorphism(scaled(acc, fld.neg(fld.inv(rel->coeff(0)))));
}

Endomorphism ConvolutionAlgebra::power(const Endomorphism& f, std::int64_t n) const {
  Endomorphism base = f;
  if (n < 0) {
    auto inv = inverse(f);
    if (!inv) throw Error("endomorphism has no convolution inverse");
    base = *std::move(inv);
  }
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Endomorphism result = unit_;
  while (e > 0) {
    if (e & 1) result = convolve(result, base);
    e >>= 1;
    if (e > 0) base = convolve(base, base);
  }
  return result;
}

Endomorphism convolve(const Endomorphism& f, const Endomorphism& g, const HopfAlgebraData& h) {
  return ConvolutionAlgebra(h).convolve(f, g);
}

Endomorphism convolution_power(const Endomorphism& f, std::int64_t n, const HopfAlgebraData& h) {
  return ConvolutionAlgebra(h).power(f, n);
}

bool subspace_is_subalgebra(const Subspace& v, const HopfAlgebraData& h) {
  if (!v.contains(h.unit)) return false;
  const StructureView view(h);
  for (std::size_t a = 0; a < v.dim(); ++a)
    for (std::size_t b = 0; b < v.dim(); ++b)
      if (!v.contains(view.multiply(v.basis().row(a), v.basis().row(b)))) return false;
  return true;
}

bool subspace_is_ideal(const Subspace& v, const HopfAlgebraData& h) {
  const StructureView view(h);
  for (std::size_t a = 0; a < v.dim(); ++a)
    for (std::size_t i = 0; i < h.dim; ++i) {
      auto e = basis_vector(h, i);
      if (!v.contains(view.multiply(e, v.basis().row(a))) || !v.contains(view.multiply(v.basis().row(a), e)))
        return false;
    }
  return true;
}

bool subspace_is_coideal_two_sided(const Subspace& v, const HopfAlgebraData& h) {
  const FieldMatrix q = v.quotient_map();
  const FieldMatrix qt = q.transpose();
  for (std::size_t a = 0; a < v.dim(); ++a) {
    if (counit_of(h, v.basis().row(a)) != 0) return false;
    if (!(q * comultiply(h, v.basis().row(a)) * qt).is_zero()) return false;
  }
  return true;
}

bool subspace_is_stable_under(const FieldMatrix& m, const Subspace& v) {
  for (std::size_t a = 0; a < v.dim(); ++a)
    if (!v.contains(apply(m, v.basis().row(a)))) return false;
  return true;
}

bool subspace_is_hopf_ideal(const Subspace& v, const HopfAlgebraData& h) {
  return subspace_is_ideal(v, h) && subspace_is_coideal_two_sided(v, h) &&
         subspace_is_stable_under(antipode_map(h).matrix(), v);
}

bool subspace_is_hopf_subalgebra(const Subspace& v, const HopfAlgebraData& h) {
  if (!subspace_is_subalgebra(v, h) || !subspace_is_stable_under(antipode_map(h).matrix(), v)) return false;
  const FieldMatrix q = v.quotient_map();
  const FieldMatrix qt = q.transpose();
  for (std::size_t a = 0; a < v.dim(); ++a) {
    auto c = comultiply(h, v.basis().row(a));
    if (!(q * c).is_zero() || !(c * qt).is_zero()) return false;
  }
  return true;
}

Tensor3 restricted_multiplication(const Subspace& v, const HopfAlgebraData& h) {
  const std::size_t r = v.dim();
  Tensor3 out(h.field, r, r, r);
  const StructureView view(h);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      auto prod = view.multiply(v.basis().row(a), v.basis().row(b));
      if (!v.contains(prod)) throw Error("subspace is not closed under multiplication");
      auto coords = v.coordinates(prod);
      for (std::size_t c = 0; c < r; ++c) out.set(a, b, c, coords[c]);
    }
  return out;
}

Tensor3 quotient_comultiplication(const Subspace& v, const HopfAlgebraData& h) {
  if (!subspace_is_coideal_two_sided(v, h)) throw Error("subspace is not a two-sided coideal");
  const auto free = v.free_columns();
  const std::size_t r = free.size();
  const FieldMatrix q = v.quotient_map();
  const FieldMatrix qt = q.transpose();
  Tensor3 out(h.field, r, r, r);
  for (std::size_t c = 0; c < r; ++c) {
    auto img = q * comultiply(h, basis_vector(h, free[c])) * qt;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) out.set(c, i, j, img.at(i, j));
  }
  return out;
}

}  // namespace hopfind
