#include "hopfind/filtration.hpp"

#include <algorithm>

#include "hopfind/error.hpp"

namespace hopfind {

namespace {

using U64Matrix = std::vector<std::uint64_t>;  // row-major d x d

U64Matrix mul_mod(const U64Matrix& a, const U64Matrix& b, std::size_t d, std::uint64_t m) {
  U64Matrix out(d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const std::uint64_t x = a[i * d + k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < d; ++j) out[i * d + j] = (out[i * d + j] + x * b[k * d + j]) % m;
    }
  return out;
}

// Left multiplication by z: column j holds z e_j.
Vector left_multiplication(const PrimeField& f, const Tensor3& mult, std::span<const Residue> z) {
  const std::size_t d = mult.dim1();
  Vector out(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (z[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      auto fib = mult.fiber(i, j);
      for (std::size_t k = 0; k < d; ++k)
        if (fib[k] != 0) out[k * d + j] = f.mul_add(out[k * d + j], z[i], fib[k]);
    }
  }
  return out;
}

// g_i(z) = (Tr(L^{p^i}) mod p^{i+1}) / p^i, where L is the integer lift of the
// left multiplication by z. On the i-th ideal of the chain this is a linear
// functional over GF(p).
Residue lifted_trace(const PrimeField& f, const Tensor3& mult, std::span<const Residue> z, std::size_t i) {
  const std::size_t d = mult.dim1();
  const std::uint64_t p = f.modulus();
  std::uint64_t pi = 1;
  for (std::size_t t = 0; t < i; ++t) pi *= p;
  const std::uint64_t m = pi * p;
  const Vector l = left_multiplication(f, mult, z);
  U64Matrix base(l.begin(), l.end());
  U64Matrix acc(d * d, 0);
  for (std::size_t r = 0; r < d; ++r) acc[r * d + r] = 1 % m;
  for (std::uint64_t e = pi; e > 0; e >>= 1) {
    if (e & 1) acc = mul_mod(acc, base, d, m);
    if (e > 1) base = mul_mod(base, base, d, m);
  }
  std::uint64_t tr = 0;
  for (std::size_t r = 0; r < d; ++r) tr = (tr + acc[r * d + r]) % m;
  if (tr % pi != 0) throw Error("internal: lifted trace not divisible by p^i");
  return static_cast<Residue>(tr / pi % p);
}

Vector product(const PrimeField& f, const Tensor3& mult, std::span<const Residue> x, std::span<const Residue> y) {
  const std::size_t d = mult.dim1();
  Vector out(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      const Residue c = f.mul(x[i], y[j]);
      auto fib = mult.fiber(i, j);
      for (std::size_t k = 0; k < d; ++k)
        if (fib[k] != 0) out[k] = f.mul_add(out[k], c, fib[k]);
    }
  }
  return out;
}

Subspace span_of_products(const PrimeField& f, const Tensor3& mult, const Subspace& a, const Subspace& b) {
  std::vector<Vector> rows;
  for (std::size_t s = 0; s < a.dim(); ++s)
    for (std::size_t t = 0; t < b.dim(); ++t) rows.push_back(product(f, mult, a.basis().row(s), b.basis().row(t)));
  return Subspace::span(f, mult.dim1(), rows);
}

bool is_local_algebra(const PrimeField& f, const Tensor3& mult) {
  return mult.dim1() - jacobson_radical(f, mult).dim() == 1;
}

}  // namespace

Subspace jacobson_radical(const PrimeField& f, const Tensor3& mult) {
  const std::size_t d = mult.dim1();
  if (mult.dim2() != d || mult.dim3() != d) throw Error("multiplication tensor is not cubic");
  const std::uint64_t p = f.modulus();
  Vector e(d, 0);
  auto unit_vector = [&](std::size_t j) -> const Vector& {
    std::fill(e.begin(), e.end(), 0);
    e[j] = 1;
    return e;
  };

  // I_{-1} = A and I_i = {x in I_{i-1} : g_i(x y) = 0 for all y in A}, for
  // i = 0, 1, ... while p^i <= d.
  Subspace ideal = Subspace::full(f, d);
  std::uint64_t pi = 1;
  for (std::size_t i = 0; pi <= d && ideal.dim() > 0; ++i, pi *= p) {
    const std::size_t r = ideal.dim();
    Vector phi(r);
    for (std::size_t s = 0; s < r; ++s) phi[s] = lifted_trace(f, mult, ideal.basis().row(s), i);
    // Column s of g holds g_i(a_s e_j) over j, expanded through the
    // coordinates of a_s e_j in I_{i-1}.
    FieldMatrix g(f, d, r);
    for (std::size_t s = 0; s < r; ++s)
      for (std::size_t j = 0; j < d; ++j) {
        const Vector prod = product(f, mult, ideal.basis().row(s), unit_vector(j));
        if (!ideal.contains(prod)) throw Error("internal: radical chain term is not a right ideal");
        const Vector coords = ideal.coordinates(prod);
        Residue acc = 0;
        for (std::size_t t = 0; t < r; ++t) acc = f.mul_add(acc, coords[t], phi[t]);
        g.set(j, s, acc);
      }
    const Subspace sol = kernel(g);
    std::vector<Vector> rows;
    for (std::size_t k = 0; k < sol.dim(); ++k) rows.push_back(apply_row(sol.basis().row(k), ideal.basis()));
    ideal = Subspace::span(f, d, rows);
  }

  for (std::size_t s = 0; s < ideal.dim(); ++s)
    for (std::size_t j = 0; j < d; ++j) {
      const auto& y = unit_vector(j);
      if (!ideal.contains(product(f, mult, ideal.basis().row(s), y)) ||
          !ideal.contains(product(f, mult, y, ideal.basis().row(s))))
        throw Error("internal: computed radical is not a two-sided ideal");
    }
  Subspace power = ideal;
  for (std::size_t k = 0; k <= d && power.dim() > 0; ++k) {
    Subspace next = span_of_products(f, mult, power, ideal);
    if (next == power) throw Error("internal: computed radical is not nilpotent");
    power = std::move(next);
  }
  return ideal;
}

Subspace jacobson_radical(const HopfAlgebraData& h) { return jacobson_radical(h.field, h.mult); }

std::string_view to_string(FiltrationKind kind) { return kind == FiltrationKind::coradical ? "coradical" : "jadic"; }

std::vector<std::size_t> Filtration::dims() const {
  std::vector<std::size_t> out;
  for (const auto& s : chain) out.push_back(s.dim());
  return out;
}

Filtration jadic_filtration(const HopfAlgebraData& h) {
  Filtration out{FiltrationKind::jadic, {Subspace::full(h.field, h.dim)}};
  const Subspace j = jacobson_radical(h);
  Subspace power = j;
  while (true) {
    out.chain.push_back(power);
    if (power.dim() == 0) break;
    Subspace next = span_of_products(h.field, h.mult, power, j);
    if (next == power) throw Error("internal: J-adic chain stalled before reaching 0");
    power = std::move(next);
  }
  return out;
}

Subspace coradical(const HopfAlgebraData& h) {
  const Subspace jd = jacobson_radical(dual(h));
  if (jd.dim() == 0) return Subspace::full(h.field, h.dim);
  return kernel(jd.basis());
}

Filtration coradical_filtration(const HopfAlgebraData& h) {
  const auto& f = h.field;
  const std::size_t d = h.dim;
  const StructureView view(h);
  const Subspace h0 = coradical(h);
  Filtration out{FiltrationKind::coradical, {h0}};
  const FieldMatrix q0 = h0.quotient_map();
  while (out.chain.back().dim() < d) {
    const Subspace& prev = out.chain.back();
    const FieldMatrix qp = prev.quotient_map();
    const std::size_t r0 = q0.rows(), rp = qp.rows();
    // Row (a, b) of m evaluates the image of Delta(e_k) in
    // (H / H_0) (x) (H / H_{n-1}).
    FieldMatrix m(f, r0 * rp, d);
    for (std::size_t k = 0; k < d; ++k)
      for (const auto& t : view.coproduct(k))
        for (std::size_t a = 0; a < r0; ++a) {
          const Residue x = q0.at(a, t.i);
          if (x == 0) continue;
          const Residue c = f.mul(x, t.c);
          for (std::size_t b = 0; b < rp; ++b) {
            const Residue y = qp.at(b, t.j);
            if (y != 0) m.set(a * rp + b, k, f.mul_add(m.at(a * rp + b, k), c, y));
          }
        }
    Subspace next = kernel(m);
    if (next.dim() <= prev.dim()) throw Error("internal: coradical filtration stalled below H");
    out.chain.push_back(std::move(next));
  }
  return out;
}

AdaptedBasis adapted_basis(const Filtration& flt) {
  const auto& chain = flt.chain;
  if (chain.empty()) throw Error("empty filtration");
  const PrimeField f = chain.front().field();
  const std::size_t d = chain.front().ambient_dim();
  std::vector<Vector> rows;
  std::vector<std::size_t> degrees;
  auto add_block = [&](const FieldMatrix& block, std::size_t deg) {
    for (std::size_t r = 0; r < block.rows(); ++r) {
      auto row = block.row(r);
      rows.emplace_back(row.begin(), row.end());
      degrees.push_back(deg);
    }
  };
  if (flt.kind == FiltrationKind::coradical) {
    add_block(chain[0].basis(), 0);
    for (std::size_t n = 1; n < chain.size(); ++n) add_block(complement_basis(chain[n], chain[n - 1]), n);
  } else {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) add_block(complement_basis(chain[i], chain[i + 1]), i);
  }
  if (rows.size() != d) throw Error("internal: adapted basis has wrong size");
  return {FieldMatrix::from_rows(f, d, rows), std::move(degrees)};
}

namespace {

// Structure constants of the associated graded object in an adapted basis.
// Each product, coproduct and antipode image keeps only its component of the
// expected degree. Components on the wrong side of the filtration mean the
// filtration is not compatible with the structure.
HopfAlgebraData graded_structure(const HopfAlgebraData& h, const AdaptedBasis& ab, FiltrationKind kind) {
  const auto& f = h.field;
  const std::size_t d = h.dim;
  const FieldMatrix& b = ab.basis;
  const auto& deg = ab.degrees;
  const FieldMatrix binv = inverse(b);
  const FieldMatrix binv_t = binv.transpose();
  const bool ascending = kind == FiltrationKind::coradical;
  // For an ascending filtration lower degrees are harmless, higher ones are not.
  auto violates = [&](std::size_t got, std::size_t want) { return ascending ? got > want : got < want; };
  auto fail = [] { throw Error("filtration not multiplicative/comultiplicative"); };
  const StructureView view(h);

  Tensor3 mult(f, d, d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t s = 0; s < d; ++s) {
      const Vector c = apply_row(view.multiply(b.row(r), b.row(s)), binv);
      for (std::size_t t = 0; t < d; ++t) {
        if (c[t] == 0) continue;
        if (deg[t] == deg[r] + deg[s])
          mult.set(r, s, t, c[t]);
        else if (violates(deg[t], deg[r] + deg[s]))
          fail();
      }
    }

  Tensor3 comult(f, d, d, d);
  for (std::size_t r = 0; r < d; ++r) {
    const FieldMatrix c = binv_t * comultiply(h, b.row(r)) * binv;
    for (std::size_t t = 0; t < d; ++t)
      for (std::size_t u = 0; u < d; ++u) {
        if (c.at(t, u) == 0) continue;
        if (deg[t] + deg[u] == deg[r])
          comult.set(r, t, u, c.at(t, u));
        else if (violates(deg[t] + deg[u], deg[r]))
          fail();
      }
  }

  FieldMatrix antipode(f, d, d);
  for (std::size_t r = 0; r < d; ++r) {
    const Vector c = apply_row(apply_antipode(h, b.row(r)), binv);
    for (std::size_t t = 0; t < d; ++t) {
      if (c[t] == 0) continue;
      if (deg[t] == deg[r])
        antipode.set(r, t, c[t]);
      else if (violates(deg[t], deg[r]))
        fail();
    }
  }

  Vector unit = apply_row(h.unit, binv);
  Vector counit(d, 0);
  for (std::size_t t = 0; t < d; ++t) {
    if (deg[t] != 0) unit[t] = 0;
    if (deg[t] == 0) counit[t] = counit_of(h, b.row(t));
  }

  std::vector<std::string> labels(d);
  for (std::size_t r = 0; r < d; ++r) {
    auto row = b.row(r);
    const auto nz = std::count_if(row.begin(), row.end(), [](Residue x) { return x != 0; });
    const auto at = static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](Residue x) { return x != 0; }) -
                                             row.begin());
    if (nz == 1 && row[at] == 1 && at < h.labels.size())
      labels[r] = h.labels[at];
    else
      labels[r] = "b" + std::to_string(r);
  }
  HopfAlgebraData out{f, d, std::move(labels), std::move(mult), std::move(unit), std::move(comult),
                      std::move(counit), std::move(antipode)};
  const auto report = validate(out);
  if (!report.valid()) throw Error("internal: associated graded structure is invalid: " + report.summary());
  check_grading(out, deg);
  return out;
}

}  // namespace

void check_grading(const HopfAlgebraData& h, const std::vector<std::size_t>& deg) {
  const std::size_t d = h.dim;
  if (deg.size() != d) throw Error("degree array length does not match the dimension");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        if (h.mult.at(i, j, k) != 0 && deg[k] != deg[i] + deg[j])
          throw Error("multiplication is not homogeneous at (" + std::to_string(i) + ", " + std::to_string(j) +
                      ", " + std::to_string(k) + ")");
        if (h.comult.at(k, i, j) != 0 && deg[k] != deg[i] + deg[j])
          throw Error("comultiplication is not homogeneous at (" + std::to_string(k) + ", " + std::to_string(i) +
                      ", " + std::to_string(j) + ")");
      }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (h.antipode.at(i, j) != 0 && deg[i] != deg[j])
        throw Error("antipode does not preserve degree at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < d; ++i)
    if (deg[i] == 0) rows.push_back(basis_vector(h, i));
  if (!subspace_is_hopf_subalgebra(Subspace::span(h.field, d, rows), h))
    throw Error("degree-0 component is not a Hopf subalgebra");
}

GradedHopfAlgebra graded_from_coradical(const HopfAlgebraData& h) {
  const Filtration flt = coradical_filtration(h);
  if (!subspace_is_hopf_subalgebra(flt.chain.front(), h)) throw Error("H_0 not a Hopf subalgebra");
  AdaptedBasis ab = adapted_basis(flt);
  HopfAlgebraData out = graded_structure(h, ab, flt.kind);
  return {std::move(out), std::move(ab.degrees), flt.kind};
}

GradedHopfAlgebra graded_from_jadic(const HopfAlgebraData& h) {
  const Filtration flt = jadic_filtration(h);
  if (!subspace_is_hopf_ideal(flt.chain[1], h)) throw Error("J not a Hopf ideal");
  AdaptedBasis ab = adapted_basis(flt);
  HopfAlgebraData out = graded_structure(h, ab, flt.kind);
  return {std::move(out), std::move(ab.degrees), flt.kind};
}

bool is_local(const HopfAlgebraData& h) { return h.dim - jacobson_radical(h).dim() == 1; }

bool is_connected(const HopfAlgebraData& h) { return coradical(h).dim() == 1; }

bool has_dual_chevalley(const HopfAlgebraData& h) { return subspace_is_hopf_subalgebra(coradical(h), h); }

bool has_chevalley(const HopfAlgebraData& h) { return subspace_is_hopf_ideal(jacobson_radical(h), h); }

bool has_local_dual_chevalley(const HopfAlgebraData& h) {
  const Subspace h0 = coradical(h);
  return subspace_is_hopf_subalgebra(h0, h) && is_local_algebra(h.field, restricted_multiplication(h0, h));
}

namespace {

// H / V is connected iff its dual algebra is local.
bool quotient_is_connected(const Subspace& v, const HopfAlgebraData& h) {
  const Tensor3 c = quotient_comultiplication(v, h);
  const std::size_t r = c.dim1();
  Tensor3 m(h.field, r, r, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) m.set(i, j, k, c.at(k, i, j));
  return is_local_algebra(h.field, m);
}

}  // namespace

bool has_connected_chevalley(const HopfAlgebraData& h) {
  const Subspace j = jacobson_radical(h);
  return subspace_is_hopf_ideal(j, h) && quotient_is_connected(j, h);
}

StructureProfile structure_profile(const HopfAlgebraData& h) {
  StructureProfile s;
  const Subspace j = jacobson_radical(h);
  const Subspace h0 = coradical(h);
  s.dim = h.dim;
  s.radical_dim = j.dim();
  s.coradical_dim = h0.dim();
  s.local = h.dim - j.dim() == 1;
  s.connected = h0.dim() == 1;
  s.dual_chevalley = subspace_is_hopf_subalgebra(h0, h);
  s.chevalley = subspace_is_hopf_ideal(j, h);
  s.local_dual_chevalley = s.dual_chevalley && is_local_algebra(h.field, restricted_multiplication(h0, h));
  s.connected_chevalley = s.chevalley && quotient_is_connected(j, h);
  return s;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace hopfind
