#include "hopfind/oracle.hpp"

#include <algorithm>
#include <map>

#include "hopfind/error.hpp"

namespace hopfind {

namespace {

std::uint64_t checked_count(std::uint64_t p, std::size_t d, std::uint64_t cap, const char* what) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    n *= p;
    if (n > cap) throw Error(std::string(what) + ": p^dim exceeds the enumeration cap");
  }
  return n;
}

Vector element_at(std::uint64_t t, std::uint64_t p, std::size_t d) {
  Vector v(d);
  for (std::size_t i = 0; i < d; ++i) {
    v[i] = static_cast<Residue>(t % p);
    t /= p;
  }
  return v;
}

std::uint64_t index_of(const Vector& v, std::uint64_t p) {
  std::uint64_t t = 0;
  for (std::size_t i = v.size(); i-- > 0;) t = t * p + v[i];
  return t;
}

Vector dense_product(const PrimeField& f, const Tensor3& mult, const Vector& x, const Vector& y) {
  const std::size_t d = x.size();
  Vector out(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      const Residue c = f.mul(x[i], y[j]);
      for (std::size_t k = 0; k < d; ++k) out[k] = f.add(out[k], f.mul(c, mult.at(i, j, k)));
    }
  }
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

bool nilpotent_element(const PrimeField& f, const Tensor3& mult, const Vector& x) {
  // x^(2^k) for 2^k >= d
  Vector pw = x;
  for (std::size_t k = 1; k < x.size() && !is_zero(pw); k *= 2) pw = dense_product(f, mult, pw, pw);
  return is_zero(pw);
}

Subspace generated_ideal(const PrimeField& f, const Tensor3& mult, const Vector& x) {
  const std::size_t d = x.size();
  std::vector<Vector> found{x};
  Subspace v = Subspace::span(f, d, found);
  for (std::size_t next = 0; next < found.size() && v.dim() < d; ++next) {
    for (std::size_t i = 0; i < d; ++i) {
      Vector e(d, 0);
      e[i] = 1;
      for (auto w : {dense_product(f, mult, e, found[next]), dense_product(f, mult, found[next], e)}) {
        if (v.contains(w)) continue;
        found.push_back(w);
        v = Subspace::span(f, d, found);
      }
    }
  }
  return v;
}

bool nilpotent_ideal(const PrimeField& f, const Tensor3& mult, const Subspace& v) {
  const std::size_t d = v.ambient_dim();
  Subspace w = v;
  while (w.dim() > 0) {
    std::vector<Vector> rows;
    for (std::size_t a = 0; a < w.dim(); ++a)
      for (std::size_t b = 0; b < v.dim(); ++b) {
        auto x = w.basis().row(a), y = v.basis().row(b);
        rows.push_back(dense_product(f, mult, Vector(x.begin(), x.end()), Vector(y.begin(), y.end())));
      }
    Subspace next = Subspace::span(f, d, rows);
    if (next == w) return false;
    w = std::move(next);
  }
  return true;
}

}  // namespace

Vector sweedler_bruteforce(const HopfAlgebraData& h, std::span<const Residue> v, std::int64_t m) {
  if (m > kBruteforceSweedlerCap || m < -kBruteforceSweedlerCap)
    throw Error("sweedler_bruteforce supports |m| <= " + std::to_string(kBruteforceSweedlerCap));
  const auto& f = h.field;
  const std::size_t d = h.dim;
  if (v.size() != d) throw Error("vector length does not match the dimension");
  if (m == 0) {
    Residue e = 0;
    for (std::size_t k = 0; k < d; ++k) e = f.add(e, f.mul(v[k], h.counit[k]));
    Vector out(d);
    for (std::size_t k = 0; k < d; ++k) out[k] = f.mul(e, h.unit[k]);
    return out;
  }
  const bool twist = m < 0;
  const auto legs = static_cast<std::size_t>(twist ? -m : m);
  auto leg = [&](std::size_t i) {
    Vector e(d, 0);
    if (!twist) {
      e[i] = 1;
    } else {
      for (std::size_t j = 0; j < d; ++j) e[j] = h.antipode.at(i, j);
    }
    return e;
  };
  // fold[a][i] = e_a * leg(i), tabulated once.
  std::vector<std::vector<Vector>> fold(d, std::vector<Vector>(d));
  for (std::size_t a = 0; a < d; ++a) {
    Vector prefix(d, 0);
    prefix[a] = 1;
    for (std::size_t i = 0; i < d; ++i) fold[a][i] = dense_product(f, h.mult, prefix, leg(i));
  }
  // state[a][b]: coefficient of (product of the finished legs = e_a) (x) (open leg e_b).
  // Finished legs are multiplied out as soon as they are split off, which
  // keeps the state d x d instead of d^m.
  std::vector<Vector> state(d, Vector(d, 0));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) state[a][b] = f.mul(h.unit[a], v[b]);
  for (std::size_t step = 1; step < legs; ++step) {
    std::vector<Vector> next(d, Vector(d, 0));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        if (state[a][b] == 0) continue;
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            const Residue c = f.mul(state[a][b], h.comult.at(b, i, j));
            if (c == 0) continue;
            const Vector& folded = fold[a][i];
            for (std::size_t k = 0; k < d; ++k) next[k][j] = f.add(next[k][j], f.mul(c, folded[k]));
          }
      }
    state = std::move(next);
  }
  Vector out(d, 0);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (state[a][b] == 0) continue;
      for (std::size_t k = 0; k < d; ++k) out[k] = f.add(out[k], f.mul(state[a][b], fold[a][b][k]));
    }
  return out;
}

Subspace radical_enumeration(const PrimeField& f, const Tensor3& mult) {
  const std::size_t d = mult.dim1();
  const std::uint64_t p = f.modulus();
  const std::uint64_t total = checked_count(p, d, kRadicalEnumerationCap, "radical_enumeration");
  // known[t]: element t lies in an ideal already shown to be nilpotent, so its
  // own ideal is nilpotent too. A non-nilpotent element never qualifies.
  std::vector<bool> known(total, false);
  std::vector<Vector> members;
  for (std::uint64_t t = 0; t < total; ++t) {
    const Vector x = element_at(t, p, d);
    bool in = known[t];
    if (!in && nilpotent_element(f, mult, x)) {
      const Subspace ideal = generated_ideal(f, mult, x);
      if (nilpotent_ideal(f, mult, ideal)) {
        in = true;
        const std::uint64_t size = checked_count(p, ideal.dim(), total, "radical_enumeration");
        for (std::uint64_t s = 0; s < size; ++s)
          known[index_of(apply_row(element_at(s, p, ideal.dim()), ideal.basis()), p)] = true;
      }
    }
    if (in) members.push_back(x);
  }
  const Subspace j = Subspace::span(f, d, members);
  if (checked_count(p, j.dim(), total, "radical_enumeration") != members.size())
    throw Error("internal: enumerated radical is not a linear subspace");
  return j;
}

Subspace radical_enumeration(const HopfAlgebraData& h) { return radical_enumeration(h.field, h.mult); }

GrouplikeSet grouplike_enumeration(const HopfAlgebraData& h) {
  const auto& f = h.field;
  const std::size_t d = h.dim;
  const std::uint64_t p = f.modulus();
  const std::uint64_t total = checked_count(p, d, kGrouplikeEnumerationCap, "grouplike_enumeration");
  GrouplikeSet out;
  for (std::uint64_t t = 0; t < total; ++t) {
    const Vector v = element_at(t, p, d);
    Residue e = 0;
    for (std::size_t k = 0; k < d; ++k) e = f.add(e, f.mul(v[k], h.counit[k]));
    if (e != 1) continue;
    bool grouplike = true;
    for (std::size_t i = 0; i < d && grouplike; ++i)
      for (std::size_t j = 0; j < d && grouplike; ++j) {
        Residue c = 0;
        for (std::size_t k = 0; k < d; ++k) c = f.add(c, f.mul(v[k], h.comult.at(k, i, j)));
        grouplike = c == f.mul(v[i], v[j]);
      }
    if (grouplike) out.elements.push_back(v);
  }
  std::sort(out.elements.begin(), out.elements.end());
  std::map<Vector, std::size_t> index;
  for (std::size_t i = 0; i < out.elements.size(); ++i) index[out.elements[i]] = i;
  const std::size_t n = out.elements.size();
  out.table.order = n;
  auto unit = index.find(h.unit);
  if (unit == index.end()) throw Error("internal: the unit is not grouplike");
  out.table.identity = unit->second;
  out.table.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(dense_product(f, h.mult, out.elements[a], out.elements[b]));
      if (it == index.end()) throw Error("internal: grouplikes not closed under multiplication");
      out.table.table[a][b] = it->second;
    }
  validate_group(out.table);
  return out;
}

Residue group_indicator_count(const GroupTable& g, std::int64_t n, std::uint64_t p) {
  const PrimeField f(p);
  std::uint64_t count = 0;
  for (std::size_t x = 0; x < g.order; ++x)
    if (g.power(x, n) == g.identity) ++count;
  return static_cast<Residue>(count % f.modulus());
}

}  // namespace hopfind
