#include "hopfind/constructors.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_map>

#include "hopfind/error.hpp"

namespace hopfind {

std::size_t GroupTable::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < order; ++b)
    if (table[a][b] == identity) return b;
  throw Error("group element has no inverse");
}

std::size_t GroupTable::power(std::size_t g, std::int64_t n) const {
  std::size_t base = n < 0 ? inverse(g) : g;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  std::size_t acc = identity;
  for (std::uint64_t i = 0; i < e; ++i) acc = table[acc][base];
  return acc;
}

std::size_t GroupTable::element_order(std::size_t g) const {
  std::size_t acc = g, n = 1;
  while (acc != identity) {
    acc = table[acc][g];
    ++n;
  }
  return n;
}

void validate_group(const GroupTable& g) {
  const std::size_t n = g.order;
  if (n == 0) throw Error("group must be nonempty");
  if (g.identity >= n) throw Error("identity index out of range");
  if (g.table.size() != n) throw Error("Cayley table has wrong number of rows");
  if (!g.labels.empty() && g.labels.size() != n) throw Error("group label count mismatch");
  for (std::size_t a = 0; a < n; ++a) {
    if (g.table[a].size() != n) throw Error("Cayley table row " + std::to_string(a) + " has wrong length");
    for (auto x : g.table[a])
      if (x >= n) throw Error("Cayley table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (g.table[g.identity][a] != a || g.table[a][g.identity] != a)
      throw Error("identity law fails at element " + std::to_string(a));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      row[g.table[a][b]] = true;
      col[g.table[b][a]] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() || std::find(col.begin(), col.end(), false) != col.end())
      throw Error("Cayley table row/column " + std::to_string(a) + " is not a permutation");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          throw Error("associativity fails at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                      std::to_string(c) + ")");
}

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw Error("cyclic group of order 0");
  GroupTable g;
  g.order = n;
  g.identity = 0;
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
    g.labels.push_back(a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a));
  }
  return g;
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  GroupTable out;
  out.order = g.order * h.order;
  out.identity = g.identity * h.order + h.identity;
  out.table.assign(out.order, std::vector<std::size_t>(out.order));
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < h.order; ++b) {
      for (std::size_t c = 0; c < g.order; ++c)
        for (std::size_t d = 0; d < h.order; ++d)
          out.table[a * h.order + b][c * h.order + d] = g.table[a][c] * h.order + h.table[b][d];
      std::string la = g.labels.empty() ? std::to_string(a) : g.labels[a];
      std::string lb = h.labels.empty() ? std::to_string(b) : h.labels[b];
      out.labels.push_back("(" + la + "," + lb + ")");
    }
  return out;
}

HopfAlgebraData group_algebra(const GroupTable& g, std::uint64_t p) {
  validate_group(g);
  check_dimension(g.order);
  PrimeField field(p);
  const std::size_t n = g.order;
  Tensor3 mult(field, n, n, n), comult(field, n, n, n);
  FieldMatrix antipode(field, n, n);
  Vector unit(n, 0), counit(n, 1);
  unit[g.identity] = 1;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult.set(a, b, g.table[a][b], 1);
    comult.set(a, a, a, 1);
    antipode.set(a, g.inverse(a), 1);
  }
  std::vector<std::string> labels = g.labels;
  if (labels.empty())
    for (std::size_t a = 0; a < n; ++a) labels.push_back("g" + std::to_string(a));
  HopfAlgebraData h{field, n, std::move(labels), std::move(mult), std::move(unit), std::move(comult),
                    std::move(counit), std::move(antipode)};
  require_valid(h, "group_algebra");
  return h;
}

HopfAlgebraData function_algebra(const GroupTable& g, std::uint64_t p) {
  HopfAlgebraData h = dual(group_algebra(g, p));
  for (auto& l : h.labels) l = "d[" + l.substr(0, l.size() - 1) + "]";
  return h;
}

HopfAlgebraData h_delta(std::uint64_t p, int delta) {
  if (delta != 0 && delta != 1) throw Error("h_delta expects delta in {0, 1}");
  PrimeField field(p);
  const std::size_t n = static_cast<std::size_t>(p);
  check_dimension(n);
  Tensor3 mult(field, n, n, n), comult(field, n, n, n);
  FieldMatrix antipode(field, n, n);
  Vector unit(n, 0), counit(n, 0);
  unit[0] = 1;
  counit[0] = 1;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a + b < n)
        mult.set(a, b, a + b, 1);
      else if (delta == 1)
        mult.set(a, b, a + b - n + 1, 1);  // x^p = x
    }
  // Delta(x^k) = (x (x) 1 + 1 (x) x)^k, binomials by Pascal's rule mod p.
  std::vector<Vector> binom(n, Vector(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    binom[k][0] = 1;
    for (std::size_t j = 1; j <= k; ++j) binom[k][j] = field.add(binom[k - 1][j - 1], binom[k - 1][j]);
    for (std::size_t j = 0; j <= k; ++j) comult.set(k, j, k - j, binom[k][j]);
    antipode.set(k, k, k % 2 == 0 ? 1 : field.neg(1));
  }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(k == 0 ? "1" : k == 1 ? "x" : "x^" + std::to_string(k));
  HopfAlgebraData h{field, n, std::move(labels), std::move(mult), std::move(unit), std::move(comult),
                    std::move(counit), std::move(antipode)};
  require_valid(h, "h_delta");
  return h;
}

RestrictedLieData make_lie_data(std::uint64_t p, std::size_t dim,
                                const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::int64_t>>& bracket,
                                const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& pmap) {
  PrimeField field(p);
  RestrictedLieData lie{field, dim, Tensor3(field, dim, dim, dim), FieldMatrix(field, dim, dim), {}};
  for (const auto& [i, j, k, c] : bracket) {
    if (i >= dim || j >= dim || k >= dim) throw Error("bracket index out of range");
    if (i >= j) throw Error("bracket triples must have i < j");
    lie.bracket.set(i, j, k, field.add(lie.bracket.at(i, j, k), field.reduce(c)));
    lie.bracket.set(j, i, k, field.neg(lie.bracket.at(i, j, k)));
  }
  for (const auto& [i, k, c] : pmap) {
    if (i >= dim || k >= dim) throw Error("p-map index out of range");
    lie.pmap.set(i, k, field.add(lie.pmap.at(i, k), field.reduce(c)));
  }
  return lie;
}

Vector lie_bracket(const RestrictedLieData& lie, std::span<const Residue> x, std::span<const Residue> y) {
  const auto& f = lie.field;
  Vector out(lie.dim, 0);
  for (std::size_t i = 0; i < lie.dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < lie.dim; ++j) {
      if (y[j] == 0) continue;
      Residue c = f.mul(x[i], y[j]);
      auto fib = lie.bracket.fiber(i, j);
      for (std::size_t k = 0; k < lie.dim; ++k)
        if (fib[k] != 0) out[k] = f.mul_add(out[k], c, fib[k]);
    }
  }
  return out;
}

void validate_lie(const RestrictedLieData& lie) {
  const std::size_t d = lie.dim;
  const auto& f = lie.field;
  if (d == 0) throw Error("Lie algebra must have positive dimension");
  if (lie.bracket.dim1() != d || lie.bracket.dim2() != d || lie.bracket.dim3() != d || lie.pmap.rows() != d ||
      lie.pmap.cols() != d)
    throw Error("Lie data dimension mismatch");
  if (!(lie.bracket.field() == f) || !(lie.pmap.field() == f)) throw Error("Lie data field mismatch");
  if (!lie.labels.empty() && lie.labels.size() != d) throw Error("Lie label count mismatch");
  auto e = [d](std::size_t i) {
    Vector v(d, 0);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (lie.bracket.at(i, j, k) != f.neg(lie.bracket.at(j, i, k)) || (i == j && lie.bracket.at(i, i, k) != 0))
          throw Error("antisymmetry fails at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        auto a = lie_bracket(lie, e(i), lie_bracket(lie, e(j), e(k)));
        auto b = lie_bracket(lie, e(j), lie_bracket(lie, e(k), e(i)));
        auto c = lie_bracket(lie, e(k), lie_bracket(lie, e(i), e(j)));
        for (std::size_t m = 0; m < d; ++m)
          if (f.add(f.add(a[m], b[m]), c[m]) != 0)
            throw Error("Jacobi identity fails at (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                        std::to_string(k) + ")");
      }
  const std::uint64_t p = f.modulus();
  for (std::size_t i = 0; i < d; ++i) {
    auto xp = lie.pmap.row(i);
    for (std::size_t j = 0; j < d; ++j) {
      Vector ad = e(j);
      for (std::uint64_t t = 0; t < p; ++t) ad = lie_bracket(lie, e(i), ad);
      if (lie_bracket(lie, xp, e(j)) != ad)
        throw Error("restrictedness [x^[p], y] = (ad x)^p y fails at (" + std::to_string(i) + ", " +
                    std::to_string(j) + ")");
    }
  }
}

namespace {

// Normal forms of words in the generators under
//   e_a e_b -> e_b e_a + [e_a, e_b]   (a > b)
//   e_a^p   -> e_a^{[p]}
// memoized per word. A word is a string of generator indices.
class PbwRewriter {
 public:
  explicit PbwRewriter(const RestrictedLieData& lie) : lie_(lie), p_(lie.field.modulus()) {
    size_ = 1;
    for (std::size_t i = 0; i < lie.dim; ++i) size_ *= p_;
  }

  std::size_t size() const { return size_; }

  std::size_t index_of_sorted(std::string_view w) const {
    std::vector<std::size_t> exps(lie_.dim, 0);
    for (char c : w) ++exps[static_cast<unsigned char>(c)];
    std::size_t idx = 0;
    for (auto a : exps) idx = idx * p_ + a;
    return idx;
  }

  std::string word_of(std::size_t idx) const {
    std::vector<std::size_t> exps(lie_.dim);
    for (std::size_t i = lie_.dim; i-- > 0;) {
      exps[i] = idx % p_;
      idx /= p_;
    }
    std::string w;
    for (std::size_t i = 0; i < lie_.dim; ++i) w.append(exps[i], static_cast<char>(i));
    return w;
  }

  const Vector& normal_form(const std::string& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    if (++steps_ > kRewriteStepCap) throw Error("internal: PBW rewriting exceeded step cap");
    const auto& f = lie_.field;
    Vector out(size_, 0);
    bool rewritten = false;
    for (std::size_t t = 0; t < w.size() && !rewritten; ++t) {
      const auto a = static_cast<unsigned char>(w[t]);
      if (t + 1 < w.size() && a > static_cast<unsigned char>(w[t + 1])) {
        const auto b = static_cast<unsigned char>(w[t + 1]);
        std::string swapped = w;
        std::swap(swapped[t], swapped[t + 1]);
        accumulate(out, normal_form(swapped), 1);
        auto fib = lie_.bracket.fiber(a, b);
        for (std::size_t k = 0; k < lie_.dim; ++k)
          if (fib[k] != 0) accumulate(out, normal_form(splice(w, t, 2, k)), fib[k]);
        rewritten = true;
      } else if (t + p_ <= w.size() &&
                 std::all_of(w.begin() + t, w.begin() + t + p_, [&](char c) { return c == w[t]; })) {
        auto row = lie_.pmap.row(a);
        for (std::size_t k = 0; k < lie_.dim; ++k)
          if (row[k] != 0) accumulate(out, normal_form(splice(w, t, p_, k)), row[k]);
        rewritten = true;
      }
    }
    if (!rewritten) out[index_of_sorted(w)] = 1 % f.modulus();
    return memo_.emplace(w, std::move(out)).first->second;
  }

 private:
  static std::string splice(const std::string& w, std::size_t at, std::size_t len, std::size_t gen) {
    return w.substr(0, at) + static_cast<char>(gen) + w.substr(at + len);
  }
  void accumulate(Vector& out, const Vector& v, Residue c) const {
    for (std::size_t i = 0; i < out.size(); ++i)
      if (v[i] != 0) out[i] = lie_.field.mul_add(out[i], c, v[i]);
  }

  const RestrictedLieData& lie_;
  std::size_t p_;
  std::size_t size_;
  std::uint64_t steps_ = 0;
  std::unordered_map<std::string, Vector> memo_;
};

std::string monomial_label(const std::vector<std::string>& gens, const std::string& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t t = 0;
  while (t < w.size()) {
    std::size_t run = 1;
    while (t + run < w.size() && w[t + run] == w[t]) ++run;
    if (!out.empty()) out += ' ';
    out += gens[static_cast<unsigned char>(w[t])];
    if (run > 1) out += "^" + std::to_string(run);
    t += run;
  }
  return out;
}

}  // namespace

HopfAlgebraData restricted_enveloping(const RestrictedLieData& lie) {
  validate_lie(lie);
  const auto& f = lie.field;
  const std::uint64_t p = f.modulus();
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < lie.dim; ++i) {
    n *= p;
    if (n > dimension_cap()) check_dimension(static_cast<std::size_t>(n));
  }
  PbwRewriter rw(lie);
  const std::size_t d = rw.size();
  std::vector<std::string> words(d);
  for (std::size_t i = 0; i < d; ++i) words[i] = rw.word_of(i);

  Tensor3 mult(f, d, d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Vector& prod = rw.normal_form(words[a] + words[b]);
      for (std::size_t k = 0; k < d; ++k) mult.set(a, b, k, prod[k]);
    }

  std::vector<std::string> gens = lie.labels;
  if (gens.empty())
    for (std::size_t i = 0; i < lie.dim; ++i) gens.push_back("e" + std::to_string(i + 1));
  std::vector<std::string> labels(d);
  for (std::size_t i = 0; i < d; ++i) labels[i] = monomial_label(gens, words[i]);

  Vector unit(d, 0), counit(d, 0);
  unit[0] = 1;
  counit[0] = 1;
  // The multiplication alone as a partial algebra, for products in H and H (x) H.
  HopfAlgebraData partial{f, d, labels, mult, unit, Tensor3(f, d, d, d), counit, FieldMatrix(f, d, d)};
  const StructureView view(partial);

  // Monomials by increasing length; the tail of a PBW word is a PBW word.
  std::vector<std::size_t> order(d);
  for (std::size_t i = 0; i < d; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return words[x].size() < words[y].size(); });

  std::vector<Vector> delta(d);        // flattened d x d
  std::vector<Vector> antipode_of(d);  // S(monomial)
  for (auto idx : order) {
    const std::string& w = words[idx];
    if (w.empty()) {
      delta[idx].assign(d * d, 0);
      delta[idx][0] = 1;
      antipode_of[idx] = unit;
      continue;
    }
    const std::size_t head = rw.index_of_sorted(w.substr(0, 1));
    const std::size_t tail = rw.index_of_sorted(w.substr(1));
    // Delta(e_i) = e_i (x) 1 + 1 (x) e_i, multiplied into Delta(tail) in H (x) H.
    Vector dh(d * d, 0);
    dh[head * d] = f.add(dh[head * d], 1);
    dh[head] = f.add(dh[head], 1);
    Vector prod(d * d, 0);
    const Vector& dt = delta[tail];
    for (std::size_t x = 0; x < d * d; ++x) {
      if (dh[x] == 0) continue;
      for (std::size_t y = 0; y < d * d; ++y) {
        if (dt[y] == 0) continue;
        Residue c = f.mul(dh[x], dt[y]);
        for (const auto& l : view.product(x / d, y / d))
          for (const auto& r : view.product(x % d, y % d)) {
            auto& z = prod[l.index * d + r.index];
            z = f.mul_add(z, c, f.mul(l.c, r.c));
          }
      }
    }
    delta[idx] = std::move(prod);
    // S(e_i t) = S(t) S(e_i) = -S(t) e_i
    Vector neg_head(d, 0);
    neg_head[head] = f.neg(1);
    antipode_of[idx] = view.multiply(antipode_of[tail], neg_head);
  }

  Tensor3 comult(f, d, d, d);
  FieldMatrix antipode(f, d, d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t x = 0; x < d * d; ++x) comult.set(k, x / d, x % d, delta[k][x]);
    for (std::size_t j = 0; j < d; ++j) antipode.set(k, j, antipode_of[k][j]);
  }
  HopfAlgebraData h{f, d, std::move(labels), std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                    std::move(antipode)};
  require_valid(h, "restricted_enveloping");
  return h;
}

}  // namespace hopfind
