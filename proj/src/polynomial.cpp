#include "hopfind/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hopfind/error.hpp"

namespace hopfind {

Polynomial::Polynomial(PrimeField field, Vector coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= field_.modulus();
  trim();
}

Polynomial Polynomial::from_integers(PrimeField field, std::initializer_list<std::int64_t> coeffs) {
  Vector v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field.reduce(c));
  return Polynomial(field, std::move(v));
}

Polynomial Polynomial::monomial(PrimeField field, std::size_t degree, Residue coeff) {
  Vector v(degree + 1, 0);
  v[degree] = coeff;
  return Polynomial(field, std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Residue Polynomial::evaluate(Residue x) const {
  Residue acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.mul_add(*it, acc, x);
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw Error("zero polynomial has no monic associate");
  Residue s = field_.inv(leading());
  Vector v = coeffs_;
  for (auto& c : v) c = field_.mul(c, s);
  return Polynomial(field_, std::move(v));
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Residue c = coeffs_[i];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0 || c != 1) out << c;
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const auto& f = a.field();
  Vector v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
  return Polynomial(f, std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  const auto& f = a.field();
  Vector v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(i), b.coeff(i));
  return Polynomial(f, std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const auto& f = a.field();
  if (a.is_zero() || b.is_zero()) return Polynomial(f);
  Vector v(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      v[i + j] = f.mul_add(v[i + j], a.coeffs()[i], b.coeffs()[j]);
  return Polynomial(f, std::move(v));
}

PolyDivision divmod(const Polynomial& a, const Polynomial& b) {
  const auto& f = a.field();
  if (b.is_zero()) throw Error("polynomial division by zero");
  Vector rem = a.coeffs();
  const int db = b.degree();
  Residue lead_inv = f.inv(b.leading());
  Vector quot(rem.size() > static_cast<std::size_t>(db) ? rem.size() - db : 0, 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    Residue c = f.mul(rem[i], lead_inv);
    if (c == 0) continue;
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeffs()[j]));
  }
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

bool divides(const Polynomial& d, const Polynomial& a) { return divmod(a, d).remainder.is_zero(); }

}  // namespace hopfind
