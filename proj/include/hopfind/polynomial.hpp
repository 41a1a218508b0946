#ifndef HOPFIND_POLYNOMIAL_HPP
#define HOPFIND_POLYNOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <string>

#include "hopfind/field.hpp"

namespace hopfind {

// Univariate polynomial over GF(q), coefficients stored low-to-high with no
// trailing zeros. The zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  explicit Polynomial(PrimeField field) : field_(field) {}
  Polynomial(PrimeField field, Vector coeffs);
  // Coefficients low-to-high, given as integers and reduced into the field.
  static Polynomial from_integers(PrimeField field, std::initializer_list<std::int64_t> coeffs);
  static Polynomial monomial(PrimeField field, std::size_t degree, Residue coeff = 1);

  const PrimeField& field() const { return field_; }
  const Vector& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Residue coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Residue leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Residue evaluate(Residue x) const;

  Polynomial monic() const;
  std::string to_string(char var = 'x') const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  PrimeField field_;
  Vector coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};
PolyDivision divmod(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& d, const Polynomial& a);

}  // namespace hopfind

#endif
