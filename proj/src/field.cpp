#include "hopfind/field.hpp"

#include <string>

#include "hopfind/error.hpp"

namespace hopfind {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t q) : q_(static_cast<Residue>(q)) {
  if (q >= (std::uint64_t{1} << 31) || !is_prime(q))
    throw Error("field modulus " + std::to_string(q) + " is not a prime below 2^31");
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
  Residue result = 1 % q_;
  Residue base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw Error("division by zero in GF(" + std::to_string(q_) + ")");
  return pow(a, q_ - 2);
}

}  // namespace hopfind
