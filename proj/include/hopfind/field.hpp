#ifndef HOPFIND_FIELD_HPP
#define HOPFIND_FIELD_HPP

#include <cstdint>
#include <vector>

namespace hopfind {

using Residue = std::uint32_t;
using Vector = std::vector<Residue>;

bool is_prime(std::uint64_t n);

// The prime field GF(q), 2 <= q < 2^31. Elements are residues in [0, q).
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t q);

  Residue modulus() const { return q_; }

  Residue reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    return static_cast<Residue>(r < 0 ? r + q_ : r);
  }
  Residue add(Residue a, Residue b) const {
    Residue s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + (q_ - b); }
  Residue neg(Residue a) const { return a == 0 ? 0 : q_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % q_);
  }
  // a + b*c
  Residue mul_add(Residue a, Residue b, Residue c) const {
    return static_cast<Residue>((a + static_cast<std::uint64_t>(b) * c) % q_);
  }
  Residue pow(Residue a, std::uint64_t e) const;
  Residue inv(Residue a) const;

  // Centered representative in (-q/2, q/2], used only for printing.
  std::int64_t signed_value(Residue a) const {
    return a > q_ / 2 ? static_cast<std::int64_t>(a) - q_ : a;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Residue q_;
};

}  // namespace hopfind

#endif
