#ifndef HOPFIND_SEQUENCE_HPP
#define HOPFIND_SEQUENCE_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "hopfind/field.hpp"
#include "hopfind/polynomial.hpp"

namespace hopfind {

// A finite window of a Z-indexed sequence over GF(q): values[i] is the term
// at index offset + i.
struct LRSequence {
  PrimeField field;
  std::int64_t offset = 0;
  Vector values;
  std::optional<Polynomial> min_poly;
  std::optional<std::uint64_t> period;

  std::int64_t first_index() const { return offset; }
  std::int64_t last_index() const { return offset + static_cast<std::int64_t>(values.size()) - 1; }
  bool covers(std::int64_t n) const { return n >= first_index() && n <= last_index(); }
  Residue at(std::int64_t n) const;
};

// f_0 a_n + f_1 a_{n+1} + ... + f_m a_{n+m} = 0 for every n with the whole
// stencil inside the window.
bool satisfies_recurrence(const Polynomial& f, std::span<const Residue> values);

// Minimal polynomial (monic, recurrence convention above) of a sequence whose
// linear complexity is at most degree_bound. Needs 2 * degree_bound terms.
Polynomial berlekamp_massey(const PrimeField& field, std::span<const Residue> window, std::size_t degree_bound);

inline constexpr std::uint64_t kDefaultPeriodCap = 1'000'000;

// Least T >= 1 with x^T = 1 mod f. Requires f(0) != 0.
std::uint64_t sequence_period(const Polynomial& f, std::uint64_t cap = kDefaultPeriodCap);

}  // namespace hopfind

#endif
