#include "hopfind/sequence.hpp"

#include <string>

#include "hopfind/error.hpp"

namespace hopfind {

Residue LRSequence::at(std::int64_t n) const {
  if (!covers(n)) throw Error("index " + std::to_string(n) + " outside sequence window");
  return values[static_cast<std::size_t>(n - offset)];
}

bool satisfies_recurrence(const Polynomial& f, std::span<const Residue> values) {
  const auto& field = f.field();
  const int m = f.degree();
  if (m < 0) return true;
  for (std::size_t n = 0; n + m < values.size(); ++n) {
    Residue acc = 0;
    for (int i = 0; i <= m; ++i) acc = field.mul_add(acc, f.coeffs()[i], values[n + i]);
    if (acc != 0) return false;
  }
  return true;
}

Polynomial berlekamp_massey(const PrimeField& field, std::span<const Residue> window, std::size_t degree_bound) {
  if (window.size() < 2 * degree_bound)
    throw Error("insufficient terms: " + std::to_string(window.size()) + " supplied, " +
                std::to_string(2 * degree_bound) + " needed");
  // Connection polynomial C(x) = 1 + c_1 x + ... + c_L x^L with
  // sum_i c_i s_{n-i} = 0.
  Vector conn{1}, prev{1};
  std::size_t len = 0;
  std::size_t shift = 1;
  Residue prev_disc = 1;
  for (std::size_t n = 0; n < window.size(); ++n) {
    Residue disc = window[n] % field.modulus();
    for (std::size_t i = 1; i <= len && i < conn.size(); ++i)
      disc = field.mul_add(disc, conn[i], window[n - i]);
    if (disc == 0) {
      ++shift;
      continue;
    }
    Residue coef = field.neg(field.mul(disc, field.inv(prev_disc)));
    Vector updated = conn;
    if (updated.size() < prev.size() + shift) updated.resize(prev.size() + shift, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) updated[i + shift] = field.mul_add(updated[i + shift], coef, prev[i]);
    if (2 * len <= n) {
      prev = conn;
      len = n + 1 - len;
      prev_disc = disc;
      shift = 1;
    } else {
      ++shift;
    }
    conn = std::move(updated);
  }
  if (len > degree_bound)
    throw Error("insufficient terms: linear complexity " + std::to_string(len) + " exceeds declared bound " +
                std::to_string(degree_bound));
  conn.resize(len + 1, 0);
  Vector rev(len + 1);
  for (std::size_t i = 0; i <= len; ++i) rev[i] = conn[len - i];
  Polynomial f(field, std::move(rev));
  if (!satisfies_recurrence(f, window)) throw Error("internal: Berlekamp-Massey output fails its recurrence");
  return f;
}

std::uint64_t sequence_period(const Polynomial& f, std::uint64_t cap) {
  if (!f.is_monic()) throw Error("sequence_period expects a monic polynomial");
  if (f.coeff(0) == 0) throw Error("sequence_period expects f(0) != 0");
  const auto& field = f.field();
  const std::size_t m = static_cast<std::size_t>(f.degree());
  if (m == 0) return 1;
  // r = x^T mod f, kept as m coefficients.
  Vector r(m, 0);
  auto times_x = [&] {
    Residue top = r[m - 1];
    for (std::size_t i = m - 1; i > 0; --i) r[i] = r[i - 1];
    r[0] = 0;
    if (top != 0) {
      Residue nt = field.neg(top);
      for (std::size_t i = 0; i < m; ++i) r[i] = field.mul_add(r[i], nt, f.coeffs()[i]);
    }
  };
  auto is_one = [&] {
    if (r[0] != 1 % field.modulus()) return false;
    for (std::size_t i = 1; i < m; ++i)
      if (r[i] != 0) return false;
    return true;
  };
  r[0] = 1;
  for (std::uint64_t t = 1; t <= cap; ++t) {
    times_x();
    if (is_one()) return t;
  }
  throw Error("sequence period exceeds cap " + std::to_string(cap));
}

}  // namespace hopfind
