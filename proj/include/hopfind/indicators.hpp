#ifndef HOPFIND_INDICATORS_HPP
#define HOPFIND_INDICATORS_HPP

#include <cstdint>
#include <string>

#include "hopfind/hopf.hpp"
#include "hopfind/polynomial.hpp"
#include "hopfind/sequence.hpp"

namespace hopfind {

// P^(m) = id^{*m} in the convolution algebra; P^(0) = u o eps, P^(-1) = S.
Endomorphism sweedler_power(const HopfAlgebraData& h, std::int64_t m);

// nu_n(H) = Tr(S o P^(n-1)).
Residue indicator(const HopfAlgebraData& h, std::int64_t n);

// nu_n for lo <= n <= hi. The window is walked by one convolution per step
// outward from P^(0); with threads > 1 it is split into chunks, each seeded by
// a single square-and-multiply jump. The values do not depend on the split.
// threads == 0 picks the hardware concurrency.
LRSequence indicator_sequence(const HopfAlgebraData& h, std::int64_t lo, std::int64_t hi, unsigned threads = 1);

// Minimal polynomial of id in the convolution algebra End(H).
Polynomial convolution_min_poly(const HopfAlgebraData& h);
// Minimal polynomial of the sequence {nu_n}. It divides the polynomial above
// and has nonzero constant term.
Polynomial indicator_min_poly(const HopfAlgebraData& h);

// True iff seq is 1 at every index prime to p and 0 at every multiple of p.
// Throws Error when the window has fewer than 2p terms.
bool check_p_pertinent(const LRSequence& seq, std::uint64_t p);

// Tr(S^n).
Residue trace_antipode_power(const HopfAlgebraData& h, std::uint64_t n);

// B_n = sum_j C(n, j) b_j mod p for 1 <= n <= n_hi, where b_0 = 0 and
// b_j = (-1)^{j+1} for 0 < j < p, b_j = 0 for j >= p. Requires n_hi >= 2p.
LRSequence binomial_profile(std::uint64_t p, std::int64_t n_hi);

// Default window [-2p^2, 2p^2].
std::int64_t default_window_radius(std::uint64_t p);

struct IndicatorReport {
  std::string algebra;
  std::uint64_t p = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  LRSequence sequence;
  Polynomial min_poly;
  std::uint64_t period = 0;
  bool p_pertinent = false;
};

// p-pertinence is decided on a full period window [1, max(2p, lcm(T, p))],
// independently of the requested window.
IndicatorReport make_indicator_report(const HopfAlgebraData& h, std::string algebra, std::int64_t lo,
                                      std::int64_t hi, unsigned threads = 1);

}  // namespace hopfind

#endif
