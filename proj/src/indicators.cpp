#include "hopfind/indicators.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "hopfind/error.hpp"

namespace hopfind {

Endomorphism sweedler_power(const HopfAlgebraData& h, std::int64_t m) {
  const ConvolutionAlgebra conv(h);
  if (m == -1) return conv.antipode();
  if (m < 0) return conv.power(conv.antipode(), -m);
  return conv.power(conv.identity(), m);
}

Residue indicator(const HopfAlgebraData& h, std::int64_t n) {
  return trace_of_product(antipode_map(h).matrix(), sweedler_power(h, n - 1).matrix());
}

namespace {

Endomorphism jump(const ConvolutionAlgebra& conv, std::int64_t m) {
  if (m < 0) return conv.power(conv.antipode(), -m);
  return conv.power(conv.identity(), m);
}

// Fills out[m - first] = Tr(S P^(m)) for first <= m <= last.
void ladder(const ConvolutionAlgebra& conv, std::int64_t first, std::int64_t last, Residue* out) {
  const FieldMatrix& s = conv.antipode().matrix();
  auto trace_at = [&](const Endomorphism& p) { return trace_of_product(s, p.matrix()); };
  if (first <= 0 && last >= 0) {
    Endomorphism up = conv.unit();
    out[-first] = trace_at(up);
    Endomorphism down = up;
    for (std::int64_t m = 1; m <= last; ++m) {
      up = conv.convolve(up, conv.identity());
      out[m - first] = trace_at(up);
    }
    for (std::int64_t m = -1; m >= first; --m) {
      down = conv.convolve(down, conv.antipode());
      out[m - first] = trace_at(down);
    }
  } else if (first > 0) {
    Endomorphism p = jump(conv, first);
    out[0] = trace_at(p);
    for (std::int64_t m = first + 1; m <= last; ++m) {
      p = conv.convolve(p, conv.identity());
      out[m - first] = trace_at(p);
    }
  } else {
    Endomorphism p = jump(conv, last);
    out[last - first] = trace_at(p);
    for (std::int64_t m = last - 1; m >= first; --m) {
      p = conv.convolve(p, conv.antipode());
      out[m - first] = trace_at(p);
    }
  }
}

}  // namespace

LRSequence indicator_sequence(const HopfAlgebraData& h, std::int64_t lo, std::int64_t hi, unsigned threads) {
  if (lo > hi) throw Error("indicator window is empty");
  const ConvolutionAlgebra conv(h);
  const auto count = static_cast<std::size_t>(hi - lo + 1);
  LRSequence seq{h.field, lo, Vector(count, 0), std::nullopt, std::nullopt};
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunks = std::min<std::size_t>(threads, count);
  if (chunks <= 1) {
    ladder(conv, lo - 1, hi - 1, seq.values.data());
    return seq;
  }
  std::vector<std::thread> workers;
  const std::size_t base = count / chunks, extra = count % chunks;
  std::size_t start = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t len = base + (c < extra ? 1 : 0);
    const std::int64_t first = lo - 1 + static_cast<std::int64_t>(start);
    const std::int64_t last = first + static_cast<std::int64_t>(len) - 1;
    Residue* out = seq.values.data() + start;
    workers.emplace_back([&conv, first, last, out] { ladder(conv, first, last, out); });
    start += len;
  }
  for (auto& w : workers) w.join();
  return seq;
}

Polynomial convolution_min_poly(const HopfAlgebraData& h) {
  const ConvolutionAlgebra conv(h);
  KrylovRelation krylov(h.field, h.dim * h.dim);
  Endomorphism p = conv.unit();
  while (true) {
    if (auto rel = krylov.push(p.matrix().data())) return *rel;
    p = conv.convolve(p, conv.identity());
  }
}

Polynomial indicator_min_poly(const HopfAlgebraData& h) {
  const Polynomial phi = convolution_min_poly(h);
  const auto bound = static_cast<std::size_t>(phi.degree());
  const auto values = indicator_sequence(h, 1, static_cast<std::int64_t>(2 * bound)).values;
  Polynomial f = berlekamp_massey(h.field, values, bound);
  if (!divides(f, phi)) throw Error("internal: sequence polynomial does not divide the convolution polynomial");
  if (f.coeff(0) == 0) throw Error("internal: indicator minimal polynomial has zero constant term");
  return f;
}

bool check_p_pertinent(const LRSequence& seq, std::uint64_t p) {
  if (seq.values.size() < 2 * p) throw Error("window too short for a p-pertinence test (need at least 2p terms)");
  const auto sp = static_cast<std::int64_t>(p);
  for (std::int64_t n = seq.first_index(); n <= seq.last_index(); ++n) {
    const Residue expected = n % sp == 0 ? 0 : 1;
    if (seq.at(n) != expected) return false;
  }
  return true;
}

Residue trace_antipode_power(const HopfAlgebraData& h, std::uint64_t n) {
  return matrix_power(h.antipode, n).trace();
}

LRSequence binomial_profile(std::uint64_t p, std::int64_t n_hi) {
  const PrimeField f(p);
  if (n_hi < static_cast<std::int64_t>(2 * p)) throw Error("binomial profile needs n_hi >= 2p");
  const auto n = static_cast<std::size_t>(n_hi);
  Vector b(n + 1, 0);
  for (std::size_t j = 1; j < p && j <= n; ++j) b[j] = j % 2 == 1 ? 1 : f.neg(1);
  LRSequence seq{f, 1, Vector(n, 0), std::nullopt, std::nullopt};
  Vector row{1};
  for (std::size_t m = 1; m <= n; ++m) {
    Vector next(m + 1, 0);
    next[0] = next[m] = 1;
    for (std::size_t j = 1; j < m; ++j) next[j] = f.add(row[j - 1], row[j]);
    row = std::move(next);
    Residue acc = 0;
    for (std::size_t j = 0; j <= m; ++j) acc = f.mul_add(acc, row[j], b[j]);
    seq.values[m - 1] = acc;
  }
  return seq;
}

std::int64_t default_window_radius(std::uint64_t p) { return static_cast<std::int64_t>(2 * p * p); }

IndicatorReport make_indicator_report(const HopfAlgebraData& h, std::string algebra, std::int64_t lo,
                                      std::int64_t hi, unsigned threads) {
  IndicatorReport r{std::move(algebra), h.field.modulus(), lo, hi, indicator_sequence(h, lo, hi, threads),
                    indicator_min_poly(h), 0, false};
  r.period = sequence_period(r.min_poly);
  r.sequence.min_poly = r.min_poly;
  r.sequence.period = r.period;
  const std::uint64_t p = r.p;
  const std::uint64_t span = std::max<std::uint64_t>(2 * p, std::lcm(r.period, p));
  r.p_pertinent = check_p_pertinent(indicator_sequence(h, 1, static_cast<std::int64_t>(span), threads), p);
  return r;
}

}  // namespace hopfind
