#include <cmath>
#include <numeric>

#include "numsg/asymptotics.hpp"
#include "numsg/parallel.hpp"

namespace numsg {

namespace detail {

u64 counter_hash(u64 seed, u64 counter) noexcept {
  // SplitMix64 output function applied to the (seed, counter) position.
  u64 z = seed + (counter + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

u64 uniform_below(u64 seed, u64 counter, u64 bound) noexcept {
  return static_cast<u64>((static_cast<u128>(counter_hash(seed, counter)) * bound) >> 64);
}

}  // namespace detail

double zeta(unsigned m) {
  if (m < 2) throw Error(ErrorKind::DomainError, "zeta needs m >= 2");
  constexpr unsigned K = 64;
  double sum = 0.0;
  for (unsigned k = K - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -static_cast<double>(m));
  // Euler-Maclaurin tail sum_{k >= K} k^-m; the next omitted term is below 1e-15.
  const double k = K, s = m;
  const double tail = std::pow(k, 1.0 - s) / (s - 1.0) + std::pow(k, -s) / 2.0 +
                      s * std::pow(k, -s - 1.0) / 12.0 -
                      s * (s + 1.0) * (s + 2.0) * std::pow(k, -s - 3.0) / 720.0;
  return sum + tail;
}

DensityReport coprime_density(unsigned m, u64 samples, u64 seed, u64 lo, u64 hi, unsigned threads) {
  if (m < 2) throw Error(ErrorKind::DomainError, "density needs m >= 2");
  if (samples == 0) throw Error(ErrorKind::DomainError, "sample count must be positive");
  if (lo == 0 || hi < lo) throw Error(ErrorKind::DegenerateRange, "need 1 <= lo <= hi");
  constexpr u64 kBlock = 1 << 14;
  const u64 width = hi - lo + 1;
  const u64 blocks = (samples + kBlock - 1) / kBlock;
  const auto parts = run_blocks<u64>(blocks, threads, [&](std::size_t b) {
    u64 hits = 0;
    const u64 end = std::min(samples, (b + 1) * kBlock);
    for (u64 i = b * kBlock; i < end; ++i) {
      u64 g = 0;
      for (unsigned c = 0; c < m; ++c) g = std::gcd(g, lo + detail::uniform_below(seed, i * m + c, width));
      hits += g == 1;
    }
    return hits;
  });
  DensityReport rep;
  rep.m = m;
  rep.samples = samples;
  rep.seed = seed;
  rep.lo = lo;
  rep.hi = hi;
  rep.coprime = std::accumulate(parts.begin(), parts.end(), u64{0});
  rep.fraction = static_cast<double>(rep.coprime) / static_cast<double>(samples);
  rep.expected = 1.0 / zeta(m);
  rep.deviation = std::abs(rep.fraction - rep.expected);
  return rep;
}

FillHistogram fill_density(const GeneratorTuple& gens, std::size_t bins) {
  if (bins == 0) throw Error(ErrorKind::DomainError, "bins must be positive");
  const SemigroupProfile prof = profile(gens);
  const u64 C = prof.conductor;
  if (C < bins) {
    throw Error(ErrorKind::DegenerateRange,
                "conductor " + std::to_string(C) + " is below the bin count " + std::to_string(bins));
  }
  FillHistogram h;
  h.gens = gens;
  h.m = minimal_generators(gens).size();
  h.conductor = C;
  h.p = prof.p;
  const int power = static_cast<int>(h.m) - 1;
  const double c = static_cast<double>(C);

  std::vector<bool> member(C, true);
  for (u64 gap : prof.gaps) member[gap] = false;

  u64 elements = 0;
  double l1 = 0.0;
  for (std::size_t b = 0; b < bins; ++b) {
    FillBin bin;
    bin.lo = static_cast<u64>(static_cast<u128>(C) * b / bins);
    bin.hi = static_cast<u64>(static_cast<u128>(C) * (b + 1) / bins);
    double conj = 0.0;
    for (u64 s = bin.lo; s < bin.hi; ++s) {
      bin.count += member[s];
      conj += std::pow(static_cast<double>(s) / c, power);
    }
    const double width = static_cast<double>(bin.hi - bin.lo);
    bin.occupancy = static_cast<double>(bin.count) / width;
    bin.conjectured = conj / width;
    l1 += width * std::abs(bin.occupancy - bin.conjectured);
    elements += bin.count;
    h.bins.push_back(bin);
  }
  h.mean_occupancy = Rational(elements, C);
  h.l1_distance = l1 / c;
  h.conjectured_integral = Rational(C, h.m);

  // Composite Simpson on [0, C]; exact for the cubic and lower profiles.
  constexpr int kPanels = 64;
  const double step = c / kPanels;
  double acc = 0.0;
  for (int i = 0; i <= kPanels; ++i) {
    const double f = std::pow(i * step / c, power);
    acc += f * (i == 0 || i == kPanels ? 1.0 : (i % 2 ? 4.0 : 2.0));
  }
  h.conjectured_integral_quadrature = acc * step / 3.0;
  return h;
}

}  // namespace numsg
