#pragma once

// Averages of semigroup invariants over cubic neighbourhoods of a scaled
// base vector N*d (the d-lattice) or N*(u, w) (the six-dimensional (u,w)
// lattice), the coprime density of random tuples, and the fill-density
// histogram of a single semigroup.
//
// Neighbourhood offsets run over [-r, r] inclusive in every coordinate, so an
// exhaustive d-lattice sweep visits (2r + 1)^m points. Sweeps are split into
// fixed blocks of consecutive point indices; partial sums are combined in
// block order, so results do not depend on the worker count.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "numsg/arith.hpp"
#include "numsg/relations.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

enum class LatticeKind { D, UW };

struct Sampling {
  u64 count = 0;
  u64 seed = 0;
};

struct NeighborhoodSpec {
  LatticeKind kind = LatticeKind::D;
  std::vector<u64> base;  // d-lattice base (m = 2 or 3)
  UWPair uw_base;         // (u,w)-lattice base
  u64 N = 1;
  u64 r = 1;
  std::optional<Sampling> sampling;  // exhaustive when empty

  static NeighborhoodSpec d_lattice(std::vector<u64> base, u64 N, u64 r,
                                    std::optional<Sampling> sampling = std::nullopt);
  static NeighborhoodSpec uw_lattice(UWPair base, u64 N, u64 r,
                                     std::optional<Sampling> sampling = std::nullopt);

  std::size_t dimension() const { return kind == LatticeKind::D ? base.size() : 6; }
  // Points visited: (2r+1)^dimension when exhaustive, the sample count otherwise.
  u64 point_count() const;
};

struct SweepOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  // Largest exhaustive (u,w) sweep accepted; larger ones must be sampled.
  u64 exhaustive_budget = 2'000'000;
};

// Throws RadiusTooLarge (r >= N), DomainError (base invalid or a coordinate
// can fall below 2). Returns advisory warnings, e.g. r > N/4.
std::vector<std::string> validate(const NeighborhoodSpec& spec);

struct EstimatorReport {
  NeighborhoodSpec spec;
  u64 total_points = 0;
  u64 coprime_count = 0;
  u64 admissible_count = 0;
  u64 symmetric_count = 0;

  // Exact integer sums over admissible points.
  u128 sum_conductor = 0;
  u128 sum_genus = 0;
  u128 sum_nongaps = 0;
  u128 sum_min_a3b3 = 0;  // (u,w) lattice only
  double sum_root_volume = 0.0;

  std::optional<double> K_est;
  std::optional<double> p_est;
  std::optional<double> q_est;
  std::optional<double> symmetric_fraction;
  double density = 0.0;  // coprime_count / total_points
  // d-lattice, m = 3: sqrt(3) - delta(N, r) from the explicit finite-N bound.
  std::optional<double> K_lower_bound;
  // (u,w) lattice: the limits the estimators approach.
  std::optional<double> K_closed;
  std::optional<double> Q_closed;
  std::optional<std::string> empty_reason;
  std::vector<std::string> warnings;
  double elapsed_seconds = 0.0;
};

struct AdmissibleScan {
  u64 total_points = 0;
  u64 coprime_count = 0;
  u64 admissible_count = 0;
  std::vector<GeneratorTuple> points;  // admissible points in visiting order
};

AdmissibleScan admissible_points(const NeighborhoodSpec& spec, const SweepOptions& opts = {});

// One pass over a d-lattice neighbourhood computing every estimator.
EstimatorReport d_lattice_sweep(const NeighborhoodSpec& spec, const SweepOptions& opts = {});

EstimatorReport k_estimator(const NeighborhoodSpec& spec, const SweepOptions& opts = {});
EstimatorReport p_q_estimators(const NeighborhoodSpec& spec, const SweepOptions& opts = {});
// Throws EmptyAdmissibleSet when nothing is admissible.
EstimatorReport symmetric_fraction(const NeighborhoodSpec& spec, const SweepOptions& opts = {});

// Closed forms evaluated pointwise on (N u + j) U (N w + k); admissible iff
// the reconstructed generators have gcd 1.
EstimatorReport uw_sweep(const NeighborhoodSpec& spec, const SweepOptions& opts = {});

// delta(N, r) with K_{N,r} > sqrt(3) - delta for a three-generated base.
double k_finite_correction(std::span<const u64> base, u64 N, u64 r);

double zeta(unsigned m);

struct DensityReport {
  unsigned m = 0;
  u64 samples = 0;
  u64 seed = 0;
  u64 lo = 0;
  u64 hi = 0;
  u64 coprime = 0;
  double fraction = 0.0;
  double expected = 0.0;  // 1 / zeta(m)
  double deviation = 0.0;
};

// Fraction of uniformly sampled m-tuples in [lo, hi]^m with gcd 1.
DensityReport coprime_density(unsigned m, u64 samples, u64 seed, u64 lo = 2, u64 hi = 1'000'000,
                              unsigned threads = 0);

struct FillBin {
  u64 lo = 0;  // [lo, hi)
  u64 hi = 0;
  u64 count = 0;
  double occupancy = 0.0;
  double conjectured = 0.0;  // mean of (s/C)^(m-1) over the integers in the bin
};

struct FillHistogram {
  GeneratorTuple gens;
  std::size_t m = 0;  // minimal generator count
  u64 conductor = 0;
  std::vector<FillBin> bins;
  Rational mean_occupancy;  // elements of S in [0, C-1] over C
  Rational p;
  double l1_distance = 0.0;  // (1/C) * sum_s |occupancy(bin(s)) - conjectured(bin(s))|
  Rational conjectured_integral;       // C / m, from the antiderivative
  double conjectured_integral_quadrature = 0.0;
};

FillHistogram fill_density(const GeneratorTuple& gens, std::size_t bins);

namespace detail {
// Counter-based stream: the value depends only on (seed, counter).
u64 counter_hash(u64 seed, u64 counter) noexcept;
// Uniform in [0, bound).
u64 uniform_below(u64 seed, u64 counter, u64 bound) noexcept;
}  // namespace detail

}  // namespace numsg
