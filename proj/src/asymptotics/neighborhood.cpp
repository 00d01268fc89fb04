#include <cmath>
#include <string>

#include "numsg/asymptotics.hpp"
#include "numsg/parallel.hpp"

namespace numsg {

namespace {

constexpr u64 kDBlock = 64;     // d-lattice points per block (Apery work per point)
constexpr u64 kUWBlock = 4096;  // (u,w) points per block (a few products per point)

u64 ipow(u64 base, std::size_t exp) {
  u64 out = 1;
  for (std::size_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

// Offsets in [-r, r] of the idx-th visited point. Exhaustive sweeps read idx
// as base-(2r+1) digits, first coordinate most significant.
void offsets_of(const NeighborhoodSpec& spec, u64 idx, std::span<i64> out) {
  const u64 width = 2 * spec.r + 1;
  const std::size_t dim = out.size();
  const i64 r = static_cast<i64>(spec.r);
  if (spec.sampling) {
    for (std::size_t i = 0; i < dim; ++i) {
      out[i] = static_cast<i64>(detail::uniform_below(spec.sampling->seed, idx * dim + i, width)) - r;
    }
    return;
  }
  for (std::size_t i = dim; i-- > 0;) {
    out[i] = static_cast<i64>(idx % width) - r;
    idx /= width;
  }
}

u64 shifted(u64 scaled, i64 offset) { return static_cast<u64>(static_cast<i64>(scaled) + offset); }

std::string join(std::span<const u64> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct Accum {
  u64 total = 0;
  u64 coprime = 0;
  u64 admissible = 0;
  u64 symmetric = 0;
  u128 sum_c = 0;
  u128 sum_g = 0;
  u128 sum_ng = 0;
  u128 sum_min = 0;
  double sum_root = 0.0;
  std::vector<GeneratorTuple> points;

  void merge(const Accum& o) {
    total += o.total;
    coprime += o.coprime;
    admissible += o.admissible;
    symmetric += o.symmetric;
    sum_c += o.sum_c;
    sum_g += o.sum_g;
    sum_ng += o.sum_ng;
    sum_min += o.sum_min;
    sum_root += o.sum_root;
    points.insert(points.end(), o.points.begin(), o.points.end());
  }
};

Accum sweep_d_blocks(const NeighborhoodSpec& spec, const SweepOptions& opts, bool keep_points,
                     bool invariants) {
  const u64 total = spec.point_count();
  const std::size_t m = spec.base.size();
  const u64 blocks = (total + kDBlock - 1) / kDBlock;
  auto parts = run_blocks<Accum>(blocks, opts.threads, [&](std::size_t b) {
    Accum acc;
    std::vector<i64> off(m);
    std::vector<u64> point(m);
    const u64 end = std::min(total, (b + 1) * kDBlock);
    for (u64 idx = b * kDBlock; idx < end; ++idx) {
      ++acc.total;
      offsets_of(spec, idx, off);
      for (std::size_t i = 0; i < m; ++i) point[i] = shifted(spec.N * spec.base[i], off[i]);
      if (gcd_of(point) != 1) continue;
      ++acc.coprime;
      const GeneratorTuple t(point);
      if (!is_minimal_generating_set(t)) continue;
      ++acc.admissible;
      if (keep_points) acc.points.push_back(t);
      if (!invariants) continue;
      const BasicInvariants inv = basic_invariants(t);
      acc.sum_c += inv.conductor;
      acc.sum_g += inv.genus;
      acc.sum_ng += inv.nongaps;
      if (inv.symmetric()) ++acc.symmetric;
      double volume = 1.0;
      for (u64 x : point) volume *= static_cast<double>(x);
      // (m-1)-th root of the volume: the volume itself for pairs.
      acc.sum_root += m == 2 ? volume : std::sqrt(volume);
    }
    return acc;
  });
  Accum all;
  for (const Accum& a : parts) all.merge(a);
  return all;
}

double to_real(u128 v) { return static_cast<double>(v); }

}  // namespace

NeighborhoodSpec NeighborhoodSpec::d_lattice(std::vector<u64> base, u64 N, u64 r,
                                             std::optional<Sampling> sampling) {
  NeighborhoodSpec s;
  s.kind = LatticeKind::D;
  s.base = std::move(base);
  s.N = N;
  s.r = r;
  s.sampling = sampling;
  return s;
}

NeighborhoodSpec NeighborhoodSpec::uw_lattice(UWPair base, u64 N, u64 r,
                                              std::optional<Sampling> sampling) {
  NeighborhoodSpec s;
  s.kind = LatticeKind::UW;
  s.uw_base = base;
  s.N = N;
  s.r = r;
  s.sampling = sampling;
  return s;
}

u64 NeighborhoodSpec::point_count() const {
  if (sampling) return sampling->count;
  return ipow(2 * r + 1, dimension());
}

std::vector<std::string> validate(const NeighborhoodSpec& spec) {
  if (spec.N == 0 || spec.r == 0) {
    throw Error(ErrorKind::DomainError, "N and r must be positive");
  }
  if (spec.r >= spec.N) {
    throw Error(ErrorKind::RadiusTooLarge, "r = " + std::to_string(spec.r) +
                                               " must be below N = " + std::to_string(spec.N));
  }
  if (spec.sampling && spec.sampling->count == 0) {
    throw Error(ErrorKind::DomainError, "sample count must be positive");
  }
  if (spec.kind == LatticeKind::D) {
    if (spec.base.size() != 2 && spec.base.size() != 3) {
      throw Error(ErrorKind::DomainError, "d-lattice base needs 2 or 3 generators");
    }
    const GeneratorTuple base(spec.base);
    require_numerical(base);
    if (!is_minimal_generating_set(base)) {
      throw Error(ErrorKind::NotMinimal, "base " + join(spec.base) + " is not minimal");
    }
    for (u64 d : spec.base) {
      if (checked_mul(spec.N, d) < spec.r + 2) {
        throw Error(ErrorKind::DomainError, "N*d - r must be at least 2 for every coordinate");
      }
    }
  } else {
    for (std::size_t i = 0; i < 3; ++i) {
      for (u64 v : {spec.uw_base.u[i], spec.uw_base.w[i]}) {
        if (v == 0) throw Error(ErrorKind::DomainError, "u and w entries must be positive");
        if (checked_mul(spec.N, v) < spec.r + 1) {
          throw Error(ErrorKind::DomainError, "N*u - r and N*w - r must be positive");
        }
      }
    }
  }
  std::vector<std::string> warnings;
  if (4 * spec.r > spec.N) {
    warnings.push_back("r = " + std::to_string(spec.r) + " exceeds N/4 = " +
                       std::to_string(spec.N / 4.0) + "; finite-N effects dominate");
  }
  return warnings;
}

AdmissibleScan admissible_points(const NeighborhoodSpec& spec, const SweepOptions& opts) {
  if (spec.kind != LatticeKind::D) throw Error(ErrorKind::DomainError, "expected a d-lattice spec");
  validate(spec);
  Accum all = sweep_d_blocks(spec, opts, true, false);
  return {all.total, all.coprime, all.admissible, std::move(all.points)};
}

double k_finite_correction(std::span<const u64> base, u64 N, u64 r) {
  const double n = static_cast<double>(N);
  const double ratio = static_cast<double>(r) / n;
  double sum = 0.0, inv_root = 1.0;
  for (u64 d : base) {
    sum += static_cast<double>(d);
    inv_root /= std::sqrt(static_cast<double>(d) - ratio);
  }
  return (sum + (3.0 * static_cast<double>(r) - 1.0) / n) * inv_root / std::sqrt(n);
}

EstimatorReport d_lattice_sweep(const NeighborhoodSpec& spec, const SweepOptions& opts) {
  if (spec.kind != LatticeKind::D) throw Error(ErrorKind::DomainError, "expected a d-lattice spec");
  const auto start = std::chrono::steady_clock::now();
  EstimatorReport rep;
  rep.spec = spec;
  rep.warnings = validate(spec);
  const Accum all = sweep_d_blocks(spec, opts, false, true);
  rep.total_points = all.total;
  rep.coprime_count = all.coprime;
  rep.admissible_count = all.admissible;
  rep.symmetric_count = all.symmetric;
  rep.sum_conductor = all.sum_c;
  rep.sum_genus = all.sum_g;
  rep.sum_nongaps = all.sum_ng;
  rep.sum_root_volume = all.sum_root;
  rep.density = all.total ? static_cast<double>(all.coprime) / static_cast<double>(all.total) : 0.0;
  if (spec.base.size() == 3) {
    rep.K_lower_bound = std::sqrt(3.0) - k_finite_correction(spec.base, spec.N, spec.r);
  }
  if (all.admissible == 0) {
    rep.empty_reason = "no admissible point in the neighbourhood";
  } else {
    const double c = to_real(all.sum_c);
    rep.K_est = c / all.sum_root;
    rep.p_est = to_real(all.sum_ng) / c;
    rep.q_est = to_real(all.sum_g - all.sum_ng) / c;
    rep.symmetric_fraction =
        static_cast<double>(all.symmetric) / static_cast<double>(all.admissible);
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

EstimatorReport k_estimator(const NeighborhoodSpec& spec, const SweepOptions& opts) {
  return d_lattice_sweep(spec, opts);
}

EstimatorReport p_q_estimators(const NeighborhoodSpec& spec, const SweepOptions& opts) {
  return d_lattice_sweep(spec, opts);
}

EstimatorReport symmetric_fraction(const NeighborhoodSpec& spec, const SweepOptions& opts) {
  EstimatorReport rep = d_lattice_sweep(spec, opts);
  if (rep.admissible_count == 0) {
    throw Error(ErrorKind::EmptyAdmissibleSet, "no admissible point around N*" + join(spec.base));
  }
  return rep;
}

EstimatorReport uw_sweep(const NeighborhoodSpec& spec, const SweepOptions& opts) {
  if (spec.kind != LatticeKind::UW) throw Error(ErrorKind::DomainError, "expected a (u,w) spec");
  const auto start = std::chrono::steady_clock::now();
  EstimatorReport rep;
  rep.spec = spec;
  rep.warnings = validate(spec);
  const u64 total = spec.point_count();
  if (!spec.sampling && total > opts.exhaustive_budget) {
    throw Error(ErrorKind::BudgetExceeded,
                std::to_string(total) + " points exceed the exhaustive budget of " +
                    std::to_string(opts.exhaustive_budget) + "; use sampled mode");
  }
  const u64 blocks = (total + kUWBlock - 1) / kUWBlock;
  auto parts = run_blocks<Accum>(blocks, opts.threads, [&](std::size_t b) {
    Accum acc;
    std::array<i64, 6> off{};
    const u64 end = std::min(total, (b + 1) * kUWBlock);
    for (u64 idx = b * kUWBlock; idx < end; ++idx) {
      ++acc.total;
      offsets_of(spec, idx, off);
      UWPair p;
      for (std::size_t i = 0; i < 3; ++i) {
        p.u[i] = shifted(spec.N * spec.uw_base.u[i], off[i]);
        p.w[i] = shifted(spec.N * spec.uw_base.w[i], off[3 + i]);
      }
      const auto d = generators_from_uw(p);
      if (gcd_of(d) != 1) continue;
      ++acc.coprime;
      ++acc.admissible;
      const ClosedFormTerms t = closed_form_terms(p);
      acc.sum_c += t.conductor;
      acc.sum_g += t.twice_genus / 2;
      acc.sum_min += t.min_a3b3;
      const long double volume = static_cast<long double>(d[0]) * static_cast<long double>(d[1]) *
                                 static_cast<long double>(d[2]);
      acc.sum_root += static_cast<double>(std::sqrt(volume));
    }
    return acc;
  });
  Accum all;
  for (const Accum& a : parts) all.merge(a);

  rep.total_points = all.total;
  rep.coprime_count = all.coprime;
  rep.admissible_count = all.admissible;
  rep.sum_conductor = all.sum_c;
  rep.sum_genus = all.sum_g;
  rep.sum_min_a3b3 = all.sum_min;
  rep.sum_root_volume = all.sum_root;
  rep.density = all.total ? static_cast<double>(all.coprime) / static_cast<double>(all.total) : 0.0;
  rep.K_closed = k_closed_form(spec.uw_base);
  rep.Q_closed = q_closed_form(spec.uw_base);
  if (all.admissible == 0) {
    rep.empty_reason = "no admissible point in the neighbourhood";
  } else {
    const double c = to_real(all.sum_c);
    rep.K_est = c / all.sum_root;
    rep.q_est = to_real(all.sum_min) / c;
    rep.p_est = p_from_q(*rep.q_est);
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace numsg
