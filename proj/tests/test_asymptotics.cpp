#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "numsg/asymptotics.hpp"
#include "oracle.hpp"

using namespace numsg;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::IoError;
}

struct OracleSums {
  u64 total = 0, coprime = 0, admissible = 0, symmetric = 0;
  u64 sum_c = 0, sum_g = 0, sum_ng = 0;
};

OracleSums oracle_sweep(const std::vector<u64>& base, u64 N, int r) {
  OracleSums s;
  const std::size_t m = base.size();
  std::vector<int> j(m, -r);
  while (true) {
    std::vector<u64> p(m);
    for (std::size_t i = 0; i < m; ++i) p[i] = N * base[i] + j[i];
    ++s.total;
    if (oracle::gcd_all(p) == 1) {
      ++s.coprime;
      if (oracle::is_minimal(p)) {
        ++s.admissible;
        const auto inv = oracle::invariants(p);
        s.sum_c += inv.conductor;
        s.sum_g += inv.genus;
        s.sum_ng += inv.nongaps;
        s.symmetric += inv.symmetric;
      }
    }
    std::size_t k = m;
    while (k > 0 && j[k - 1] == r) j[--k] = -r;
    if (k == 0) break;
    ++j[k - 1];
  }
  return s;
}

}  // namespace

TEST(Asymptotics, DLatticeSumsMatchOracle) {
  for (const auto& [base, N, r] : std::vector<std::tuple<std::vector<u64>, u64, u64>>{
           {{3, 5, 7}, 10, 2}, {{3, 4, 5}, 6, 2}, {{3, 5}, 20, 3}, {{5, 6, 7}, 4, 1}}) {
    const auto rep = d_lattice_sweep(NeighborhoodSpec::d_lattice(base, N, r), {1});
    const OracleSums o = oracle_sweep(base, N, static_cast<int>(r));
    EXPECT_EQ(rep.total_points, o.total);
    EXPECT_EQ(rep.coprime_count, o.coprime);
    EXPECT_EQ(rep.admissible_count, o.admissible);
    EXPECT_EQ(rep.symmetric_count, o.symmetric);
    EXPECT_EQ(static_cast<u64>(rep.sum_conductor), o.sum_c);
    EXPECT_EQ(static_cast<u64>(rep.sum_genus), o.sum_g);
    EXPECT_EQ(static_cast<u64>(rep.sum_nongaps), o.sum_ng);
    ASSERT_TRUE(rep.p_est && rep.q_est);
    EXPECT_NEAR(*rep.q_est, 1.0 - 2.0 * *rep.p_est, 1e-12);
  }
}

TEST(Asymptotics, AdmissiblePoints) {
  const auto spec = NeighborhoodSpec::d_lattice({3, 5, 7}, 10, 1);
  const AdmissibleScan s = admissible_points(spec);
  EXPECT_EQ(s.total_points, 27u);
  std::set<std::vector<u64>> seen;
  for (const auto& p : s.points) seen.insert(p.sorted_unique());
  EXPECT_FALSE(seen.count({30, 50, 70}));
  const bool expect_29_50_71 = oracle::gcd_all({29, 50, 71}) == 1 && oracle::is_minimal({29, 50, 71});
  EXPECT_EQ(seen.count({29, 50, 71}) == 1, expect_29_50_71);
  EXPECT_EQ(s.admissible_count, s.points.size());
  EXPECT_EQ(admissible_points(NeighborhoodSpec::d_lattice({3, 5, 7}, 10, 2)).admissible_count,
            oracle_sweep({3, 5, 7}, 10, 2).admissible);
}

TEST(Asymptotics, CenterNeverAdmissible) {
  for (u64 N : {2u, 5u, 12u}) {
    const auto s = admissible_points(NeighborhoodSpec::d_lattice({4, 5, 7}, N, 1));
    for (const auto& p : s.points) {
      EXPECT_FALSE(p[0] == 4 * N && p[1] == 5 * N && p[2] == 7 * N);
    }
  }
}

TEST(Asymptotics, ValidationErrors) {
  EXPECT_EQ(kind_of([] { validate(NeighborhoodSpec::d_lattice({3, 5, 7}, 4, 4)); }),
            ErrorKind::RadiusTooLarge);
  EXPECT_EQ(kind_of([] { validate(NeighborhoodSpec::d_lattice({3, 6, 7}, 10, 1)); }),
            ErrorKind::NotMinimal);
  EXPECT_EQ(kind_of([] { validate(NeighborhoodSpec::d_lattice({4, 6, 8}, 10, 1)); }),
            ErrorKind::NonCoprime);
  EXPECT_EQ(kind_of([] { validate(NeighborhoodSpec::d_lattice({3, 5, 7, 11}, 10, 1)); }),
            ErrorKind::DomainError);
  EXPECT_TRUE(validate(NeighborhoodSpec::d_lattice({3, 5, 7}, 100, 4)).empty());
  EXPECT_EQ(validate(NeighborhoodSpec::d_lattice({3, 5, 7}, 10, 4)).size(), 1u);

  UWPair uw;
  uw.u = {2, 1, 1};
  uw.w = {1, 1, 1};
  EXPECT_EQ(kind_of([&] { uw_sweep(NeighborhoodSpec::uw_lattice(uw, 100, 20)); }),
            ErrorKind::BudgetExceeded);
}

TEST(Asymptotics, EmptyAdmissibleSet) {
  // Every radius-1 cube holds admissible points, so use a one-point sample
  // that lands on a non-coprime point.
  std::optional<NeighborhoodSpec> empty;
  for (u64 seed = 0; seed < 200 && !empty; ++seed) {
    auto spec = NeighborhoodSpec::d_lattice({3, 5, 7}, 10, 1, Sampling{1, seed});
    if (d_lattice_sweep(spec).admissible_count == 0) empty = spec;
  }
  ASSERT_TRUE(empty.has_value());
  const auto rep = d_lattice_sweep(*empty);
  EXPECT_FALSE(rep.K_est.has_value());
  EXPECT_FALSE(rep.symmetric_fraction.has_value());
  EXPECT_TRUE(rep.empty_reason.has_value());
  EXPECT_EQ(kind_of([&] { symmetric_fraction(*empty); }), ErrorKind::EmptyAdmissibleSet);
}

TEST(Asymptotics, ThreadCountDoesNotChangeResults) {
  const auto spec = NeighborhoodSpec::d_lattice({3, 5, 7}, 50, 4);
  const auto a = d_lattice_sweep(spec, {1});
  const auto b = d_lattice_sweep(spec, {8});
  EXPECT_EQ(a.sum_conductor, b.sum_conductor);
  EXPECT_EQ(a.admissible_count, b.admissible_count);
  EXPECT_EQ(*a.K_est, *b.K_est);

  UWPair uw;
  uw.u = {2, 1, 1};
  uw.w = {1, 1, 1};
  const auto us = NeighborhoodSpec::uw_lattice(uw, 200, 3, Sampling{20000, 17});
  const auto x = uw_sweep(us, {1});
  const auto y = uw_sweep(us, {8});
  EXPECT_EQ(x.sum_conductor, y.sum_conductor);
  EXPECT_EQ(*x.K_est, *y.K_est);
}

TEST(Asymptotics, UWSweepMatchesBruteForcePointwise) {
  UWPair uw;
  uw.u = {2, 1, 1};
  uw.w = {1, 1, 1};
  const u64 N = 3;
  const auto rep = uw_sweep(NeighborhoodSpec::uw_lattice(uw, N, 1), {1});
  u64 admissible = 0, sum_c = 0;
  for (int code = 0; code < 729; ++code) {
    std::array<u64, 3> u{}, w{};
    int c = code;
    std::array<int, 6> j{};
    for (int i = 5; i >= 0; --i) {
      j[i] = c % 3 - 1;
      c /= 3;
    }
    for (int i = 0; i < 3; ++i) {
      u[i] = N * uw.u[i] + j[i];
      w[i] = N * uw.w[i] + j[3 + i];
    }
    const auto d = oracle::generators_from_uw(u, w);
    const std::vector<u64> g(d.begin(), d.end());
    if (oracle::gcd_all(g) != 1) continue;
    ++admissible;
    sum_c += oracle::invariants(g).conductor;
  }
  EXPECT_EQ(rep.admissible_count, admissible);
  EXPECT_EQ(static_cast<u64>(rep.sum_conductor), sum_c);
}

TEST(Asymptotics, UWSweepConverges) {
  UWPair uw;
  uw.u = {2, 1, 1};
  uw.w = {1, 1, 1};
  double last = 1.0;
  for (u64 N : {100u, 300u, 1000u}) {
    const auto rep = uw_sweep(NeighborhoodSpec::uw_lattice(uw, N, 5, Sampling{20000, 1}));
    const double err = std::abs(*rep.K_est - *rep.K_closed);
    EXPECT_LT(err, last);
    last = err;
  }
  EXPECT_NEAR(k_closed_form(uw), 14.0 / std::sqrt(60.0), 1e-14);
}

TEST(Asymptotics, SampledSweepIsReproducible) {
  const auto spec = NeighborhoodSpec::d_lattice({3, 5, 7}, 100, 4, Sampling{300, 99});
  const auto a = d_lattice_sweep(spec);
  const auto b = d_lattice_sweep(spec);
  EXPECT_EQ(a.sum_conductor, b.sum_conductor);
  const auto c = d_lattice_sweep(NeighborhoodSpec::d_lattice({3, 5, 7}, 100, 4, Sampling{300, 100}));
  EXPECT_NE(a.sum_conductor, c.sum_conductor);
}

TEST(Asymptotics, ZetaAgainstLibrary) {
  for (unsigned m = 2; m <= 8; ++m) EXPECT_NEAR(zeta(m), std::riemann_zeta(static_cast<double>(m)), 1e-13);
  EXPECT_NEAR(1.0 / zeta(2), 0.6079, 5e-5);
  EXPECT_NEAR(1.0 / zeta(3), 0.8319, 5e-5);
  EXPECT_NEAR(1.0 / zeta(4), 0.9239, 5e-5);
  EXPECT_EQ(kind_of([] { zeta(1); }), ErrorKind::DomainError);
}

TEST(Asymptotics, CoprimeDensity) {
  const auto a = coprime_density(2, 200000, 5, 2, 1'000'000, 1);
  const auto b = coprime_density(2, 200000, 5, 2, 1'000'000, 4);
  EXPECT_EQ(a.coprime, b.coprime);
  EXPECT_LT(a.deviation, 0.01);
}

TEST(Asymptotics, CounterStream) {
  EXPECT_EQ(detail::counter_hash(1, 2), detail::counter_hash(1, 2));
  EXPECT_NE(detail::counter_hash(1, 2), detail::counter_hash(2, 2));
  std::array<int, 7> hist{};
  for (u64 i = 0; i < 70000; ++i) ++hist[detail::uniform_below(3, i, 7)];
  for (int h : hist) EXPECT_NEAR(h, 10000, 500);
}

TEST(Asymptotics, FillDensityTinyCase) {
  const FillHistogram h = fill_density(GeneratorTuple{3, 4, 5}, 3);
  ASSERT_EQ(h.bins.size(), 3u);
  EXPECT_EQ(h.bins[0].lo, 0u);
  EXPECT_EQ(h.bins[2].hi, 3u);
  EXPECT_DOUBLE_EQ(h.bins[0].occupancy, 1.0);
  EXPECT_DOUBLE_EQ(h.bins[1].occupancy, 0.0);
  EXPECT_DOUBLE_EQ(h.bins[2].occupancy, 0.0);
  EXPECT_EQ(h.mean_occupancy, Rational(1, 3));
  EXPECT_EQ(kind_of([] { fill_density(GeneratorTuple{3, 4, 5}, 4); }), ErrorKind::DegenerateRange);
}

TEST(Asymptotics, FillDensityLargeTriple) {
  const GeneratorTuple t{101, 102, 103};
  const FillHistogram h = fill_density(t, 20);
  EXPECT_EQ(h.mean_occupancy, profile(t).p);
  EXPECT_EQ(h.conjectured_integral, Rational(h.conductor, 3));
  EXPECT_NEAR(h.conjectured_integral_quadrature, h.conductor / 3.0, 1e-9 * h.conductor);
  u64 total = 0;
  for (const auto& b : h.bins) total += b.count;
  EXPECT_EQ(total, profile(t).nongaps);
  EXPECT_GT(h.bins.back().occupancy, h.bins.front().occupancy);
}
