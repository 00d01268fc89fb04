#include <gtest/gtest.h>

#include <bit>
#include <cstring>
#include <random>
#include <vector>

#include "numsg/semigroup.hpp"
#include "numsg/simd.hpp"

namespace simd = numsg::simd;

namespace {

std::vector<std::uint64_t> random_dist(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint64_t> d(n);
  std::uniform_int_distribution<std::uint64_t> pick(0, 1000);
  for (auto& x : d) x = pick(rng) < 100 ? simd::kUnreached : pick(rng) * 7;
  return d;
}

bool avx2_available() { return simd::detected_isa() == simd::Isa::Avx2; }

struct IsaGuard {
  ~IsaGuard() { simd::set_isa_override(std::nullopt); }
};

}  // namespace

TEST(Simd, RelaxMatchesScalarOnEveryShift) {
  if (!avx2_available()) GTEST_SKIP() << "CPU lacks AVX2";
  std::mt19937_64 rng(11);
  for (std::size_t n : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 17u, 31u, 64u, 101u}) {
    for (std::size_t shift = 1; shift < n; ++shift) {
      for (int rep = 0; rep < 4; ++rep) {
        auto a = random_dist(rng, n);
        auto b = a;
        const std::uint64_t w = 1 + rng() % 50;
        const bool ca = simd::scalar::relax_rotated(a, shift, w);
        const bool cb = simd::avx2::relax_rotated(b, shift, w);
        ASSERT_EQ(a, b) << "n=" << n << " shift=" << shift;
        ASSERT_EQ(ca, cb);
      }
    }
  }
}

TEST(Simd, RelaxChainsWithinOneSweep) {
  // shift 1 on [0, inf, inf, inf]: an in-order sweep propagates the whole way.
  std::vector<std::uint64_t> d{0, simd::kUnreached, simd::kUnreached, simd::kUnreached};
  EXPECT_TRUE(simd::scalar::relax_rotated(d, 1, 5));
  EXPECT_EQ(d, (std::vector<std::uint64_t>{0, 5, 10, 15}));
  EXPECT_FALSE(simd::scalar::relax_rotated(d, 1, 5));
}

TEST(Simd, LBatchBitIdentical) {
  if (!avx2_available()) GTEST_SKIP() << "CPU lacks AVX2";
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> logr(-4.0, 4.0);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 13u, 1000u}) {
    std::vector<double> a(n), b(n), c(n), o1(n), o2(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = std::exp(logr(rng));
      b[i] = std::exp(logr(rng));
      c[i] = std::exp(logr(rng));
    }
    if (n >= 4) a[2] = b[2] = c[2] = 1.0;
    simd::scalar::l_function_batch(a, b, c, o1);
    simd::avx2::l_function_batch(a, b, c, o2);
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ(std::bit_cast<std::uint64_t>(o1[i]), std::bit_cast<std::uint64_t>(o2[i])) << i;
    }
  }
}

TEST(Simd, InvariantsIndependentOfIsa) {
  IsaGuard guard;
  std::vector<numsg::BasicInvariants> seen;
  for (auto isa : {simd::Isa::Scalar, simd::Isa::Avx2}) {
    simd::set_isa_override(isa);
    const auto inv = numsg::basic_invariants(numsg::GeneratorTuple{97, 131, 1009});
    seen.push_back(inv);
  }
  EXPECT_EQ(seen[0].conductor, seen[1].conductor);
  EXPECT_EQ(seen[0].genus, seen[1].genus);
}

TEST(Simd, OverrideAndNames) {
  IsaGuard guard;
  simd::set_isa_override(simd::Isa::Scalar);
  EXPECT_EQ(simd::active_isa(), simd::Isa::Scalar);
  simd::set_isa_override(std::nullopt);
  EXPECT_EQ(simd::active_isa(), simd::detected_isa());
  EXPECT_EQ(simd::to_string(simd::Isa::Avx2), "avx2");
  EXPECT_EQ(simd::to_string(simd::Isa::Scalar), "scalar");
}
