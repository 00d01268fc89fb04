// Compiled with -mavx2 -mno-fma; only reached through dispatch after a CPUID check.

#include <immintrin.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "numsg/simd.hpp"

namespace numsg::simd::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

// Distances stay below 2^63, so the signed 64-bit compare orders them correctly.
inline bool relax_segment(std::uint64_t* dst, const std::uint64_t* src, std::size_t count,
                          std::uint64_t weight) {
  const __m256i w = _mm256_set1_epi64x(static_cast<long long>(weight));
  __m256i any = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= count; i += kLanes) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i cand = _mm256_add_epi64(s, w);
    const __m256i lower = _mm256_cmpgt_epi64(d, cand);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_blendv_epi8(d, cand, lower));
    any = _mm256_or_si256(any, lower);
  }
  bool changed = !_mm256_testz_si256(any, any);
  for (; i < count; ++i) {
    const std::uint64_t candidate = src[i] + weight;
    if (candidate < dst[i]) {
      dst[i] = candidate;
      changed = true;
    }
  }
  return changed;
}

}  // namespace

bool relax_rotated(std::span<std::uint64_t> dist, std::size_t shift, std::uint64_t weight) {
  // With shift < 4 a vector would read lanes it is about to write, which the
  // sequential reference reads after writing. Keep the reference semantics.
  if (shift < kLanes) return scalar::relax_rotated(dist, shift, weight);
  const std::size_t n = dist.size();
  std::uint64_t* d = dist.data();
  bool changed = relax_segment(d, d + (n - shift), shift, weight);
  changed |= relax_segment(d + shift, d, n - shift, weight);
  return changed;
}

void l_function_batch(std::span<const double> r1, std::span<const double> r2,
                      std::span<const double> r3, std::span<double> out) {
  const __m256d one = _mm256_set1_pd(1.0);
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d a = _mm256_loadu_pd(r1.data() + i);
    const __m256d b = _mm256_loadu_pd(r2.data() + i);
    const __m256d c = _mm256_loadu_pd(r3.data() + i);
    const __m256d pa = _mm256_add_pd(one, a);
    const __m256d pb = _mm256_add_pd(one, b);
    const __m256d pc = _mm256_add_pd(one, c);
    const __m256d abc = _mm256_mul_pd(_mm256_mul_pd(a, b), c);
    const __m256d top = _mm256_max_pd(abc, one);
    const __m256d num = _mm256_add_pd(_mm256_mul_pd(_mm256_mul_pd(pa, pb), pc), top);
    const __m256d f1 = _mm256_add_pd(_mm256_add_pd(one, _mm256_mul_pd(b, c)), b);
    const __m256d f2 = _mm256_add_pd(_mm256_add_pd(one, _mm256_mul_pd(c, a)), c);
    const __m256d f3 = _mm256_add_pd(_mm256_add_pd(one, _mm256_mul_pd(a, b)), a);
    const __m256d den = _mm256_mul_pd(_mm256_mul_pd(f1, f2), f3);
    _mm256_storeu_pd(out.data() + i, _mm256_div_pd(_mm256_mul_pd(num, num), den));
  }
  if (i < n) {
    scalar::l_function_batch(r1.subspan(i), r2.subspan(i), r3.subspan(i), out.subspan(i));
  }
}

}  // namespace numsg::simd::avx2
