#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "numsg/simd.hpp"

namespace numsg::simd::scalar {

namespace {

inline bool relax_segment(std::uint64_t* dst, const std::uint64_t* src, std::size_t count,
                          std::uint64_t weight) {
  bool changed = false;
  for (std::size_t i = 0; i < count; ++i) {
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
  const std::size_t n = dist.size();
  std::uint64_t* d = dist.data();
  // Destinations [0, shift) read from the wrapped tail, [shift, n) from the head.
  bool changed = relax_segment(d, d + (n - shift), shift, weight);
  changed |= relax_segment(d + shift, d, n - shift, weight);
  return changed;
}

void l_function_batch(std::span<const double> r1, std::span<const double> r2,
                      std::span<const double> r3, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double a = r1[i];
    const double b = r2[i];
    const double c = r3[i];
    const double num = (1.0 + a) * (1.0 + b) * (1.0 + c) + std::max(1.0, a * b * c);
    const double den = (1.0 + b * c + b) * (1.0 + c * a + c) * (1.0 + a * b + a);
    out[i] = (num * num) / den;
  }
}

}  // namespace numsg::simd::scalar
