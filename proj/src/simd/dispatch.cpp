#include <atomic>

#include "numsg/simd.hpp"

namespace numsg::simd {

namespace {

// -1: no override; otherwise the Isa value.
std::atomic<int> g_override{-1};

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

Isa detected_isa() noexcept {
#if defined(__x86_64__)
  static const bool has_avx2 = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  if (has_avx2) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

Isa active_isa() noexcept {
  const int forced = g_override.load(std::memory_order_relaxed);
  if (forced < 0) return detected_isa();
  const auto isa = static_cast<Isa>(forced);
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) return Isa::Scalar;
  return isa;
}

void set_isa_override(std::optional<Isa> isa) noexcept {
  g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

bool relax_rotated(std::span<std::uint64_t> dist, std::size_t shift, std::uint64_t weight) {
#if defined(__x86_64__)
  if (active_isa() == Isa::Avx2) return avx2::relax_rotated(dist, shift, weight);
#endif
  return scalar::relax_rotated(dist, shift, weight);
}

void l_function_batch(std::span<const double> r1, std::span<const double> r2,
                      std::span<const double> r3, std::span<double> out) {
#if defined(__x86_64__)
  if (active_isa() == Isa::Avx2) {
    avx2::l_function_batch(r1, r2, r3, out);
    return;
  }
#endif
  scalar::l_function_batch(r1, r2, r3, out);
}

}  // namespace numsg::simd
