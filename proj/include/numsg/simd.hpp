#pragma once

// Data-parallel inner loops with a scalar reference and an AVX2 variant
// chosen at runtime. Both variants perform the same IEEE operations in the
// same order, so results are bit-identical; tests/test_simd.cpp holds them
// to that.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace numsg::simd {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

// Best ISA the running CPU supports.
Isa detected_isa() noexcept;

// ISA the dispatching entry points use: the override if one is set,
// otherwise detected_isa(). Requesting Avx2 on a CPU without it falls back
// to Scalar.
Isa active_isa() noexcept;
void set_isa_override(std::optional<Isa> isa) noexcept;

// Sentinel for "not reached yet" in shortest-distance arrays. Small enough
// that sentinel + weight never wraps for desk-scale weights.
inline constexpr std::uint64_t kUnreached = std::uint64_t{1} << 62;

// In-place relaxation along the rotation k -> (k + shift) mod n:
//   dist[(k + shift) mod n] = min(dist[(k + shift) mod n], dist[k] + weight)
// swept over destinations in increasing order. Returns true if any entry
// decreased. Requires 0 < shift < dist.size().
bool relax_rotated(std::span<std::uint64_t> dist, std::size_t shift, std::uint64_t weight);

// out[i] = L(r1[i], r2[i], r3[i]) for the squared conductor ratio
//   L = [(1+a)(1+b)(1+c) + max{1, abc}]^2 / [(1+bc+b)(1+ca+c)(1+ab+a)].
void l_function_batch(std::span<const double> r1, std::span<const double> r2,
                      std::span<const double> r3, std::span<double> out);

namespace scalar {
bool relax_rotated(std::span<std::uint64_t> dist, std::size_t shift, std::uint64_t weight);
void l_function_batch(std::span<const double> r1, std::span<const double> r2,
                      std::span<const double> r3, std::span<double> out);
}  // namespace scalar

#if defined(__x86_64__)
namespace avx2 {
bool relax_rotated(std::span<std::uint64_t> dist, std::size_t shift, std::uint64_t weight);
void l_function_batch(std::span<const double> r1, std::span<const double> r2,
                      std::span<const double> r3, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace numsg::simd
