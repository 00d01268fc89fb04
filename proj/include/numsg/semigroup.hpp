#pragma once

// Exact per-semigroup invariants of S(d1, ..., dm): membership, the Apery
// set, Frobenius number, conductor, genus, pseudo-Frobenius set and type,
// plus the symmetry and minimality criteria for three generators.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "numsg/arith.hpp"

namespace numsg {

// Generators in caller order. Analyses that need a canonical form use
// sorted_unique(); the caller's labelling is kept because relation matrices
// and the (u, w) coordinates are order-sensitive.
class GeneratorTuple {
 public:
  GeneratorTuple() = default;
  GeneratorTuple(std::initializer_list<u64> gens);
  explicit GeneratorTuple(std::vector<u64> gens);

  std::span<const u64> gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  u64 operator[](std::size_t i) const { return gens_.at(i); }

  std::vector<u64> sorted_unique() const;
  u64 gcd() const { return gcd_of(gens_); }
  u64 smallest() const;

  friend bool operator==(const GeneratorTuple&, const GeneratorTuple&) = default;

 private:
  std::vector<u64> gens_;
};

struct SemigroupProfile {
  u64 frobenius = 0;
  u64 conductor = 0;
  u64 genus = 0;
  u64 nongaps = 0;
  std::vector<u64> gaps;
  std::vector<u64> pseudo_frobenius;
  u64 type = 0;
  bool symmetric = false;
  Rational p;  // nongaps / conductor
  Rational q;  // (genus - nongaps) / conductor
};

// The O(d1) subset of a profile used by lattice sweeps.
struct BasicInvariants {
  u64 frobenius = 0;
  u64 conductor = 0;
  u64 genus = 0;
  u64 nongaps = 0;
  bool symmetric() const noexcept { return 2 * genus == conductor; }
};

struct DerivedSemigroupResult {
  std::array<u64, 3> g{};  // g[0] = gcd(d2,d3), g[1] = gcd(d3,d1), g[2] = gcd(d1,d2)
  GeneratorTuple derived;
  std::size_t minimal_generator_count = 0;
};

// s is a nonnegative integer combination of gens. Total: any gcd, any size.
bool is_member(u64 s, const GeneratorTuple& gens);

// s = x*a + y*b with x, y >= 0. O(log) via a modular inverse.
bool in_two_generated(u64 s, u64 a, u64 b);

// For each residue c mod d1 (d1 = smallest generator), the least element of
// S congruent to c. Index c holds that element.
std::vector<u64> apery_set(const GeneratorTuple& gens);

BasicInvariants basic_invariants(const GeneratorTuple& gens);
SemigroupProfile profile(const GeneratorTuple& gens);

bool is_minimal_generating_set(const GeneratorTuple& gens);

// Smallest subset of the (deduplicated) tuple generating the same semigroup.
std::vector<u64> minimal_generators(const GeneratorTuple& gens);

DerivedSemigroupResult derived_semigroup(const GeneratorTuple& gens);

// Symmetry decided by the gcd-pair presentation: some pair has
// b = gcd(di, dj) >= 2, gcd(dk, b) = 1 and dk in S(di/b, dj/b).
bool is_symmetric_by_gcd_pair(const GeneratorTuple& gens);

u64 two_generator_conductor(u64 d1, u64 d2);

// Throws NonCoprime / DomainError when gens do not define a numerical
// semigroup with multiplicity >= 2.
void require_numerical(const GeneratorTuple& gens);

}  // namespace numsg
