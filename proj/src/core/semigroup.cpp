#include "numsg/semigroup.hpp"

#include <algorithm>
#include <string>

#include "numsg/simd.hpp"

namespace numsg {

namespace {

std::string tuple_str(std::span<const u64> gens) {
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(gens[i]);
  }
  return out + ")";
}

// Inverse of a modulo m, gcd(a, m) = 1, m >= 2.
u64 mod_inverse(u64 a, u64 m) {
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  old_s %= static_cast<__int128>(m);
  if (old_s < 0) old_s += m;
  return static_cast<u64>(old_s);
}

// Apery set of an already validated, sorted, deduplicated tuple.
std::vector<u64> apery_sorted(std::span<const u64> sorted) {
  const u64 d1 = sorted.front();
  if (checked_mul(d1, sorted.back()) >= simd::kUnreached) {
    throw Error(ErrorKind::Overflow, "generators too large for Apery relaxation: " +
                                         tuple_str(sorted));
  }
  std::vector<u64> dist(d1, simd::kUnreached);
  dist[0] = 0;
  if (d1 == 1) return dist;

  std::vector<std::pair<std::size_t, u64>> steps;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const std::size_t shift = sorted[i] % d1;
    if (shift != 0) steps.emplace_back(shift, sorted[i]);
  }
  // Every shortest path has fewer than d1 edges, so d1 full rounds reach the
  // fixed point; one more confirms it.
  for (u64 round = 0; round <= d1; ++round) {
    bool changed = false;
    for (const auto& [shift, weight] : steps) {
      changed |= simd::relax_rotated(dist, shift, weight);
    }
    if (!changed) return dist;
  }
  throw Error(ErrorKind::DomainError, "Apery relaxation did not converge for " + tuple_str(sorted));
}

}  // namespace

GeneratorTuple::GeneratorTuple(std::initializer_list<u64> gens) : gens_(gens) {}
GeneratorTuple::GeneratorTuple(std::vector<u64> gens) : gens_(std::move(gens)) {}

std::vector<u64> GeneratorTuple::sorted_unique() const {
  std::vector<u64> out = gens_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

u64 GeneratorTuple::smallest() const {
  if (gens_.empty()) throw Error(ErrorKind::DomainError, "empty generator tuple");
  return *std::min_element(gens_.begin(), gens_.end());
}

void require_numerical(const GeneratorTuple& gens) {
  if (gens.size() == 0) throw Error(ErrorKind::DomainError, "empty generator tuple");
  for (u64 g : gens.gens()) {
    if (g == 0) throw Error(ErrorKind::DomainError, "generators must be positive");
  }
  if (gens.gcd() != 1) {
    throw Error(ErrorKind::NonCoprime, "gcd" + tuple_str(gens.gens()) + " = " +
                                           std::to_string(gens.gcd()) +
                                           ", semigroup has an infinite complement");
  }
  if (gens.smallest() == 1) {
    throw Error(ErrorKind::DomainError,
                "multiplicity 1: " + tuple_str(gens.gens()) + " generates all of N");
  }
}

bool in_two_generated(u64 s, u64 a, u64 b) {
  if (s == 0) return true;
  if (a == 0 && b == 0) return false;
  if (a == 0) return s % b == 0;
  if (b == 0) return s % a == 0;
  const u64 g = std::gcd(a, b);
  if (s % g != 0) return false;
  const u64 ar = a / g, br = b / g, sr = s / g;
  if (br == 1) return true;
  // Least x >= 0 with x*ar = sr (mod br); representable iff x*ar <= sr.
  const u64 x = static_cast<u64>(static_cast<u128>(sr % br) * mod_inverse(ar, br) % br);
  return static_cast<u128>(x) * ar <= sr;
}

bool is_member(u64 s, const GeneratorTuple& gens) {
  if (s == 0) return true;
  std::vector<u64> v = gens.sorted_unique();
  v.erase(std::remove(v.begin(), v.end(), u64{0}), v.end());
  if (v.empty()) return false;
  const u64 g = gcd_of(v);
  if (s % g != 0) return false;
  for (u64& x : v) x /= g;
  s /= g;
  if (v.front() == 1) return true;
  if (v.size() == 1) return s % v.front() == 0;
  if (v.size() == 2) return in_two_generated(s, v[0], v[1]);
  const std::vector<u64> ap = apery_sorted(v);
  return s >= ap[s % v.front()];
}

std::vector<u64> apery_set(const GeneratorTuple& gens) {
  require_numerical(gens);
  return apery_sorted(gens.sorted_unique());
}

BasicInvariants basic_invariants(const GeneratorTuple& gens) {
  require_numerical(gens);
  const std::vector<u64> sorted = gens.sorted_unique();
  const u64 d1 = sorted.front();
  const std::vector<u64> ap = apery_sorted(sorted);
  BasicInvariants out;
  u64 top = 0;
  for (u64 a : ap) {
    top = std::max(top, a);
    out.genus += a / d1;  // gaps in a residue class: the multiples of d1 below its Apery element
  }
  out.frobenius = top - d1;
  out.conductor = out.frobenius + 1;
  out.nongaps = out.conductor - out.genus;
  return out;
}

SemigroupProfile profile(const GeneratorTuple& gens) {
  require_numerical(gens);
  const std::vector<u64> sorted = gens.sorted_unique();
  const u64 d1 = sorted.front();
  const std::vector<u64> ap = apery_sorted(sorted);

  SemigroupProfile out;
  u64 top = 0;
  for (u64 c = 0; c < d1; ++c) {
    top = std::max(top, ap[c]);
    for (u64 x = c; x < ap[c]; x += d1) out.gaps.push_back(x);
  }
  std::sort(out.gaps.begin(), out.gaps.end());
  out.frobenius = top - d1;
  out.conductor = out.frobenius + 1;
  out.genus = out.gaps.size();
  out.nongaps = out.conductor - out.genus;
  out.symmetric = 2 * out.genus == out.conductor;

  auto member = [&](u64 x) { return x >= ap[x % d1]; };
  // Pseudo-Frobenius numbers are w - d1 for the Apery elements w that are
  // maximal under w <= w' iff w' - w in S.
  for (u64 a : ap) {
    if (a == 0) continue;
    const bool maximal = std::none_of(ap.begin(), ap.end(), [&](u64 b) {
      return b > a && member(b - a);
    });
    if (maximal) out.pseudo_frobenius.push_back(a - d1);
  }
  std::sort(out.pseudo_frobenius.begin(), out.pseudo_frobenius.end());
  out.type = out.pseudo_frobenius.size();
  out.p = Rational(out.nongaps, out.conductor);
  out.q = Rational(out.genus - out.nongaps, out.conductor);
  return out;
}

bool is_minimal_generating_set(const GeneratorTuple& gens) {
  const auto g = gens.gens();
  if (g.empty()) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) return false;
    std::vector<u64> others;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (j != i) others.push_back(g[j]);
    }
    if (others.empty()) continue;
    const bool redundant = others.size() == 2 ? in_two_generated(g[i], others[0], others[1])
                                              : is_member(g[i], GeneratorTuple(others));
    if (redundant) return false;
  }
  return true;
}

std::vector<u64> minimal_generators(const GeneratorTuple& gens) {
  std::vector<u64> kept;
  for (u64 x : gens.sorted_unique()) {
    if (x == 0) continue;
    // Ascending order: x can only be a combination of smaller kept elements.
    if (kept.empty() || !is_member(x, GeneratorTuple(kept))) kept.push_back(x);
  }
  return kept;
}

DerivedSemigroupResult derived_semigroup(const GeneratorTuple& gens) {
  if (gens.size() != 3) throw Error(ErrorKind::DomainError, "derived semigroup needs 3 generators");
  require_numerical(gens);
  const u64 d1 = gens[0], d2 = gens[1], d3 = gens[2];
  DerivedSemigroupResult out;
  out.g = {std::gcd(d2, d3), std::gcd(d3, d1), std::gcd(d1, d2)};
  // gcd(d1,d2,d3) = 1 makes g2 and g3 coprime, so g2*g3 | d1 (and cyclically).
  out.derived = GeneratorTuple{d1 / (out.g[1] * out.g[2]), d2 / (out.g[0] * out.g[2]),
                               d3 / (out.g[0] * out.g[1])};
  out.minimal_generator_count = minimal_generators(out.derived).size();
  return out;
}

bool is_symmetric_by_gcd_pair(const GeneratorTuple& gens) {
  if (gens.size() != 3) throw Error(ErrorKind::DomainError, "symmetry criterion needs 3 generators");
  require_numerical(gens);
  if (!is_minimal_generating_set(gens)) {
    throw Error(ErrorKind::NotMinimal, tuple_str(gens.gens()) + " is not a minimal generating set");
  }
  const std::array<u64, 3> d{gens[0], gens[1], gens[2]};
  if (std::gcd(d[0], d[1]) == 1 && std::gcd(d[1], d[2]) == 1 && std::gcd(d[0], d[2]) == 1) {
    return false;
  }
  for (std::size_t k = 0; k < 3; ++k) {
    const u64 di = d[(k + 1) % 3], dj = d[(k + 2) % 3];
    const u64 b = std::gcd(di, dj);
    if (b >= 2 && std::gcd(d[k], b) == 1 && in_two_generated(d[k], di / b, dj / b)) return true;
  }
  return false;
}

u64 two_generator_conductor(u64 d1, u64 d2) {
  if (d1 < 2 || d2 < 2) throw Error(ErrorKind::DomainError, "two-generator conductor needs d1, d2 >= 2");
  if (std::gcd(d1, d2) != 1) {
    throw Error(ErrorKind::NonCoprime, "gcd(" + std::to_string(d1) + "," + std::to_string(d2) +
                                           ") != 1");
  }
  return checked_mul(d1 - 1, d2 - 1);
}

}  // namespace numsg
