#pragma once

// The minimal-relation matrix of a three-generated semigroup, the
// (u, w) standard form of non-symmetric semigroups, the closed forms for
// conductor, genus, K and Q built on it, and the squared-ratio function
// L(rho) whose global minimum is 3 at rho = (1, 1, 1).

#include <array>
#include <optional>
#include <string>

#include "numsg/arith.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

// a[j][j] * d_j = a[j][k] * d_k + a[j][l] * d_l for each row j. Off-diagonal
// entries are stored as magnitudes.
struct RelationMatrix {
  std::array<std::array<u64, 3>, 3> a{};

  friend bool operator==(const RelationMatrix&, const RelationMatrix&) = default;
};

struct UWPair {
  std::array<u64, 3> u{};
  std::array<u64, 3> w{};

  u64 A2() const;
  u64 A3() const;
  u64 B2() const;
  u64 B3() const;
  // prod_i (u_i + w_i)
  u64 diagonal_product() const;
  // u1*w2 + u2*w3 + u3*w1
  u64 cross_term() const;

  friend bool operator==(const UWPair&, const UWPair&) = default;
};

struct RhoVector {
  std::array<double, 3> rho{};

  static RhoVector from_uw(const UWPair& uw);

  double gamma1() const { return rho[0] + rho[1] + rho[2]; }
  double gamma2() const { return rho[0] * rho[1] + rho[1] * rho[2] + rho[2] * rho[0]; }
  double gamma3() const { return rho[0] * rho[1] * rho[2]; }
  double gamma4() const { return (rho[0] - rho[1]) * (rho[1] - rho[2]) * (rho[2] - rho[0]); }
  // Gamma4^2 written through Gamma1..Gamma3 (the discriminant of the cubic with roots rho).
  double gamma4_squared_from_invariants() const;
};

RelationMatrix minimal_relation_matrix(const GeneratorTuple& gens);

// Standard form of a non-symmetric triple, in the caller's labelling.
UWPair uw_decomposition(const GeneratorTuple& gens);

// d1 = u2u3 + w2w3 + u2w3 and cyclically. Labelled, not sorted.
std::array<u64, 3> generators_from_uw(const UWPair& uw);

// Raw closed-form terms, no validity check. Used pointwise by the (u,w) sweep.
struct ClosedFormTerms {
  u64 conductor = 0;
  u64 twice_genus = 0;
  u64 min_a3b3 = 0;
  u64 max_a3b3 = 0;
  u64 diagonal_product = 0;
};
// Throws InvalidUW if the signed conductor expression is not positive.
ClosedFormTerms closed_form_terms(const UWPair& uw);

// Throws InvalidUW unless generators_from_uw(uw) has gcd 1 and is minimal.
void validate_uw(const UWPair& uw);

u64 conductor_closed_form(const UWPair& uw);
u64 genus_closed_form(const UWPair& uw);
double k_closed_form(const UWPair& uw);
Rational q_closed_form_exact(const UWPair& uw);
double q_closed_form(const UWPair& uw);
double p_from_q(double q);

double conductor_lower_bound(const GeneratorTuple& gens, bool symmetric);
// Exact integer form of conductor_lower_bound(gens, symmetric) <= conductor.
bool conductor_lower_bound_holds(const GeneratorTuple& gens, u64 conductor, bool symmetric);
// g_m * (d1...dm)^(1/(m-1)) - sum(d) + 1 with g_m = ((m-1)!)^(1/(m-1)). Evaluator only.
double conductor_lower_bound_general(const GeneratorTuple& gens);

double l_function(const RhoVector& rho);

struct LGridSpec {
  double lo = 0.125;
  double hi = 8.0;
  std::size_t points = 33;
  std::size_t refine_points = 21;
  unsigned threads = 1;
};

struct LPoint {
  double value = 0.0;
  std::array<double, 3> at{};
};

struct LMinimum {
  LPoint grid;
  LPoint refined;  // never above grid
  std::array<LPoint, 3> planes;  // restricted to rho1=rho2, rho2=rho3, rho3=rho1
};

LMinimum minimize_l(const LGridSpec& spec);

// Exhaustive survey of all minimal coprime triples d1 < d2 < d3 <= dmax,
// cross-checking every identity between brute force and closed forms.
struct ScanSummary {
  u64 dmax = 0;
  u64 triples = 0;
  u64 symmetric = 0;
  u64 non_symmetric = 0;
  u64 structure_failures = 0;  // C = F + 1, G + nongaps = C, max(gaps) = F
  u64 closed_form_mismatches = 0;
  u64 roundtrip_failures = 0;
  u64 tri_equivalence_failures = 0;
  u64 type_failures = 0;
  u64 genus_type_bound_failures = 0;
  u64 lower_bound_failures = 0;
  u64 derived_over_two = 0;      // symmetric triples whose derived semigroup needs 3 generators
  u64 derived_single = 0;        // symmetric triples whose derived semigroup is N
  u64 derived_nonsym_not_three = 0;
  u64 genus_twice_nongaps_hits = 0;  // G = 2 * nongaps
  u64 genus_twice_nongaps_outside_family = 0;
  std::optional<std::string> first_failure;

  u64 failures() const {
    return structure_failures + closed_form_mismatches + roundtrip_failures + tri_equivalence_failures + type_failures +
           genus_type_bound_failures + lower_bound_failures + derived_over_two + derived_nonsym_not_three +
           genus_twice_nongaps_outside_family;
  }
};

ScanSummary scan_triples(u64 dmax);

}  // namespace numsg
