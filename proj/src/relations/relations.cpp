#include "numsg/relations.hpp"

#include <cmath>
#include <string>

namespace numsg {

namespace {

std::string triple_str(u64 a, u64 b, u64 c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::string uw_str(const UWPair& uw) {
  return "u=" + triple_str(uw.u[0], uw.u[1], uw.u[2]) +
         " w=" + triple_str(uw.w[0], uw.w[1], uw.w[2]);
}

void require_positive(const UWPair& uw) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (uw.u[i] == 0 || uw.w[i] == 0) {
      throw Error(ErrorKind::DomainError, "u and w entries must be positive: " + uw_str(uw));
    }
  }
}

u64 sum3(u64 a, u64 b, u64 c) { return checked_add(checked_add(a, b), c); }

}  // namespace

u64 UWPair::A2() const {
  return sum3(checked_mul(u[0], u[1]), checked_mul(u[2], u[0]), checked_mul(u[1], u[2]));
}
u64 UWPair::A3() const { return checked_mul(checked_mul(u[0], u[1]), u[2]); }
u64 UWPair::B2() const {
  return sum3(checked_mul(w[0], w[1]), checked_mul(w[2], w[0]), checked_mul(w[1], w[2]));
}
u64 UWPair::B3() const { return checked_mul(checked_mul(w[0], w[1]), w[2]); }
u64 UWPair::diagonal_product() const {
  return checked_mul(checked_mul(checked_add(u[0], w[0]), checked_add(u[1], w[1])),
                     checked_add(u[2], w[2]));
}
u64 UWPair::cross_term() const {
  return sum3(checked_mul(u[0], w[1]), checked_mul(u[1], w[2]), checked_mul(u[2], w[0]));
}

RhoVector RhoVector::from_uw(const UWPair& uw) {
  require_positive(uw);
  RhoVector out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.rho[i] = static_cast<double>(uw.u[i]) / static_cast<double>(uw.w[i]);
  }
  return out;
}

double RhoVector::gamma4_squared_from_invariants() const {
  const double g1 = gamma1(), g2 = gamma2(), g3 = gamma3();
  return g1 * g1 * g2 * g2 + 18.0 * g1 * g2 * g3 - 4.0 * g2 * g2 * g2 - 4.0 * g1 * g1 * g1 * g3 -
         27.0 * g3 * g3;
}

RelationMatrix minimal_relation_matrix(const GeneratorTuple& gens) {
  if (gens.size() != 3) throw Error(ErrorKind::DomainError, "relation matrix needs 3 generators");
  require_numerical(gens);
  if (!is_minimal_generating_set(gens)) {
    throw Error(ErrorKind::NotMinimal,
                triple_str(gens[0], gens[1], gens[2]) + " is not a minimal generating set");
  }
  const std::array<u64, 3> d{gens[0], gens[1], gens[2]};
  RelationMatrix m;
  for (std::size_t j = 0; j < 3; ++j) {
    const std::size_t k = (j + 1) % 3, l = (j + 2) % 3;
    // gcd(d_j, g) = 1, so v * d_j in S(d_k, d_l) forces g | v. Termination:
    // once v*d_j/g reaches the conductor of S(d_k/g, d_l/g) it is representable.
    const u64 g = std::gcd(d[k], d[l]);
    u64 v = g;
    if (v < 2) v = 2;
    while (!in_two_generated(checked_mul(v, d[j]), d[k], d[l])) v += g;
    const u64 target = v * d[j];

    u64 witnesses = 0;
    for (u64 x = 0; x * d[k] <= target; ++x) {
      const u64 rest = target - x * d[k];
      if (rest % d[l] != 0) continue;
      if (++witnesses == 1) {
        m.a[j][k] = x;
        m.a[j][l] = rest / d[l];
      }
    }
    if (witnesses != 1) {
      throw Error(ErrorKind::InconsistentMatrix,
                  std::to_string(witnesses) + " minimal witnesses for row " +
                      std::to_string(j + 1) + " of " + triple_str(d[0], d[1], d[2]));
    }
    m.a[j][j] = v;
    if (std::gcd(std::gcd(m.a[j][j], m.a[j][k]), m.a[j][l]) != 1) {
      throw Error(ErrorKind::InconsistentMatrix,
                  "row " + std::to_string(j + 1) + " of " + triple_str(d[0], d[1], d[2]) +
                      " has a common factor");
    }
  }
  return m;
}

UWPair uw_decomposition(const GeneratorTuple& gens) {
  if (gens.size() != 3) throw Error(ErrorKind::DomainError, "(u,w) form needs 3 generators");
  require_numerical(gens);
  if (!is_minimal_generating_set(gens)) {
    throw Error(ErrorKind::NotMinimal,
                triple_str(gens[0], gens[1], gens[2]) + " is not a minimal generating set");
  }
  if (basic_invariants(gens).symmetric()) {
    throw Error(ErrorKind::SymmetricInput, triple_str(gens[0], gens[1], gens[2]) +
                                               " is symmetric; the (u,w) form needs a "
                                               "non-symmetric semigroup");
  }
  const RelationMatrix m = minimal_relation_matrix(gens);
  const auto& a = m.a;
  UWPair uw;
  uw.u = {a[2][0], a[0][1], a[1][2]};
  uw.w = {a[1][0], a[2][1], a[0][2]};
  for (std::size_t j = 0; j < 3; ++j) {
    if (a[j][j] != uw.u[j] + uw.w[j]) {
      throw Error(ErrorKind::InconsistentMatrix,
                  "diagonal a" + std::to_string(j + 1) + std::to_string(j + 1) + " != u + w for " +
                      triple_str(gens[0], gens[1], gens[2]));
    }
  }
  const auto back = generators_from_uw(uw);
  if (back[0] != gens[0] || back[1] != gens[1] || back[2] != gens[2]) {
    throw Error(ErrorKind::InconsistentMatrix,
                uw_str(uw) + " reconstructs " + triple_str(back[0], back[1], back[2]) +
                    " instead of " + triple_str(gens[0], gens[1], gens[2]));
  }
  return uw;
}

std::array<u64, 3> generators_from_uw(const UWPair& uw) {
  require_positive(uw);
  const auto& u = uw.u;
  const auto& w = uw.w;
  return {sum3(checked_mul(u[1], u[2]), checked_mul(w[1], w[2]), checked_mul(u[1], w[2])),
          sum3(checked_mul(u[2], u[0]), checked_mul(w[2], w[0]), checked_mul(u[2], w[0])),
          sum3(checked_mul(u[0], u[1]), checked_mul(w[0], w[1]), checked_mul(u[0], w[1]))};
}

ClosedFormTerms closed_form_terms(const UWPair& uw) {
  require_positive(uw);
  const u64 a3 = uw.A3(), b3 = uw.B3();
  ClosedFormTerms t;
  t.diagonal_product = uw.diagonal_product();
  t.min_a3b3 = std::min(a3, b3);
  t.max_a3b3 = std::max(a3, b3);
  const u64 negative = sum3(uw.A2(), uw.B2(), uw.cross_term());
  const u64 base = checked_add(1, t.diagonal_product);
  const u64 c_positive = checked_add(base, t.max_a3b3);
  const u64 g_positive = checked_add(checked_add(base, a3), b3);
  if (c_positive <= negative) {
    throw Error(ErrorKind::InvalidUW, "conductor expression is not positive for " + uw_str(uw));
  }
  t.conductor = c_positive - negative;
  t.twice_genus = g_positive - negative;
  return t;
}

void validate_uw(const UWPair& uw) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (uw.u[i] == 0 || uw.w[i] == 0) {
      throw Error(ErrorKind::InvalidUW, "u and w entries must be positive: " + uw_str(uw));
    }
  }
  const auto d = generators_from_uw(uw);
  const GeneratorTuple gens{d[0], d[1], d[2]};
  if (gens.gcd() != 1) {
    throw Error(ErrorKind::InvalidUW, uw_str(uw) + " gives " + triple_str(d[0], d[1], d[2]) +
                                          " with gcd " + std::to_string(gens.gcd()));
  }
  if (!is_minimal_generating_set(gens)) {
    throw Error(ErrorKind::InvalidUW, uw_str(uw) + " gives non-minimal " +
                                          triple_str(d[0], d[1], d[2]));
  }
}

u64 conductor_closed_form(const UWPair& uw) {
  validate_uw(uw);
  return closed_form_terms(uw).conductor;
}

u64 genus_closed_form(const UWPair& uw) {
  validate_uw(uw);
  const ClosedFormTerms t = closed_form_terms(uw);
  if (t.twice_genus % 2 != 0) {
    throw Error(ErrorKind::ParityViolation,
                "2G = " + std::to_string(t.twice_genus) + " is odd for " + uw_str(uw));
  }
  if (t.twice_genus - t.conductor != t.min_a3b3) {
    throw Error(ErrorKind::InconsistentMatrix, "2G - C != min{A3,B3} for " + uw_str(uw));
  }
  return t.twice_genus / 2;
}

double k_closed_form(const UWPair& uw) {
  require_positive(uw);
  const auto d = generators_from_uw(uw);
  const u64 numerator = checked_add(uw.diagonal_product(), std::max(uw.A3(), uw.B3()));
  const long double volume =
      static_cast<long double>(d[0]) * static_cast<long double>(d[1]) * static_cast<long double>(d[2]);
  return static_cast<double>(static_cast<long double>(numerator) / std::sqrt(volume));
}

Rational q_closed_form_exact(const UWPair& uw) {
  require_positive(uw);
  const u64 a3 = uw.A3(), b3 = uw.B3();
  return Rational(std::min(a3, b3), checked_add(uw.diagonal_product(), std::max(a3, b3)));
}

double q_closed_form(const UWPair& uw) { return q_closed_form_exact(uw).to_double(); }

double p_from_q(double q) { return 0.5 * (1.0 - q); }

double conductor_lower_bound(const GeneratorTuple& gens, bool symmetric) {
  if (gens.size() != 3) throw Error(ErrorKind::DomainError, "lower bound needs 3 generators");
  require_numerical(gens);
  const u64 volume = checked_mul(checked_mul(gens[0], gens[1]), gens[2]);
  const long double sum = static_cast<long double>(sum3(gens[0], gens[1], gens[2]));
  const long double v = static_cast<long double>(volume);
  const long double lead = symmetric ? 2.0L * std::sqrt(v) : std::sqrt(3.0L) * std::sqrt(v + 1.0L);
  return static_cast<double>(lead - sum + 1.0L);
}

bool conductor_lower_bound_holds(const GeneratorTuple& gens, u64 conductor, bool symmetric) {
  if (gens.size() != 3) throw Error(ErrorKind::DomainError, "lower bound needs 3 generators");
  const u64 volume = checked_mul(checked_mul(gens[0], gens[1]), gens[2]);
  // lead <= R with R = C + sum(d) - 1, squared to stay in integers.
  const __int128 rhs = static_cast<__int128>(conductor) + gens[0] + gens[1] + gens[2] - 1;
  if (rhs < 0) return false;
  const u128 r2 = static_cast<u128>(rhs) * static_cast<u128>(rhs);
  const u128 lead2 = symmetric ? u128{4} * volume : u128{3} * (u128{volume} + 1);
  return lead2 <= r2;
}

double conductor_lower_bound_general(const GeneratorTuple& gens) {
  const std::size_t m = gens.size();
  if (m < 2) throw Error(ErrorKind::DomainError, "lower bound needs at least 2 generators");
  long double log_volume = 0.0L, sum = 0.0L, log_factorial = 0.0L;
  for (u64 d : gens.gens()) {
    if (d == 0) throw Error(ErrorKind::DomainError, "generators must be positive");
    log_volume += std::log(static_cast<long double>(d));
    sum += static_cast<long double>(d);
  }
  for (std::size_t k = 2; k < m; ++k) log_factorial += std::log(static_cast<long double>(k));
  const long double root = static_cast<long double>(m - 1);
  return static_cast<double>(std::exp((log_factorial + log_volume) / root) - sum + 1.0L);
}

}  // namespace numsg
