#include <string>

#include "numsg/relations.hpp"

namespace numsg {

namespace {

void fail(ScanSummary& s, u64& counter, const GeneratorTuple& t, const std::string& what) {
  ++counter;
  if (!s.first_failure) {
    s.first_failure = "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                      std::to_string(t[2]) + "): " + what;
  }
}

}  // namespace

ScanSummary scan_triples(u64 dmax) {
  ScanSummary s;
  s.dmax = dmax;
  for (u64 d1 = 3; d1 + 2 <= dmax; ++d1) {
    for (u64 d2 = d1 + 1; d2 + 1 <= dmax; ++d2) {
      for (u64 d3 = d2 + 1; d3 <= dmax; ++d3) {
        const GeneratorTuple t{d1, d2, d3};
        if (t.gcd() != 1 || !is_minimal_generating_set(t)) continue;
        ++s.triples;

        const SemigroupProfile prof = profile(t);
        if (prof.conductor != prof.frobenius + 1 ||
            prof.genus + prof.nongaps != prof.conductor ||
            (!prof.gaps.empty() && prof.gaps.back() != prof.frobenius)) {
          fail(s, s.structure_failures, t, "profile structure");
        }

        const bool by_genus = prof.symmetric;
        const bool by_pair = is_symmetric_by_gcd_pair(t);
        const bool by_type = prof.type == 1;
        if (by_genus != by_pair || by_genus != by_type) {
          fail(s, s.tri_equivalence_failures, t, "symmetry criteria disagree");
        }
        if (prof.type != 1 && prof.type != 2) fail(s, s.type_failures, t, "type outside {1,2}");
        if (prof.genus > prof.nongaps * prof.type) fail(s, s.genus_type_bound_failures, t, "G > nongaps * t");
        if (!conductor_lower_bound_holds(t, prof.conductor, by_genus)) {
          fail(s, s.lower_bound_failures, t, "conductor below its lower bound");
        }
        if (prof.genus == 2 * prof.nongaps) {
          ++s.genus_twice_nongaps_hits;
          if (!(d1 == 3 && d2 % 3 == 1 && d3 == d2 + 1)) {
            fail(s, s.genus_twice_nongaps_outside_family, t, "G = 2 * nongaps outside {3,3k+1,3k+2}");
          }
        }

        const std::size_t derived = derived_semigroup(t).minimal_generator_count;
        if (by_genus) {
          ++s.symmetric;
          if (derived > 2) fail(s, s.derived_over_two, t, "symmetric but derived needs 3 generators");
          if (derived == 1) ++s.derived_single;
          continue;
        }
        ++s.non_symmetric;
        if (derived != 3) {
          fail(s, s.derived_nonsym_not_three, t, "non-symmetric but derived needs < 3 generators");
        }
        try {
          const UWPair uw = uw_decomposition(t);
          const ClosedFormTerms terms = closed_form_terms(uw);
          if (terms.conductor != prof.conductor || terms.twice_genus != 2 * prof.genus ||
              terms.twice_genus - terms.conductor != terms.min_a3b3) {
            fail(s, s.closed_form_mismatches, t, "closed form differs from brute force");
          }
        } catch (const Error& e) {
          fail(s, s.roundtrip_failures, t, e.what());
        }
      }
    }
  }
  return s;
}

}  // namespace numsg
