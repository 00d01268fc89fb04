#include <gtest/gtest.h>

#include "numsg/semigroup.hpp"
#include "oracle.hpp"

using namespace numsg;

namespace {

void expect_profile_matches_oracle(const std::vector<u64>& g) {
  const GeneratorTuple gens(g);
  const SemigroupProfile p = profile(gens);
  const oracle::Invariants o = oracle::invariants(g);
  EXPECT_EQ(p.frobenius, o.frobenius);
  EXPECT_EQ(p.conductor, o.conductor);
  EXPECT_EQ(p.genus, o.genus);
  EXPECT_EQ(p.nongaps, o.nongaps);
  EXPECT_EQ(p.gaps, o.gaps);
  EXPECT_EQ(p.pseudo_frobenius, o.pseudo_frobenius);
  EXPECT_EQ(p.type, o.type);
  EXPECT_EQ(p.symmetric, o.symmetric);
}

}  // namespace

TEST(Core, SmallProfiles) {
  const SemigroupProfile p = profile(GeneratorTuple{3, 4, 5});
  EXPECT_EQ(p.frobenius, 2u);
  EXPECT_EQ(p.conductor, 3u);
  EXPECT_EQ(p.genus, 2u);
  EXPECT_EQ(p.type, 2u);
  EXPECT_FALSE(p.symmetric);
  EXPECT_EQ(p.p, Rational(1, 3));

  const SemigroupProfile q = profile(GeneratorTuple{4, 5, 11});
  EXPECT_EQ(q.conductor, 8u);
  EXPECT_EQ(q.genus, 5u);
  EXPECT_EQ(2 * q.nongaps - q.genus, 1u);
}

TEST(Core, ProfilesMatchOracleOnAllSmallTriples) {
  for (u64 a = 2; a <= 12; ++a) {
    for (u64 b = a + 1; b <= 18; ++b) {
      for (u64 c = b + 1; c <= 22; ++c) {
        if (oracle::gcd_all({a, b, c}) != 1) continue;
        SCOPED_TRACE(testing::Message() << a << "," << b << "," << c);
        expect_profile_matches_oracle({a, b, c});
        EXPECT_EQ(is_minimal_generating_set(GeneratorTuple{a, b, c}), oracle::is_minimal({a, b, c}));
      }
    }
  }
}

TEST(Core, ProfilesMatchOracleForPairsAndQuads) {
  expect_profile_matches_oracle({7, 10});
  expect_profile_matches_oracle({11, 13, 17, 19});
  expect_profile_matches_oracle({6, 10, 15});
  expect_profile_matches_oracle({20, 23, 31, 37});
}

TEST(Core, MembershipAgainstTable) {
  const std::vector<u64> g{9, 14, 25};
  const auto table = oracle::members(g, 400);
  const GeneratorTuple gens(g);
  for (u64 s = 0; s <= 400; ++s) EXPECT_EQ(is_member(s, gens), table[s] != 0) << s;
  const auto two = oracle::members({9, 14}, 300);
  for (u64 s = 0; s <= 300; ++s) EXPECT_EQ(in_two_generated(s, 9, 14), two[s] != 0) << s;
}

TEST(Core, MembershipWithCommonFactor) {
  const GeneratorTuple gens{4, 6, 10};
  EXPECT_FALSE(is_member(7, gens));
  EXPECT_TRUE(is_member(10, gens));
  EXPECT_FALSE(is_member(2, gens));
  EXPECT_TRUE(is_member(0, gens));
}

TEST(Core, AperySetDefinition) {
  const std::vector<u64> g{5, 7, 9};
  const auto ap = apery_set(GeneratorTuple(g));
  const auto table = oracle::members(g, 200);
  ASSERT_EQ(ap.size(), 5u);
  for (u64 c = 0; c < 5; ++c) {
    u64 least = c;
    while (!table[least]) least += 5;
    EXPECT_EQ(ap[c], least);
  }
}

TEST(Core, TwoGeneratorConductorAgainstOracle) {
  for (u64 a = 2; a <= 30; ++a) {
    for (u64 b = a + 1; b <= 40; ++b) {
      if (std::gcd(a, b) != 1) continue;
      EXPECT_EQ(two_generator_conductor(a, b), oracle::invariants({a, b}).conductor);
    }
  }
  EXPECT_THROW(two_generator_conductor(4, 6), Error);
}

TEST(Core, ErrorsCarryKinds) {
  try {
    profile(GeneratorTuple{4, 6, 8});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonCoprime);
  }
  try {
    profile(GeneratorTuple{1, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainError);
  }
}

TEST(Core, MinimalGenerators) {
  EXPECT_EQ(minimal_generators(GeneratorTuple{3, 6, 7}), (std::vector<u64>{3, 7}));
  EXPECT_EQ(minimal_generators(GeneratorTuple{5, 4, 3}), (std::vector<u64>{3, 4, 5}));
  EXPECT_FALSE(is_minimal_generating_set(GeneratorTuple{3, 5, 8}));
}

TEST(Core, SymmetryByGcdPairMatchesGenus) {
  for (u64 a = 3; a <= 14; ++a) {
    for (u64 b = a + 1; b <= 20; ++b) {
      for (u64 c = b + 1; c <= 26; ++c) {
        const GeneratorTuple t{a, b, c};
        if (t.gcd() != 1 || !oracle::is_minimal({a, b, c})) continue;
        EXPECT_EQ(is_symmetric_by_gcd_pair(t), oracle::invariants({a, b, c}).symmetric)
            << a << "," << b << "," << c;
      }
    }
  }
}

TEST(Core, DerivedSemigroup) {
  // (6,10,15): pairwise gcds 5, 3, 2 divide out to the trivial semigroup.
  const auto r = derived_semigroup(GeneratorTuple{6, 10, 15});
  EXPECT_EQ(r.g, (std::array<u64, 3>{5, 3, 2}));
  EXPECT_EQ(r.minimal_generator_count, 1u);
  EXPECT_EQ(derived_semigroup(GeneratorTuple{3, 4, 5}).minimal_generator_count, 3u);
}
