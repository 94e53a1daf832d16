#include "oracle.hpp"

#include <gtest/gtest.h>

namespace {

using namespace sobriety;

void expect_matches_oracle(const oracle::Topo& t) {
  const auto x = oracle::to_space(t);
  const auto r = classify(x);
  ASSERT_EQ(r.t0, t.t0());
  ASSERT_EQ(r.cut_space.holds, t.cut_space());
  ASSERT_EQ(r.dcpo_specialization == Verdict::yes, t.dcpo());
  if (!t.t0()) return;
  ASSERT_EQ(r.weakly_sober.holds, t.weakly_sober());
  ASSERT_EQ(r.quasisober.holds, t.quasisober());
  ASSERT_EQ(r.sober.holds, t.sober());
  std::set<oracle::Mask> lib, ref;
  for (const auto& c : irreducible_closed_sets(x).members) lib.insert(oracle::to_mask(c.finite));
  for (auto c : t.irreducibles()) ref.insert(c);
  ASSERT_EQ(lib, ref);
}

TEST(Classify, EveryT0TopologyOnUpToFourPoints) {
  const std::size_t expected[] = {0, 1, 3, 19, 219};
  for (int n = 1; n <= 4; ++n) {
    std::size_t t0 = 0;
    for (const auto& t : oracle::all_topologies(n)) {
      if (!t.t0()) continue;
      ++t0;
      expect_matches_oracle(t);
      ASSERT_TRUE(t.sober());
    }
    EXPECT_EQ(t0, expected[n]) << n;
  }
}

TEST(Classify, NonT0TopologiesOnThreePoints) {
  for (const auto& t : oracle::all_topologies(3)) {
    if (t.t0()) continue;
    expect_matches_oracle(t);
    const auto r = classify(oracle::to_space(t));
    EXPECT_FALSE(r.sober.holds);
    EXPECT_EQ(r.sober.witness, "not T0");
  }
}

TEST(Classify, RandomT0SpacesOnUpToSixPoints) {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 100; ++k) {
    const auto t = oracle::random_t0(1 + k % 6, rng);
    expect_matches_oracle(t);
    ASSERT_TRUE(t.sober());
  }
}

// L is quasisober (and a cut space); its specialization order is not a dcpo.
TEST(Classify, ChainWithTwoTops) {
  const auto r = classify(spaces::two_tops());
  EXPECT_TRUE(r.cut_space.holds);
  EXPECT_TRUE(r.weakly_sober.holds);
  EXPECT_TRUE(r.quasisober.holds);
  EXPECT_FALSE(r.sober.holds);
  EXPECT_EQ(r.dcpo_specialization, Verdict::no);
  EXPECT_TRUE(r.quasisober.sound_only);
  EXPECT_TRUE(report_violations(r).empty());
}

// L' is not a cut space, witness the chain N.
TEST(Classify, ChainWithOneTopIsNotCut) {
  const auto x = spaces::one_top();
  const auto r = is_cut_space(x);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.witness, "{N}");
  EXPECT_FALSE(r.sound_only);
}

// weakly sober but not quasisober; the whole space is the witness.
TEST(Classify, CofiniteSpace) {
  const auto r = classify(spaces::cofinite());
  EXPECT_TRUE(r.cut_space.holds);
  EXPECT_TRUE(r.weakly_sober.holds);
  EXPECT_FALSE(r.quasisober.holds);
  EXPECT_EQ(r.quasisober.witness, "{N}");
  EXPECT_FALSE(r.sober.holds);
}

// a cut space that is not weakly sober, witness L \ {top}.
TEST(Classify, AntichainWithBounds) {
  const auto x = spaces::example_2_4();
  const auto r = classify(x);
  EXPECT_TRUE(r.cut_space.holds);
  EXPECT_FALSE(r.weakly_sober.holds);
  EXPECT_EQ(r.weakly_sober.witness, "{bot, B}");
}

// L is quasisober, its saturated subspace without N is not.
TEST(Classify, ChainBesideAntichain) {
  const auto x = spaces::chain_beside_antichain();
  EXPECT_TRUE(is_quasisober(x).holds);
  const auto sub = x.restricted_to(x.carrier().family_set(0));
  EXPECT_TRUE(sub.is_saturated(sub.support()));
  EXPECT_FALSE(is_quasisober(sub).holds);
}

TEST(Classify, IrreducibleSetsOfChainWithTwoTops) {
  const auto x = spaces::two_tops();
  const auto& p = x.carrier();
  const auto irr = irreducible_closed_sets(x);
  EXPECT_FALSE(irr.exhaustive);
  // ↓a1, ↓a2, N and the ↓n.
  EXPECT_NE(std::find(irr.members.begin(), irr.members.end(), p.family_set(0)), irr.members.end());
  EXPECT_NE(std::find(irr.members.begin(), irr.members.end(), x.point_closure(*p.find("a1"))), irr.members.end());
  EXPECT_EQ(std::find(irr.members.begin(), irr.members.end(), p.full_set()), irr.members.end());
}

TEST(Classify, WellFilteredness) {
  EXPECT_EQ(classify(oracle::to_space(oracle::generate(2, {1}))).well_filtered, Verdict::yes);
  EXPECT_EQ(is_well_filtered(spaces::two_tops()).first, Verdict::unknown);
  // The filter basis ↑n in L has meet {a1, a2}, an open set containing no ↑n.
  const auto x = spaces::two_tops();
  const auto& p = x.carrier();
  FilterBasis tails{"up n", [&](std::size_t n) { return fp_up_closure(p, p.singleton(Point::member(0, n))); },
                    p.from_points({*p.find("a1"), *p.find("a2")})};
  const auto [v, note] = is_well_filtered(x, {tails});
  EXPECT_EQ(v, Verdict::no);
  EXPECT_NE(note.find("up n"), std::string::npos);
  // A basis that stabilises is harmless.
  FilterBasis constant{"up a1", [&](std::size_t) { return p.singleton(*p.find("a1")); }, p.singleton(*p.find("a1"))};
  EXPECT_EQ(is_well_filtered(x, {constant}).first, Verdict::yes);
}

std::vector<Space> corpus_spaces() {
  std::vector<Space> out;
  for (const auto& i : corpus_instances()) out.push_back(i.space);
  for (const auto& i : random_omega_instances(20)) out.push_back(i.space);
  for (const auto& i : random_finite_instances(60)) out.push_back(i.space);
  return out;
}

TEST(Classify, ImplicationChainHoldsEverywhere) {
  for (const auto& x : corpus_spaces()) {
    const auto r = classify(x);
    EXPECT_TRUE(report_violations(r).empty()) << x.name();
  }
}

// In a cut space the cut closure of a directed set is closed and irreducible.
TEST(Classify, CutClosuresOfDirectedSetsAreIrreducibleInCutSpaces) {
  for (const auto& x : corpus_spaces()) {
    if (!is_cut_space(x).holds || !x.is_t0()) continue;
    const auto irr = irreducible_closed_sets(x);
    for (const auto& d : x.directed_representatives()) {
      const auto c = x.cut_closure(d);
      EXPECT_TRUE(x.is_closed(c)) << x.name() << " " << x.describe(c);
      EXPECT_NE(std::find(irr.members.begin(), irr.members.end(), c), irr.members.end()) << x.name() << " " << x.describe(c);
    }
  }
}

// When every irreducible closed set has a sup, weakly sober and sober agree.
TEST(Classify, WeaklySoberIsSoberWhenIrreduciblesHaveSups) {
  for (const auto& x : corpus_spaces()) {
    if (!x.is_t0()) continue;
    const auto irr = irreducible_closed_sets(x);
    const bool sups = std::all_of(irr.members.begin(), irr.members.end(), [&](const FPSet& c) { return x.least_upper_bound(c).has_value(); });
    if (!sups) continue;
    EXPECT_EQ(is_weakly_sober(x, irr).holds, is_sober(x, irr).holds) << x.name();
  }
}

TEST(Classify, ChainProductIsNotCut) {
  const auto n = spaces::omega_chain();
  const auto r = classify(chain_product(n, n));
  EXPECT_FALSE(r.cut_space.holds);
  EXPECT_EQ(r.cut_space.witness, "heights(then 1)");
  EXPECT_TRUE(report_violations(r).empty());
}

}  // namespace
