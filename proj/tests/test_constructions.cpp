#include "smyth_reference.hpp"

#include <gtest/gtest.h>

namespace {

using namespace sobriety;
using oracle::Mask;

Point at(const Space& x, const char* name) { return *x.carrier().find(name); }

// L' = {a2} ∪ N is closed in L and not a cut space.
TEST(Constructions, ClosedSubspaceOfTwoTops) {
  const auto l = spaces::two_tops();
  const auto lp = subspace(l, l.carrier().from_points({at(l, "a2")}) | l.carrier().family_set(0));
  EXPECT_TRUE(l.is_closed(lp.support()));
  EXPECT_FALSE(is_cut_space(lp).holds);
  EXPECT_TRUE(is_quasisober(l).holds);
  EXPECT_THROW(subspace(lp, l.carrier().full_set()), std::invalid_argument);
}

TEST(Constructions, FiniteProductMatchesProductTopology) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    const auto a = oracle::random_t0(1 + k % 3, rng), b = oracle::random_t0(1 + (k / 3) % 3, rng);
    std::vector<Mask> gens;
    for (Mask u : a.opens)
      for (Mask v : b.opens) {
        Mask r = 0;
        for (int i = 0; i < a.n; ++i)
          for (int j = 0; j < b.n; ++j)
            if (oracle::has(u, i) && oracle::has(v, j)) r |= oracle::bit(i * b.n + j);
        gens.push_back(r);
      }
    const auto ref = oracle::generate(a.n * b.n, gens);
    const auto p = product(oracle::to_space(a, "A"), oracle::to_space(b, "B"));
    EXPECT_EQ(oracle::from_space(p).opens, ref.opens);
    EXPECT_EQ(p.carrier().name(Point::finite(1 % (a.n * b.n))).front(), '(');
  }
}

TEST(Constructions, ProductsOfOmegaSpacesAreRefused) {
  const auto n = spaces::omega_chain();
  EXPECT_THROW(product(n, n), UnsupportedProduct);
  EXPECT_THROW(chain_product(spaces::two_tops(), n), UnsupportedProduct);
}

// in N x N the set D = N x {1} is closed, but its cut closure is everything.
TEST(Constructions, ChainProduct) {
  const auto n = spaces::omega_chain();
  const auto x = chain_product(n, n);
  const Staircase d({}, 1);
  EXPECT_EQ(x.closure(d), d);
  EXPECT_EQ(x.cut_closure(d), Staircase::all());
  EXPECT_EQ(x.cut_closure(Staircase::rectangle(2, 3)), Staircase::rectangle(2, 3));
  EXPECT_EQ(x.least_upper_bound(Staircase::rectangle(2, 3)), (GridPoint{2, 3}));
  EXPECT_EQ(x.least_upper_bound(d), std::nullopt);
}

// L' is a retract of L via a1 ↦ a2 and the inclusion.
TEST(Constructions, RetractOfTwoTops) {
  const auto l = spaces::two_tops();
  const auto lp = l.restricted_to(l.carrier().from_points({at(l, "a2")}) | l.carrier().family_set(0), "L'");
  const Point a1 = at(l, "a1"), a2 = at(l, "a2");
  const auto f = make_map(l, lp, [=](const Point& p) { return p == a1 ? a2 : p; });
  const auto j = make_map(lp, l, [](const Point& p) { return p; }, "j");
  EXPECT_TRUE(is_retraction(f, j));
  EXPECT_FALSE(is_retraction(j, f));
  EXPECT_FALSE(is_cut_space(lp).holds);
}

TEST(Constructions, DiscontinuousMapsAreRejected) {
  const auto l = spaces::two_tops();
  const Point a1 = at(l, "a1");
  // Sending a1 below the chain breaks monotonicity, hence continuity.
  EXPECT_THROW(make_map(l, l, [=](const Point& p) { return p == a1 ? Point::member(0, 1) : p; }), std::invalid_argument);
}

// p collapsing a1 and a2 to T is a closure operator, and its image
// {T} ∪ N is not a cut space.
TEST(Constructions, ClosureOperatorImage) {
  const auto l = spaces::two_tops_and_top();
  const Point t = at(l, "T"), a1 = at(l, "a1"), a2 = at(l, "a2");
  const auto p = make_map(l, l, [=](const Point& x) { return x == a1 || x == a2 ? t : x; }, "p");
  const auto r = operator_kind(p);
  EXPECT_EQ(r.kind, OperatorKind::closure);
  const auto img = image_subspace(p);
  EXPECT_EQ(img.support(), l.carrier().singleton(t) | l.carrier().family_set(0));
  EXPECT_FALSE(is_cut_space(img).holds);
  EXPECT_EQ(operator_kind(identity_map(l)).kind, OperatorKind::identity);
}

TEST(Constructions, KernelOperatorOnAChain) {
  const auto c = Space::alexandroff(OmegaPoset(FinitePoset::chain({"0", "1", "2"})));
  const auto k = make_map(c, c, [](const Point& x) { return x.index == 2 ? Point::finite(1) : x; }, "k");
  EXPECT_EQ(operator_kind(k).kind, OperatorKind::kernel);
  const auto swap = ContinuousMap{c, c, [](const Point& x) { return Point::finite(2 - x.index); }, "s"};
  EXPECT_EQ(operator_kind(swap).kind, OperatorKind::none);
  EXPECT_FALSE(operator_kind(swap).monotone);
}

void expect_smyth_matches(const Space& x) {
  const auto m = oracle::smyth_mismatch(x);
  EXPECT_FALSE(m) << *m;
}

TEST(Constructions, FiniteSmythSpaceMatchesBruteForce) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 40; ++k) expect_smyth_matches(oracle::to_space(oracle::random_t0(1 + k % 4, rng)));
  for (const auto& t : oracle::all_topologies(3)) expect_smyth_matches(oracle::to_space(t));
}

// K(L) = {↑a : a ∈ L} ∪ {{a1, a2}}, and P^s(L) is not a cut space.
TEST(Constructions, SmythSpaceOfTwoTops) {
  const auto l = spaces::two_tops();
  const auto s = smyth_power_space(l);
  const auto& k = s.space.carrier();
  EXPECT_EQ(k.finite_size(), 3u);
  EXPECT_EQ(s.element(*k.find("^{a1,a2}")), l.carrier().from_points({at(l, "a1"), at(l, "a2")}));
  EXPECT_EQ(s.element(*k.find("^N[2]")), fp_up_closure(l.carrier(), l.carrier().singleton(Point::member(0, 2))));
  EXPECT_EQ(s.embed(Point::member(0, 4)), Point::member(0, 4));
  const auto cut = is_cut_space(s.space);
  EXPECT_FALSE(cut.holds);
  EXPECT_EQ(cut.witness, "{^N}");
  EXPECT_TRUE(is_supercompact(s.element(*k.find("^a1")), l));
  EXPECT_FALSE(is_supercompact(s.element(*k.find("^{a1,a2}")), l));
  EXPECT_EQ(s.diamond(l.carrier().family_set(0)), s.space.closure(s.embed(l.carrier().family_set(0))));
  EXPECT_EQ(s.box(l.carrier().singleton(at(l, "a1"))), k.singleton(*k.find("^a1")));
}

TEST(Constructions, SmythNeedsAlexandroffChains) {
  EXPECT_THROW(smyth_power_space(spaces::cofinite()), UnsupportedTopology);
  EXPECT_THROW(smyth_power_space(Space::alexandroff(catalog::omega_antichain())), UnsupportedTopology);
}

// Continuous self-maps of the Sierpinski space are the three monotone maps.
TEST(Constructions, FunctionSpaceOfSierpinski) {
  const auto s = Space::alexandroff(OmegaPoset(FinitePoset::chain({"0", "1"})), "S");
  const auto fs = function_space(s, s);
  EXPECT_EQ(fs.maps.size(), 3u);
  EXPECT_TRUE(fs.space.carrier().find("[0,1]").has_value());
  EXPECT_FALSE(fs.space.carrier().find("[1,0]").has_value());
  // Pointwise order: const 0 <= id <= const 1.
  const auto& c = fs.space.carrier();
  EXPECT_TRUE(fs.space.specialization_leq(*c.find("[0,0]"), *c.find("[0,1]")));
  EXPECT_TRUE(fs.space.specialization_leq(*c.find("[0,1]"), *c.find("[1,1]")));
  EXPECT_TRUE(classify(fs.space).sober.holds);
  EXPECT_THROW(function_space(spaces::two_tops(), spaces::two_tops()), InfiniteFunctionSpace);
}

}  // namespace
