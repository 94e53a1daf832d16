#include "oracle.hpp"

#include <gtest/gtest.h>

namespace {

using namespace sobriety;

const Claim* find_claim(const ExampleResult& r, const std::string& subject, const std::string& predicate) {
  for (const auto& c : r.claims)
    if (c.subject == subject && c.predicate == predicate) return &c;
  return nullptr;
}

class Replication : public ::testing::TestWithParam<std::string> {};

TEST_P(Replication, EveryClaimMatches) {
  const auto results = run_replication(GetParam());
  ASSERT_EQ(results.size(), 1u);
  const auto& r = results.front();
  EXPECT_FALSE(r.claims.empty());
  for (const auto& c : r.claims) EXPECT_TRUE(c.matches()) << r.id << ": " << c.subject << " " << c.predicate << " [" << c.witness << "]";
  const bool fragment = GetParam() == "ex3.12" || GetParam() == "ex3.16";
  EXPECT_EQ(r.status, fragment ? "consistent with paper" : "verified");
  for (const auto& rep : r.reports) EXPECT_TRUE(report_violations(rep).empty()) << r.id << " " << rep.space;
}

INSTANTIATE_TEST_SUITE_P(Examples, Replication,
                         ::testing::Values("ex2.4", "ex2.6", "ex3.1", "ex3.4", "ex3.6", "ex3.7", "ex3.8", "ex3.12", "ex3.13", "ex3.16"),
                         [](const auto& info) {
                           std::string s = info.param;
                           std::replace(s.begin(), s.end(), '.', '_');
                           return s;
                         });

TEST(Replication, HeadlineVerdicts) {
  const auto ex24 = run_replication("ex2.4").front();
  ASSERT_NE(find_claim(ex24, "L", "weakly_sober"), nullptr);
  EXPECT_FALSE(find_claim(ex24, "L", "weakly_sober")->computed);
  EXPECT_EQ(find_claim(ex24, "L", "weakly_sober")->witness, "{bot, B}");

  const auto ex31 = run_replication("ex3.1").front();
  EXPECT_TRUE(find_claim(ex31, "L", "quasisober")->computed);
  EXPECT_FALSE(find_claim(ex31, "L'", "cut_space")->computed);
  EXPECT_EQ(find_claim(ex31, "L'", "cut_space")->witness, "{N}");

  const auto ex36 = run_replication("ex3.6").front();
  EXPECT_FALSE(find_claim(ex36, "NxN", "cut_space")->computed);
}

TEST(Replication, AllAtOnceAndUnknownIds) {
  const auto all = run_replication();
  EXPECT_EQ(all.size(), 10u);
  EXPECT_TRUE(std::all_of(all.begin(), all.end(), [](const ExampleResult& r) { return r.ok(); }));
  EXPECT_THROW(run_replication("ex9.9"), std::out_of_range);
}

TEST(Propositions, GeneratorsAreDeterministic) {
  const auto a = random_finite_instances(30, 42), b = random_finite_instances(30, 42);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_json(classify(a[i].space)).dump(), to_json(classify(b[i].space)).dump());
  const auto c = random_omega_instances(10, 42);
  EXPECT_EQ(c.size(), 10u);
}

std::vector<Instance> instances() {
  auto out = corpus_instances();
  for (auto& i : random_finite_instances(40)) out.push_back(std::move(i));
  for (auto& i : random_omega_instances(10)) out.push_back(std::move(i));
  return out;
}

class Propositions : public ::testing::TestWithParam<std::size_t> {};

TEST_P(Propositions, NoUnexpectedOutcome) {
  static const auto pool = instances();
  const auto& spec = propositions().at(GetParam());
  const auto r = run_proposition(spec, pool);
  EXPECT_TRUE(r.ok()) << r.id << ": " << r.counterexample.value_or("no counterexample found");
  if (r.expect_counterexample) return;
  EXPECT_GT(r.hypothesis_held, 0u) << r.id << " never met its hypothesis";
}

INSTANTIATE_TEST_SUITE_P(All, Propositions, ::testing::Range<std::size_t>(0, propositions().size()));

TEST(Propositions, UnknownIdThrows) { EXPECT_THROW(run_proposition("prop9.9", corpus_instances()), std::out_of_range); }

}  // namespace
