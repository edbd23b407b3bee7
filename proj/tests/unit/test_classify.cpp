#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sasano/backlund.hpp"
#include "sasano/classify.hpp"
#include "sasano/errors.hpp"

using namespace sasano;
using fixtures::params;
using RF = RationalFunction;

namespace {

RF t() { return RF::t(); }
RF c(long n, long d = 1) { return RF(Rational(n, d)); }

std::array<bool, 6> oracle_conditions(const Params& p) {
  auto a = fixtures::to_frac(p);
  switch (p.system) {
    case System::B4:
      return oracle::b4_conditions(a);
    case System::D4:
      return oracle::d4_conditions(a);
    case System::D5:
      return oracle::d5_conditions(a);
  }
  return {};
}

}  // namespace

TEST(Classify, Examples) {
  auto r = classify(params(System::B4, {"1/4", "1/4", "1/4", "-1/4", "1/4"}));
  EXPECT_EQ(r.verdict, Verdict::Exists);
  EXPECT_EQ(r.condition, 1);
  EXPECT_EQ(classify(params(System::B4, {"0", "0", "0", "0", "1/2"})).verdict, Verdict::NotExists);
  // 2a0 = 0, 2a1 = 1/2, 2a3 + 2a4 = -1/2, 2a4 = 1/2: every pairing has a non-integer
  auto d5 = classify(params(System::D5, {"0", "1/4", "1/2", "-1/2", "1/4"}));
  EXPECT_EQ(d5.verdict, Verdict::NotExists);
  EXPECT_FALSE(d5.condition.has_value());
  EXPECT_THROW(classify(params(System::B4, {"1", "1", "1", "1", "1"})), DomainError);
}

TEST(Classify, ConditionsMatchOracle) {
  std::mt19937_64 rng(81);
  for (System s : {System::B4, System::D4, System::D5}) {
    for (int i = 0; i < 300; ++i) {
      std::array<Rational, 4> first;
      for (auto& r : first) r = fixtures::random_rational(rng, 8, 1 + i % 4);
      Params p = Params::solve_last(s, first);
      EXPECT_EQ(existence_conditions(p), oracle_conditions(p)) << to_string(s) << " " << i;
    }
  }
}

TEST(Classify, RegressionTableB4) {
  for (const auto& row : fixtures::b4_existence_table()) {
    Params p = params(System::B4, row.alphas);
    auto oc = oracle_conditions(p);
    ASSERT_EQ(oracle::count_true(oc), 1);
    auto r = classify(p);
    EXPECT_EQ(r.verdict, Verdict::Exists);
    EXPECT_EQ(r.condition, row.condition);
  }
  for (const auto& row : fixtures::b4_nonexistence_table()) {
    Params p = params(System::B4, row.alphas);
    ASSERT_EQ(oracle::count_true(oracle_conditions(p)), 0);
    EXPECT_EQ(classify(p).verdict, Verdict::NotExists);
  }
}

TEST(Classify, StandardForm) {
  EXPECT_TRUE(is_standard_form(params(System::B4, {"1/4", "1/4", "1/4", "-1/4", "1/4"})));
  EXPECT_FALSE(is_standard_form(params(System::B4, {"0", "0", "1/2", "0", "0"})));
  EXPECT_TRUE(is_standard_form(params(System::D5, {"0", "1/4", "1/4", "-1/4", "1/4"})));
  EXPECT_FALSE(is_standard_form(params(System::D5, {"0", "0", "1/2", "-1/4", "1/4"})));
}

TEST(Classify, Normalization) {
  Params s = params(System::B4, {"1/4", "1/4", "1/4", "-1/4", "1/4"});
  auto [w0, q0] = normalize_to_standard(s);
  EXPECT_TRUE(w0.empty());
  EXPECT_EQ(q0, s);
  for (const auto& a : std::vector<std::array<std::string, 5>>{{"5/4", "1/4", "1/4", "-1/4", "-1/4"},
                                                              {"0", "0", "1/2", "1/2", "-1/2"}}) {
    Params p = params(System::B4, a);
    auto [w, q2] = normalize_to_standard(p);
    EXPECT_TRUE(is_standard_form(q2));
    EXPECT_EQ(act_word(w, p).params, q2);
  }
  EXPECT_THROW(normalize_to_standard(params(System::B4, {"0", "0", "0", "0", "1/2"})), NormalizationFailed);
}

TEST(Classify, SearchFallbackFindsStandardForm) {
  Params p = params(System::B4, {"5/4", "1/4", "1/4", "-1/4", "-1/4"});
  auto w = search_standard_form(p, 8, 50000);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(is_standard_form(act_word(*w, p).params));
  EXPECT_FALSE(search_standard_form(params(System::B4, {"0", "0", "0", "0", "1/2"}), 3, 2000).has_value());
}

TEST(Classify, Seeds) {
  EXPECT_EQ(seed_solution(params(System::B4, {"0", "0", "1/2", "-1/2", "1/2"})).u[2], t());
  Params b = params(System::B4, {"1/4", "1/4", "1/4", "-1/4", "1/4"});
  EXPECT_EQ(seed_solution(b), fixtures::b4_seed(b));
  EXPECT_EQ(fixtures::b4_seed(b).u[2], c(2) * t());
  Params d = params(System::D4, {"1/4", "1/4", "1/4", "-1/4", "1/4"});
  EXPECT_EQ(seed_solution(d), fixtures::d4_seed(d));
  Params f = params(System::D5, {"0", "1/4", "1/4", "-1/4", "1/4"});
  Solution fs = seed_solution(f);
  EXPECT_EQ(fs, fixtures::d5_seed_r1(f));
  EXPECT_EQ(fs.u[1], c(1, 2));
  EXPECT_EQ(fs.u[2], c(2) * t());
  EXPECT_THROW(seed_solution(params(System::B4, {"0", "0", "0", "0", "1/2"})), NotStandardForm);
}

TEST(Classify, ConstructExamples) {
  auto r = construct_rational_solution(params(System::B4, {"1/4", "1/4", "1/4", "-1/4", "1/4"}));
  ASSERT_TRUE(r.solution.has_value());
  EXPECT_EQ(r.solution->u[2], c(2) * t());
  auto n = construct_rational_solution(params(System::B4, {"0", "0", "0", "0", "1/2"}));
  EXPECT_EQ(n.verdict, Verdict::NotExists);
  EXPECT_FALSE(n.solution.has_value());
  auto d5 = construct_rational_solution(params(System::D5, {"0", "1/4", "1/4", "-1/4", "1/4"}));
  ASSERT_TRUE(d5.solution.has_value());
  EXPECT_EQ(d5.solution->chart, Chart::R1);
}

TEST(Classify, ConstructIsSoundOnRandomExistingParameters) {
  std::mt19937_64 rng(82);
  int built = 0;
  for (System s : {System::B4, System::D4, System::D5}) {
    for (int i = 0; i < 60 && built < 90; ++i) {
      std::array<Rational, 4> first;
      for (auto& r : first) r = fixtures::random_rational(rng, 3, 2);
      Params p = Params::solve_last(s, first);
      auto r = construct_rational_solution(p);
      if (r.verdict == Verdict::NotExists) continue;
      ASSERT_TRUE(r.solution.has_value());
      EXPECT_TRUE(residual_vanishes(p, *r.solution)) << to_string(s);
      ASSERT_TRUE(r.word.has_value());
      EXPECT_EQ(act_word(*r.word, p).params, *r.standard);
      EXPECT_TRUE(is_standard_form(*r.standard));
      ++built;
    }
  }
  EXPECT_GT(built, 30);
}
