#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "sasano/backlund.hpp"
#include "sasano/classify.hpp"
#include "sasano/errors.hpp"

using namespace sasano;
using fixtures::params;
using fixtures::q;
using RF = RationalFunction;

namespace {

RF t() { return RF::t(); }
RF c(long n, long d = 1) { return RF(Rational(n, d)); }

Params symbolic_b4() { return params(System::B4, {"2/7", "3/11", "5/13", "7/17", "0"}); }

Params fix_last(Params p) {
  std::array<Rational, 4> first{p.a[0], p.a[1], p.a[2], p.a[3]};
  return Params::solve_last(p.system, first);
}

std::array<Rational, 5> diff(const Params& a, const Params& b) {
  std::array<Rational, 5> d;
  for (std::size_t i = 0; i < 5; ++i) d[i] = a.a[i] - b.a[i];
  return d;
}

Word random_word(System s, std::mt19937_64& rng, int len) {
  const auto& gens = generators(s);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::vector<std::string> toks;
  for (int i = 0; i < len; ++i) toks.push_back(to_string(gens[pick(rng)]));
  return Word(toks);
}

// Solutions known in closed form, paired with their parameters.
std::vector<std::pair<Params, Solution>> solution_fixtures() {
  std::vector<std::pair<Params, Solution>> out;
  std::mt19937_64 rng(51);
  for (int i = 0; i < 4; ++i) {
    Params b = fixtures::random_standard_b4d4(System::B4, rng);
    out.emplace_back(b, fixtures::b4_seed(b));
    Params d = fixtures::random_standard_b4d4(System::D4, rng);
    out.emplace_back(d, fixtures::d4_seed(d));
    Params f = fixtures::random_standard_d5(rng);
    out.emplace_back(f, fixtures::d5_seed_r1(f));
  }
  out.emplace_back(fixtures::b4_simple_pole_params(), fixtures::b4_simple_pole_solution());
  return out;
}

}  // namespace

TEST(Backlund, ParameterImagesB4) {
  Params p = fix_last(symbolic_b4());
  const auto& a = p.a;
  EXPECT_EQ(act_params(Gen::Pi1, p).a, (std::array<Rational, 5>{a[1], a[0], a[2], a[3], a[4]}));
  EXPECT_EQ(act_params(Gen::Pi2, p).a,
            (std::array<Rational, 5>{Rational(2) * a[4] + a[3], a[3], a[2], a[1], (a[0] - a[1]) / Rational(2)}));
  EXPECT_EQ(act_params(Gen::S3, p).a,
            (std::array<Rational, 5>{a[0], a[1], a[2] + a[3], -a[3], a[4] + a[3]}));
  Params z = params(System::B4, {"0", "1/3", "1/4", "1/5", "0"});
  z = fix_last(z);
  EXPECT_EQ(act_params(Gen::S0, z), z);
}

TEST(Backlund, InvolutionsOnParameters) {
  std::mt19937_64 rng(52);
  for (System s : {System::B4, System::D4, System::D5}) {
    std::vector<Gen> invs{Gen::S0, Gen::S1, Gen::S2, Gen::S3, Gen::S4};
    if (s != System::D5) invs.push_back(Gen::Pi1);
    for (int i = 0; i < 100; ++i) {
      Params p = fixtures::random_params(s, rng);
      for (Gen g : invs) EXPECT_EQ(act_params(g, act_params(g, p)), p) << to_string(s) << " " << to_string(g);
    }
  }
}

TEST(Backlund, GeneratorsPreserveConstraint) {
  std::mt19937_64 rng(53);
  for (System s : {System::B4, System::D4, System::D5}) {
    for (int i = 0; i < 100; ++i) {
      Params p = fixtures::random_params(s, rng);
      for (Gen g : generators(s)) EXPECT_TRUE(act_params(g, p).valid()) << to_string(g);
    }
  }
}

TEST(Backlund, GeneratorSets) {
  EXPECT_EQ(generators(System::B4).size(), 7u);
  EXPECT_EQ(generators(System::D4).size(), 9u);
  EXPECT_EQ(generators(System::D5).size(), 6u);
  EXPECT_FALSE(gen_valid(System::B4, Gen::Psi));
  EXPECT_TRUE(gen_valid(System::D5, Gen::Psi));
  EXPECT_EQ(parse_gen("π2"), Gen::Pi2);
  EXPECT_EQ(parse_gen("ψ"), Gen::Psi);
  EXPECT_FALSE(parse_gen("s9").has_value());
}

TEST(Backlund, WordParsing) {
  Word w = Word::parse("s0 s1, T1 inv(T2 s3)");
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w.tokens()[3], "inv(T2 s3)");
  EXPECT_THROW(expand(System::B4, Word::parse("psi")), ParseError);
  EXPECT_THROW(Word::parse("s7"), ParseError);
  EXPECT_THROW(shift_word(System::D5, 1), UnsupportedSystem);
}

TEST(Backlund, EmptyWordAndSquares) {
  std::mt19937_64 rng(54);
  Params p = fixtures::random_params(System::B4, rng);
  EXPECT_EQ(act_word(Word(), p).params, p);
  EXPECT_EQ(act_word(Word::parse("s3 s3"), p).params, p);
}

TEST(Backlund, ShiftVectorsB4) {
  const std::array<std::array<long, 5>, 4> vecs{{{1, -1, 0, 0, 0}, {-1, -1, 1, 0, 0}, {0, 0, -1, 1, 0}, {0, 0, 0, -1, 1}}};
  std::mt19937_64 rng(55);
  for (int i = 0; i < 100; ++i) {
    Params p = fixtures::random_params(System::B4, rng);
    for (int k = 0; k < 4; ++k) {
      auto d = diff(act_word(shift_word(System::B4, k + 1), p).params, p);
      for (int j = 0; j < 5; ++j) EXPECT_EQ(d[j], Rational(vecs[k][j]));
    }
  }
}

TEST(Backlund, ShiftVectorsD4) {
  const std::array<std::array<long, 5>, 4> vecs{{{1, 0, -1, 1, 0}, {0, 1, -1, 0, 1}, {0, 0, 0, 1, -1}, {0, 0, -1, 1, 1}}};
  std::mt19937_64 rng(56);
  for (int i = 0; i < 100; ++i) {
    Params p = fixtures::random_params(System::D4, rng);
    for (int k = 0; k < 4; ++k) {
      auto d = diff(act_word(shift_word(System::D4, k + 1), p).params, p);
      for (int j = 0; j < 5; ++j) EXPECT_EQ(d[j], Rational(vecs[k][j]));
    }
  }
}

TEST(Backlund, ShiftWordsSpelledOut) {
  EXPECT_EQ(shift_word(System::B4, 1).str(), "s4 pi1 s1 s2 s4 s3 s4 s3 s2 s1");
  EXPECT_EQ(shift_word(System::B4, 2).size(), 12u);
}

TEST(Backlund, PiTwoOrder) {
  std::mt19937_64 rng(57);
  int order = generator_order(System::B4, Gen::Pi2);
  EXPECT_GE(order, 2);
  EXPECT_LE(order, 12);
  for (int i = 0; i < 50; ++i) {
    Params p = fixtures::random_params(System::B4, rng);
    Params cur = p;
    int steps = 0;
    do {
      cur = act_params(Gen::Pi2, cur);
      ++steps;
    } while (!(cur == p) && steps <= 12);
    EXPECT_EQ(steps, order);
  }
}

TEST(Backlund, Inversion) {
  EXPECT_EQ(invert_word(System::B4, Word::parse("s3")), Word::parse("s3"));
  EXPECT_EQ(invert_word(System::B4, Word::parse("pi1 s2")), Word::parse("s2 pi1"));
  Word p2 = invert_word(System::B4, Word::parse("pi2"));
  EXPECT_EQ(static_cast<int>(p2.size()), generator_order(System::B4, Gen::Pi2) - 1);
  for (const auto& tok : p2.tokens()) EXPECT_EQ(tok, "pi2");
  std::mt19937_64 rng(58);
  for (System s : {System::B4, System::D4, System::D5}) {
    for (int i = 0; i < 30; ++i) {
      Params p = fixtures::random_params(s, rng);
      Word w = random_word(s, rng, 1 + i % 7);
      if (s != System::D5 && i % 3 == 0) w += Word::parse("T2 inv(T3)");
      Params there = act_word(w, p).params;
      EXPECT_EQ(act_word(invert_word(s, w), there).params, p);
    }
  }
}

TEST(Backlund, IdentityConvention) {
  // s1 with y = 0 and a1 = 0
  Params p = fix_last(params(System::B4, {"1/3", "0", "1/5", "1/7", "0"}));
  Solution s{Chart::Affine, {t(), c(0), t(), c(1)}};
  EXPECT_EQ(act_solution(Gen::S1, p, s), s);
  Params q2 = fix_last(params(System::B4, {"1/3", "1/2", "1/5", "1/7", "0"}));
  EXPECT_THROW(act_solution(Gen::S1, q2, s), UndefinedAction);
}

TEST(Backlund, S3OnVanishingWLandsInM3) {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 10; ++i) {
    Params p = fixtures::random_standard_b4d4(System::B4, rng);
    Solution img = act_solution(Gen::S3, p, fixtures::b4_seed(p));
    EXPECT_EQ(img.chart, Chart::M3);
    EXPECT_EQ(img.u[0], RF(p.a[0] - p.a[1]));
    EXPECT_EQ(img.u[1], c(1, 2));
    EXPECT_TRUE(img.u[2].is_zero());
    EXPECT_TRUE(residual_vanishes(act_params(Gen::S3, p), img));
  }
}

TEST(Backlund, GeneratorsMapSolutionsToSolutions) {
  int applied = 0;
  for (const auto& [p, s] : solution_fixtures()) {
    ASSERT_TRUE(residual_vanishes(p, s));
    for (Gen g : generators(p.system)) {
      try {
        Solution img = act_solution(g, p, s);
        EXPECT_TRUE(residual_vanishes(act_params(g, p), img)) << to_string(p.system) << " " << to_string(g);
        ++applied;
      } catch (const UndefinedAction&) {
      }
    }
  }
  EXPECT_GT(applied, 60);
}

TEST(Backlund, WordsMapSolutionsToSolutions) {
  std::mt19937_64 rng(60);
  int applied = 0;
  for (const auto& [p, s] : solution_fixtures()) {
    for (int i = 0; i < 6; ++i) {
      Word w = random_word(p.system, rng, 2 + i);
      try {
        auto img = act_word(w, p, s);
        EXPECT_TRUE(residual_vanishes(img.params, *img.solution)) << w.str();
        ++applied;
      } catch (const UndefinedAction&) {
      }
    }
  }
  EXPECT_GT(applied, 20);
}

TEST(Backlund, EquivalenceParameterMaps) {
  Params p = params(System::D4, {"1/3", "1/5", "1/7", "1/11", "0"});
  p = fix_last(p);
  const auto& a = p.a;
  Params b = equivalence_params(System::D4, System::B4, p);
  EXPECT_EQ(b.a, (std::array<Rational, 5>{a[0], a[1], a[2], a[3], (a[4] - a[3]) / Rational(2)}));
  EXPECT_TRUE(b.valid());
  Params d = equivalence_params(System::D4, System::D5, p);
  EXPECT_EQ(d.a, (std::array<Rational, 5>{(a[0] - a[1]) / Rational(2), a[1], a[2], a[3], (a[4] - a[3]) / Rational(2)}));
  EXPECT_TRUE(d.valid());
  EXPECT_THROW(equivalence_params(System::B4, System::D4, b), UnsupportedSystem);
}

TEST(Backlund, EquivalenceMapsSolutions) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 10; ++i) {
    Params p = fixtures::random_standard_b4d4(System::D4, rng);
    Solution s = fixtures::d4_seed(p);
    for (System to : {System::B4, System::D5}) {
      auto [q2, img] = equivalence_map(System::D4, to, p, s);
      EXPECT_TRUE(residual_vanishes(q2, img)) << to_string(to);
    }
  }
}

TEST(Backlund, ClassificationInvariantUnderGenerators) {
  std::mt19937_64 rng(62);
  for (System s : {System::B4, System::D4, System::D5}) {
    for (int i = 0; i < 100; ++i) {
      // half-integers make the conditions fire often enough to matter
      std::array<Rational, 4> first;
      for (auto& r : first) r = fixtures::random_rational(rng, 6, 2 + (i % 3 == 0 ? 2 : 0));
      Params p = Params::solve_last(s, first);
      bool exists = classify(p).verdict == Verdict::Exists;
      for (Gen g : generators(s)) {
        EXPECT_EQ(classify(act_params(g, p)).verdict == Verdict::Exists, exists) << to_string(g);
      }
    }
  }
}

TEST(Backlund, ClassificationAgreesAcrossEquivalenceToB4) {
  std::mt19937_64 rng(63);
  for (int i = 0; i < 100; ++i) {
    std::array<Rational, 4> first;
    for (auto& r : first) r = fixtures::random_rational(rng, 6, 2 + (i % 2) * 2);
    Params p = Params::solve_last(System::D4, first);
    Params b = equivalence_params(System::D4, System::B4, p);
    EXPECT_EQ(classify(p).verdict, classify(b).verdict);
  }
}
