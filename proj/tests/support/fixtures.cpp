#include "fixtures.hpp"

namespace fixtures {

using sasano::Polynomial;

Rational q(const std::string& text) { return Rational::parse(text); }

Params params(System s, const std::array<std::string, 5>& alphas) {
  Params p{s, {}};
  for (std::size_t i = 0; i < 5; ++i) p.a[i] = q(alphas[i]);
  return p;
}

oracle::Alphas to_frac(const Params& p) {
  oracle::Alphas out;
  for (std::size_t i = 0; i < 5; ++i) {
    out[i] = oracle::Frac(p.a[i].num().get_si(), p.a[i].den().get_si());
  }
  return out;
}

std::array<double, 5> to_double(const Params& p) {
  std::array<double, 5> out{};
  for (std::size_t i = 0; i < 5; ++i) out[i] = p.a[i].to_double();
  return out;
}

RationalFunction laurent_poly(const std::vector<Rational>& coeffs, long k) {
  return RationalFunction(Polynomial(coeffs)) * RationalFunction::monomial(Rational(1), -k);
}

RationalFunction linear(const Rational& c, const Rational& d) {
  return RationalFunction(Polynomial({d, c}));
}

Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

Params random_params(System s, std::mt19937_64& rng) {
  std::array<Rational, 4> first;
  for (auto& r : first) r = random_rational(rng);
  return Params::solve_last(s, first);
}

namespace {

Rational random_nonzero(std::mt19937_64& rng) {
  Rational r;
  while (r.is_zero()) r = random_rational(rng);
  return r;
}

}  // namespace

Params random_standard_b4d4(System s, std::mt19937_64& rng) {
  Rational a = random_rational(rng);
  Rational e = random_nonzero(rng);
  Params p{s, {a, a, Rational(0), -e, e}};
  // B4: 2a + 2 a2 = 1; D4: 2a + 2 a2 = 1 as well since a3 + a4 = 0.
  p.a[2] = (Rational(1) - Rational(2) * a) / Rational(2);
  return p;
}

Params random_standard_d5(std::mt19937_64& rng) {
  Rational b = random_nonzero(rng);
  Rational e = random_nonzero(rng);
  return Params{System::D5, {Rational(0), b, Rational(1, 2) - b, -e, e}};
}

Solution b4_seed(const Params& p) {
  return {sasano::Chart::Affine,
          {Rational(0), Rational(1, 2), linear(Rational(1) / (Rational(2) * p.a[4])), Rational(0)}};
}

Solution d4_seed(const Params& p) {
  return {sasano::Chart::Affine,
          {Rational(0), Rational(1, 2), RationalFunction::monomial(Rational(2) * p.a[4], -1),
           linear(Rational(1, 2))}};
}

Solution d5_seed_r1(const Params& p) {
  // x1 = 1/x = 0, y1 = -(x y + a1) x whose limit is 1/2 + 2 a4 (a3 + a4)/t
  Rational c = Rational(2) * p.a[4] * (p.a[3] + p.a[4]);
  return {sasano::Chart::R1,
          {Rational(0), RationalFunction(Rational(1, 2)) + RationalFunction::monomial(c, -1),
           linear(Rational(1) / (Rational(2) * p.a[4])), RationalFunction::monomial(-c, -1)}};
}

Params b4_simple_pole_params() { return params(System::B4, {"1/2", "1/2", "-1/2", "1/4", "1/4"}); }

Solution b4_simple_pole_solution() {
  return {sasano::Chart::Affine,
          {Rational(0), RationalFunction(Rational(1, 2)) + RationalFunction::monomial(Rational(1, 4), -1),
           linear(Rational(2)), RationalFunction::monomial(Rational(-1, 4), -1)}};
}

const std::vector<TableRow>& b4_existence_table() {
  static const std::vector<TableRow> rows{
      {{"1/8", "1/8", "3/8", "-1/4", "1/4"}, 1},
      {{"9/8", "1/8", "-5/8", "1/4", "1/4"}, 1},
      {{"1/3", "-5/3", "1/6", "3/4", "1/4"}, 1},
      {{"1/6", "7/6", "1/3", "1/4", "-3/4"}, 1},
      {{"1/5", "1/5", "-31/30", "1/3", "1"}, 2},
      {{"7/10", "-3/10", "-11/30", "1/6", "1/2"}, 2},
      {{"1/7", "1/7", "39/70", "-1/5", "0"}, 2},
      {{"3/8", "-5/8", "-43/40", "1/5", "3/2"}, 2},
      {{"1/3", "2/3", "-1/2", "1/4", "1/4"}, 3},
      {{"1/5", "-1/5", "1/2", "-1/4", "1/4"}, 3},
      {{"3/4", "5/4", "-3/2", "3/4", "1/4"}, 3},
      {{"1/3", "2/3", "-7/10", "1/5", "1/2"}, 4},
      {{"1/4", "-1/4", "1/6", "1/3", "0"}, 4},
      {{"2/5", "8/5", "-4/3", "-1/6", "1"}, 4},
      {{"1/2", "1/2", "-1/4", "1/8", "1/8"}, 5},
      {{"3/2", "-1/2", "-8/15", "1/3", "1/5"}, 5},
      {{"-1/2", "1/2", "3/14", "1/7", "1/7"}, 5},
      {{"1/3", "1/5", "-4/15", "1/2", "0"}, 6},
      {{"1/4", "1/3", "-19/24", "3/2", "-1/2"}, 6},
      {{"2/7", "1/7", "-3/14", "-1/2", "1"}, 6},
  };
  return rows;
}

const std::vector<TableRow>& b4_nonexistence_table() {
  static const std::vector<TableRow> rows{
      {{"1/8", "1/8", "-1/8", "1/4", "1/4"}, 0},
      {{"1", "0", "-8/15", "1/3", "1/5"}, 0},
      {{"1/3", "1/5", "-19/15", "1", "1/2"}, 0},
      {{"1/3", "1/5", "-3/5", "1/2", "1/3"}, 0},
      {{"1/3", "2/3", "-1/5", "1/5", "0"}, 0},
      {{"1/5", "1/5", "-8/15", "1/3", "1/2"}, 0},
      {{"1/3", "1/7", "-71/1386", "2/9", "1/11"}, 0},
      {{"2/3", "-1/5", "27/70", "1/6", "-2/7"}, 0},
      {{"5/7", "3/7", "-55/84", "1/4", "1/3"}, 0},
      {{"1/2", "1/3", "-5/12", "1/4", "1/4"}, 0},
      {{"1", "1", "-31/30", "1/3", "1/5"}, 0},
      {{"0", "1", "-3/8", "1/4", "1/8"}, 0},
      {{"1/4", "1/4", "-1/4", "1/3", "1/6"}, 0},
      {{"2/3", "1/3", "-3/4", "1/2", "1/4"}, 0},
      {{"1/6", "1/6", "-5/12", "1/4", "1/2"}, 0},
      {{"2", "1", "-41/30", "1/6", "1/5"}, 0},
      {{"1/9", "2/9", "-2/3", "5/4", "-1/4"}, 0},
      {{"-1/3", "1/3", "1/3", "1/2", "-1/3"}, 0},
      {{"1/10", "3/10", "-11/30", "1/2", "1/6"}, 0},
      {{"4/3", "1/3", "-8/15", "1/5", "0"}, 0},
  };
  return rows;
}

}  // namespace fixtures
