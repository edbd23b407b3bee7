#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sasano/systems.hpp"

namespace fixtures {

using sasano::Params;
using sasano::Rational;
using sasano::RationalFunction;
using sasano::Solution;
using sasano::System;

Rational q(const std::string& text);
Params params(System s, const std::array<std::string, 5>& alphas);
oracle::Alphas to_frac(const Params& p);
std::array<double, 5> to_double(const Params& p);

// p(t) / t^k from ascending coefficients.
RationalFunction laurent_poly(const std::vector<Rational>& coeffs, long k = 0);
// c t + d
RationalFunction linear(const Rational& c, const Rational& d = Rational(0));

// Small random rational with |num| <= max_num, 1 <= den <= max_den.
Rational random_rational(std::mt19937_64& rng, long max_num = 9, long max_den = 7);
// Random tuple obeying the system's constraint.
Params random_params(System s, std::mt19937_64& rng);
// B4 or D4 with a0 = a1, a3 = -a4, a4 != 0.
Params random_standard_b4d4(System s, std::mt19937_64& rng);
// D5 with a0 = 0, a3 = -a4, a1 and a4 nonzero.
Params random_standard_d5(std::mt19937_64& rng);

// Explicit standard-form solutions, written out by hand.
Solution b4_seed(const Params& p);   // (0, 1/2, t/(2a4), 0)
Solution d4_seed(const Params& p);   // (0, 1/2, 2a4/t, t/2)
Solution d5_seed_r1(const Params& p);  // chart R1 image of (inf, 0, t/(2a4), 0)

// B4 with a0 = a1 = 1/2, a2 = -1/2, a3 = a4 = 1/4 and (0, 1/2 + 1/(4t), 2t, -1/(4t)).
Params b4_simple_pole_params();
Solution b4_simple_pole_solution();

// B4 rows for the existence table: each satisfies exactly the condition named.
struct TableRow {
  std::array<std::string, 5> alphas;
  int condition;  // 0 when no condition holds
};
const std::vector<TableRow>& b4_existence_table();
const std::vector<TableRow>& b4_nonexistence_table();

}  // namespace fixtures
