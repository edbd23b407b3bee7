#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "sasano/rational.hpp"
#include "sasano/systems.hpp"

namespace sasano {

// Throws ChartMismatch.
bool verify_solution(const Params& p, const Solution& sol);

struct PoleResidue {
  Rational c;
  Rational res;
  bool multiple_of_c;  // res = n c for an integer n
};

struct InvariantReport {
  Rational a_inf_0;
  Rational a_0_0;
  bool integrality_a = false;
  Rational b_inf_m1_plus_d_inf_m1;
  Rational h_inf_0;
  Rational h_0_0;
  bool integrality_h = false;
  std::vector<PoleResidue> finite_pole_residues;   // of x
  std::vector<PoleResidue> hamiltonian_residues;   // of H
  bool irrational_poles_unchecked = false;
};

// B4 affine chart only.
InvariantReport invariant_report(const Params& p, const Solution& sol);

struct NumericOptions {
  double tolerance = 1e-12;
  double clamp = 1e6;
  std::array<double, 4> initial_offset{0.0, 0.0, 0.0, 0.0};
};

// Integrates t u' = F(t, u) from the exact value at t0 and returns the largest
// absolute deviation from the exact solution at `steps` evenly spaced samples.
// Throws PoleOnPath when a component has a real pole in [t0, t1] or 0 lies in it.
double numeric_crosscheck(const Params& p, const Solution& sol, const Rational& t0,
                          const Rational& t1, int steps, const NumericOptions& opts = {});

// [t0, t1] shifted right by whole units until no component has a pole on it.
std::pair<Rational, Rational> pole_free_interval(const Solution& sol, Rational t0 = Rational(1),
                                                 Rational t1 = Rational(2));

}  // namespace sasano
