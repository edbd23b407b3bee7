#include "sasano/verify.hpp"

#include <algorithm>
#include <boost/numeric/odeint.hpp>
#include <cmath>

#include "sasano/errors.hpp"
#include "sasano/laurent.hpp"

namespace sasano {

bool verify_solution(const Params& p, const Solution& sol) { return residual_vanishes(p, sol); }

namespace {

// Residues at the nonzero rational poles; flags irrational or complex poles.
std::vector<PoleResidue> residues_at_poles(const RationalFunction& f, bool& unchecked) {
  std::vector<PoleResidue> out;
  if (f.is_polynomial()) return out;
  auto roots = rational_roots(f.den());
  long rational_degree = 0;
  for (const auto& [c, m] : roots) {
    rational_degree += m;
    if (c.is_zero()) continue;
    Rational res = residue(f, c);
    out.push_back({c, res, (res / c).is_integer()});
  }
  if (rational_degree < f.den().degree()) unchecked = true;
  return out;
}

Rational coeff_at(const RationalFunction& f, const ExpansionPoint& pt, long k) {
  // local order covering t^k (at infinity s^-k)
  long order = pt.kind == ExpansionPoint::Kind::Infinity ? -k : k;
  return laurent_expand(f, pt, order).coeff(k);
}

}  // namespace

InvariantReport invariant_report(const Params& p, const Solution& sol) {
  if (p.system != System::B4) throw UnsupportedSystem("invariant report is defined for B4");
  if (sol.chart != Chart::Affine) throw ChartMismatch("invariant report needs the affine chart");
  const auto inf = ExpansionPoint::infinity();
  const auto zero = ExpansionPoint::zero();
  const auto& [x, y, z, w] = sol.u;
  InvariantReport r;
  r.a_inf_0 = coeff_at(x, inf, 0);
  r.a_0_0 = coeff_at(x, zero, 0);
  r.integrality_a = (r.a_inf_0 - r.a_0_0).is_integer();
  r.b_inf_m1_plus_d_inf_m1 = coeff_at(y, inf, -1) + coeff_at(w, inf, -1);
  RationalFunction h = hamiltonian(p, sol);
  r.h_inf_0 = coeff_at(h, inf, 0);
  r.h_0_0 = coeff_at(h, zero, 0);
  r.integrality_h = (r.h_inf_0 - r.h_0_0).is_integer();
  r.finite_pole_residues = residues_at_poles(x, r.irrational_poles_unchecked);
  r.hamiltonian_residues = residues_at_poles(h, r.irrational_poles_unchecked);
  return r;
}

namespace {

bool pole_in(const Solution& sol, const Rational& t0, const Rational& t1) {
  if (t0 <= Rational(0) && Rational(0) <= t1) return true;
  return std::any_of(sol.u.begin(), sol.u.end(), [&](const RationalFunction& f) {
    return count_real_roots(f.den(), t0, t1) > 0;
  });
}

}  // namespace

std::pair<Rational, Rational> pole_free_interval(const Solution& sol, Rational t0, Rational t1) {
  for (int k = 0; k < 1000; ++k) {
    if (!pole_in(sol, t0, t1)) return {t0, t1};
    t0 += Rational(1);
    t1 += Rational(1);
  }
  throw PoleOnPath("no pole-free interval found");
}

double numeric_crosscheck(const Params& p, const Solution& sol, const Rational& t0,
                          const Rational& t1, int steps, const NumericOptions& opts) {
  namespace ode = boost::numeric::odeint;
  if (!chart_valid(p.system, sol.chart)) throw ChartMismatch("chart does not belong to the system");
  if (!(t0 < t1)) throw DomainError("numeric_crosscheck needs t0 < t1");
  if (steps < 1) throw DomainError("numeric_crosscheck needs at least one sample");
  if (pole_in(sol, t0, t1)) {
    throw PoleOnPath("a pole lies on [" + t0.str() + ", " + t1.str() + "]");
  }
  using State = std::array<double, 4>;
  const auto a = lift_params<double>(p);
  const System sys = p.system;
  const Chart chart = sol.chart;
  auto field = [&](const State& u, State& du, double t) {
    State f = rhs<double>(sys, chart, a, t, u);
    for (std::size_t i = 0; i < 4; ++i) du[i] = f[i] / t;
  };
  auto exact = [&](double t) {
    State u;
    for (std::size_t i = 0; i < 4; ++i) u[i] = sol.u[i].eval(t);
    return u;
  };
  auto clamp = [&](double v) { return std::clamp(v, -opts.clamp, opts.clamp); };

  const double a0 = t0.to_double();
  const double b0 = t1.to_double();
  std::vector<double> times;
  for (int k = 0; k <= steps; ++k) times.push_back(a0 + (b0 - a0) * k / steps);
  State u;
  for (std::size_t i = 0; i < 4; ++i) u[i] = sol.u[i](t0).to_double() + opts.initial_offset[i];
  double worst = 0.0;
  auto observe = [&](const State& v, double t) {
    State ex = exact(t);
    for (std::size_t i = 0; i < 4; ++i) {
      double d = std::abs(clamp(v[i]) - clamp(ex[i]));
      if (!std::isfinite(d)) d = 2.0 * opts.clamp;
      worst = std::max(worst, d);
    }
  };
  auto stepper = ode::make_dense_output(opts.tolerance, opts.tolerance, ode::runge_kutta_dopri5<State>());
  try {
    ode::integrate_times(stepper, field, u, times.begin(), times.end(), (b0 - a0) / steps / 10,
                         observe);
  } catch (const std::exception&) {
    // step-size underflow near a blow-up of a perturbed trajectory
    worst = std::max(worst, 2.0 * opts.clamp);
  }
  return worst;
}

}  // namespace sasano
