#include "sasano/systems.hpp"

#include <algorithm>
#include <cctype>

#include "sasano/errors.hpp"

namespace sasano {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return s;
}

}  // namespace

std::string to_string(System s) {
  switch (s) {
    case System::B4: return "B4";
    case System::D4: return "D4";
    case System::D5: return "D5";
  }
  return "?";
}

std::string to_string(Chart c) {
  switch (c) {
    case Chart::Affine: return "affine";
    case Chart::M3: return "m3";
    case Chart::R1: return "r1";
    case Chart::R3: return "r3";
    case Chart::R5: return "r5";
  }
  return "?";
}

System parse_system(const std::string& text) {
  auto s = lower(text);
  if (s == "b4") return System::B4;
  if (s == "d4") return System::D4;
  if (s == "d5") return System::D5;
  throw ParseError("unknown system '" + text + "'");
}

Chart parse_chart(const std::string& text) {
  auto s = lower(text);
  if (s == "affine") return Chart::Affine;
  if (s == "m3") return Chart::M3;
  if (s == "r1") return Chart::R1;
  if (s == "r3") return Chart::R3;
  if (s == "r5") return Chart::R5;
  throw ParseError("unknown chart '" + text + "'");
}

bool chart_valid(System s, Chart c) {
  if (c == Chart::Affine) return true;
  if (c == Chart::M3) return s == System::B4;
  return s == System::D5;
}

Rational Params::constraint_defect() const {
  switch (system) {
    case System::B4:
      return a[0] + a[1] + Rational(2) * (a[2] + a[3] + a[4]) - Rational(1);
    case System::D4:
      return a[0] + a[1] + Rational(2) * a[2] + a[3] + a[4] - Rational(1);
    case System::D5:
      return a[0] + a[1] + a[2] + a[3] + a[4] - Rational(1, 2);
  }
  return Rational(0);
}

void Params::require_valid() const {
  if (!valid()) {
    throw DomainError(to_string(system) + " parameters violate the normalization constraint");
  }
}

Params Params::solve_last(System s, const std::array<Rational, 4>& first) {
  Params p{s, {first[0], first[1], first[2], first[3], Rational(0)}};
  Rational d = p.constraint_defect();
  // the last parameter enters with weight 2 for B4 and 1 otherwise
  p.a[4] = s == System::B4 ? -d / Rational(2) : -d;
  return p;
}

Solution Solution::negate_var() const {
  Solution out{chart, {}};
  for (std::size_t i = 0; i < 4; ++i) out.u[i] = u[i].negate_var();
  return out;
}

std::array<RationalFunction, 4> residual(const Params& p, const Solution& sol) {
  if (!chart_valid(p.system, sol.chart)) {
    throw ChartMismatch("chart " + to_string(sol.chart) + " does not belong to " +
                        to_string(p.system));
  }
  const RationalFunction t = RationalFunction::t();
  auto f = rhs<RationalFunction>(p.system, sol.chart, lift_params<RationalFunction>(p), t, sol.u);
  std::array<RationalFunction, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = t * sol.u[i].derivative() - f[i];
  return out;
}

namespace {

// Upper bound on max(deg num, deg den); subadditive under +, - and *.
struct Height {
  long h = 0;
  Height() = default;
  explicit Height(long v) : h(v) {}
  explicit Height(const Rational&) {}
  friend Height operator+(Height a, Height b) { return Height(a.h + b.h); }
  friend Height operator-(Height a, Height b) { return Height(a.h + b.h); }
  friend Height operator*(Height a, Height b) { return Height(a.h + b.h); }
  Height operator-() const { return *this; }
};

long height(const RationalFunction& f) { return std::max(f.num().degree(), f.den().degree()); }

}  // namespace

// Each residual is a rational function of height at most B, so vanishing at B + 1
// points where every component is finite proves it is identically zero.
bool residual_vanishes(const Params& p, const Solution& sol) {
  if (!chart_valid(p.system, sol.chart)) {
    throw ChartMismatch("chart " + to_string(sol.chart) + " does not belong to " +
                        to_string(p.system));
  }
  std::array<Height, 4> hu;
  for (std::size_t i = 0; i < 4; ++i) hu[i] = Height(std::max(0L, height(sol.u[i])));
  std::array<Height, 5> ha{};
  auto hf = rhs<Height>(p.system, sol.chart, ha, Height(1), hu);
  long bound = 0;
  for (std::size_t i = 0; i < 4; ++i) bound = std::max(bound, 1 + 2 * hu[i].h + hf[i].h);

  std::array<Polynomial, 4> dnum;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& f = sol.u[i];
    dnum[i] = f.num().derivative() * f.den() - f.num() * f.den().derivative();
  }
  const auto a = lift_params<Rational>(p);
  long found = 0;
  for (long k = 1; found <= bound; ++k) {
    Rational t(k);
    std::array<Rational, 4> u;
    std::array<Rational, 4> du;
    bool pole = false;
    for (std::size_t i = 0; i < 4 && !pole; ++i) {
      Rational d = sol.u[i].den()(t);
      if (d.is_zero()) {
        pole = true;
        break;
      }
      u[i] = sol.u[i].num()(t) / d;
      du[i] = dnum[i](t) / (d * d);
    }
    if (pole) continue;
    auto f = rhs<Rational>(p.system, sol.chart, a, t, u);
    for (std::size_t i = 0; i < 4; ++i) {
      if (!(t * du[i] - f[i]).is_zero()) return false;
    }
    ++found;
  }
  return true;
}

RationalFunction hamiltonian(const Params& p, const Solution& sol) {
  if (p.system != System::B4) throw UnsupportedSystem("Hamiltonian is only available for B4");
  if (sol.chart != Chart::Affine) throw ChartMismatch("Hamiltonian needs the affine chart");
  using RF = RationalFunction;
  const RF one(Rational(1));
  const RF two(Rational(2));
  const RF t = RF::t();
  const auto [x, y, z, w] = sol.u;
  const RF a1(p.a[1]);
  const RF a3(p.a[3]);
  const RF k(Rational(1) - Rational(2) * (p.a[2] + p.a[3] + p.a[4]));
  const RF l(Rational(1) - Rational(2) * p.a[4]);
  return x * x * y * (y - one) + x * (k * y - a1) + t * y + z * z * w * (w - one) +
         z * (l * w - a3) + t * w + two * y * z * (z * w + a3);
}

Rational hamiltonian_constant_oracle(const Params& p, PoleCase c) {
  if (p.system != System::B4) throw UnsupportedSystem("constant-term formula is for B4");
  const auto& a = p.a;
  Rational d = a[0] - a[1];
  Rational base = d * d / Rational(4);
  if (c == PoleCase::OrderAtLeastTwo) return base + a[3] * (a[3] + Rational(2) * a[4] - Rational(1));
  Rational s = a[3] + a[4];
  return base + s * s - s;
}

}  // namespace sasano
