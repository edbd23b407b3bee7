#pragma once

#include <array>
#include <string>
#include <type_traits>

#include "sasano/rational.hpp"
#include "sasano/rational_function.hpp"

namespace sasano {

enum class System { B4, D4, D5 };
// M3 belongs to B4; R1 (x inverted), R3 (z inverted), R5 (both) belong to D5.
enum class Chart { Affine, M3, R1, R3, R5 };

std::string to_string(System s);
std::string to_string(Chart c);
System parse_system(const std::string& text);
Chart parse_chart(const std::string& text);
bool chart_valid(System s, Chart c);

struct Params {
  System system = System::B4;
  std::array<Rational, 5> a;

  // Left side minus right side of the normalization constraint.
  Rational constraint_defect() const;
  bool valid() const { return constraint_defect().is_zero(); }
  // Throws DomainError when the constraint fails.
  void require_valid() const;
  // Fills a[4] so that the constraint holds.
  static Params solve_last(System s, const std::array<Rational, 4>& first);

  friend bool operator==(const Params& p, const Params& q) {
    return p.system == q.system && p.a == q.a;
  }
};

struct Solution {
  Chart chart = Chart::Affine;
  std::array<RationalFunction, 4> u;

  Solution negate_var() const;
  friend bool operator==(const Solution& a, const Solution& b) {
    return a.chart == b.chart && a.u == b.u;
  }
};

namespace detail {
template <class T>
T lift(long n) {
  if constexpr (std::is_floating_point_v<T>) {
    return static_cast<T>(n);
  } else {
    return T(Rational(n));
  }
}
}  // namespace detail

// Right-hand sides F of t u' = F(t, u) for the system in the given chart.
template <class T>
std::array<T, 4> rhs(System sys, Chart chart, const std::array<T, 5>& a, const T& t,
                     const std::array<T, 4>& u) {
  const T one = detail::lift<T>(1);
  const T two = detail::lift<T>(2);
  const T four = detail::lift<T>(4);
  const T& x = u[0];
  const T& y = u[1];
  const T& z = u[2];
  const T& w = u[3];
  const T& a0 = a[0];
  const T& a1 = a[1];
  const T& a2 = a[2];
  const T& a3 = a[3];
  const T& a4 = a[4];
  switch (sys) {
    case System::B4: {
      const T k = one - two * a2 - two * a3 - two * a4;
      const T xy_rhs = -two * x * y * y + two * x * y - k * y + a1;
      if (chart == Chart::Affine) {
        const T l = one - two * a4;
        return {two * x * x * y - x * x + k * x + two * a3 * z + two * z * z * w + t,
                xy_rhs,
                two * z * z * w - z * z + l * z + two * y * z * z + t,
                -two * z * w * w + two * z * w - l * w - two * a3 * y - four * y * z * w + a3};
      }
      const T m = one - two * a3 - two * a4;
      return {two * x * x * y - x * x + k * x - two * w + t,
              xy_rhs,
              two * z * z * w + one - m * z - two * y - t * z * z,
              -two * z * w * w + two * t * z * w + a3 * t + m * w};
    }
    case System::D4: {
      const T s01 = a0 + a1;
      const T m = one - a3 - a4;
      return {two * x * x * y - x * x + s01 * x - two * w + t,
              -two * x * y * y + two * x * y - s01 * y + a1,
              two * z * z * w - t * z * z - m * z + one - two * y,
              -two * z * w * w + two * t * z * w + m * w + a3 * t};
    }
    case System::D5: {
      const T l = one - two * a4;
      const T m = one - two * a3 - two * a4;
      switch (chart) {
        case Chart::Affine: {
          const T zq = z * w + a3;
          const T xq = x * y + a1;
          return {two * x * x * y - t * x * x - two * a0 * x + one - two * x * x * z * zq,
                  -two * x * y * y + two * t * x * y + two * a0 * y + a1 * t +
                      two * z * zq * (two * x * y + a1),
                  two * z * z * w - z * z + l * z + t - two * x * z * z * xq,
                  -two * z * w * w + two * z * w - l * w + a3 + two * x * xq * (two * z * w + a3)};
        }
        case Chart::R1: {
          const T zq = z * w + a3;
          return {two * x * x * y + two * a1 * x + t + two * a0 * x - x * x + two * z * zq,
                  -two * x * y * y - two * a0 * y + two * x * y - two * a1 * y + a1,
                  two * z * z * w - z * z + l * z + t + two * y * z * z,
                  -two * z * w * w + two * z * w - l * w + a3 - two * y * (two * z * w + a3)};
        }
        case Chart::R3: {
          const T xq = x * y + a1;
          return {two * x * x * y - t * x * x - two * a0 * x + one + two * x * x * w,
                  -two * x * y * y + two * t * x * y + two * a0 * y + a1 * t -
                      two * w * (two * x * y + a1),
                  two * z * z * w + two * a3 * z + one - l * z - t * z * z + two * x * xq,
                  -two * z * w * w + two * t * z * w + m * w + a3 * t};
        }
        default: {
          const T s01 = two * a0 + two * a1;
          return {two * x * x * y - x * x + s01 * x + t - two * w,
                  -two * x * y * y - s01 * y + two * x * y + a1,
                  two * z * z * w - m * z + one - t * z * z - two * y,
                  -two * z * w * w + m * w + two * t * z * w + a3 * t};
        }
      }
    }
  }
  return {};
}

template <class T>
std::array<T, 5> lift_params(const Params& p) {
  std::array<T, 5> out;
  for (std::size_t i = 0; i < 5; ++i) {
    if constexpr (std::is_floating_point_v<T>) {
      out[i] = p.a[i].to_double();
    } else {
      out[i] = T(p.a[i]);
    }
  }
  return out;
}

// t u' - F(t, u) per equation; all zero iff sol solves the system.
// Throws ChartMismatch for a chart that does not belong to the system.
std::array<RationalFunction, 4> residual(const Params& p, const Solution& sol);
// Same verdict as checking residual() for zero, by exact evaluation at enough points.
bool residual_vanishes(const Params& p, const Solution& sol);

// B4 Hamiltonian in the affine chart; throws UnsupportedSystem or ChartMismatch otherwise.
RationalFunction hamiltonian(const Params& p, const Solution& sol);

enum class PoleCase { OrderAtLeastTwo, OrderOne };
// Closed-form constant term of H at infinity for B4.
Rational hamiltonian_constant_oracle(const Params& p, PoleCase c);

}  // namespace sasano
