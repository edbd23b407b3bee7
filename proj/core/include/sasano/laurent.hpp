#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sasano/rational.hpp"
#include "sasano/rational_function.hpp"

namespace sasano {

struct ExpansionPoint {
  enum class Kind { Zero, Infinity, Finite };
  Kind kind = Kind::Zero;
  Rational c;

  static ExpansionPoint zero() { return {Kind::Zero, Rational(0)}; }
  static ExpansionPoint infinity() { return {Kind::Infinity, Rational(0)}; }
  static ExpansionPoint at(const Rational& c) { return {Kind::Finite, c}; }

  // "0", "inf", "c=VALUE"
  static ExpansionPoint parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const ExpansionPoint& a, const ExpansionPoint& b) {
    return a.kind == b.kind && (a.kind != Kind::Finite || a.c == b.c);
  }
};

// Truncated Laurent expansion in the local parameter s (s = t - c, or s = 1/t at
// infinity). Terms s^k are kept for valuation <= k <= order.
class LaurentSeries {
 public:
  LaurentSeries(ExpansionPoint point, long valuation, std::vector<Rational> coeffs, long order);

  const ExpansionPoint& point() const { return point_; }
  long order() const { return order_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Exponent of the leading term in the natural variable: (t - c)^lead at a finite
  // point, t^lead at infinity. For an identically-zero truncation this is the bound
  // past which nothing is known.
  long lead() const;
  // Coefficient of (t - c)^k, or of t^k at infinity. Zero outside the stored range;
  // throws DomainError beyond the truncation.
  Rational coeff(long k) const;
  // Leading coefficient first; ascending in s, so descending powers of t at infinity.
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  long valuation() const { return valuation_; }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);

 private:
  Rational local_coeff(long k) const;
  ExpansionPoint point_;
  long valuation_;
  std::vector<Rational> coeffs_;
  long order_;
};

// Expansion with terms up to s^order in the local parameter s.
LaurentSeries laurent_expand(const RationalFunction& f, const ExpansionPoint& point, long order);

// Coefficient of (t - c)^-1.
Rational residue(const RationalFunction& f, const Rational& c);

// Exponent of the leading term in the natural variable; empty for f = 0.
std::optional<long> leading_exponent(const RationalFunction& f, const ExpansionPoint& point);

}  // namespace sasano
