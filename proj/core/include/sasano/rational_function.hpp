#pragma once

#include <string>

#include "sasano/polynomial.hpp"
#include "sasano/rational.hpp"

namespace sasano {

// num/den in lowest terms with monic den.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction t() { return RationalFunction(Polynomial::t()); }
  // c * t^k for any integer k.
  static RationalFunction monomial(const Rational& c, long k);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
  // Value of a constant function; throws DomainError otherwise.
  Rational constant_value() const;

  // Throws DomainError at a pole.
  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  RationalFunction derivative() const;
  // f(-t)
  RationalFunction negate_var() const;
  RationalFunction inverse() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace sasano
