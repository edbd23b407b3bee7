#include "sasano/rational_function.hpp"

#include "sasano/errors.hpp"

namespace sasano {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::monomial(const Rational& c, long k) {
  if (k >= 0) return RationalFunction(Polynomial::monomial(c, static_cast<std::size_t>(k)));
  return RationalFunction(Polynomial(c), Polynomial::monomial(Rational(1), static_cast<std::size_t>(-k)));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = *exact_quotient(num_, g);
      den_ = *exact_quotient(den_, g);
    }
  }
  Rational lc = den_.leading();
  if (lc != Rational(1)) {
    Polynomial inv(lc.inverse());
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw DomainError("not a constant: " + str());
  return num_.coeff(0);
}

Rational RationalFunction::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (d.is_zero()) throw DomainError("evaluation at a pole t=" + x.str());
  return num_(x) / d;
}

double RationalFunction::eval(double x) const { return num_.eval(x) / den_.eval(x); }

RationalFunction RationalFunction::derivative() const {
  if (is_polynomial()) return RationalFunction(num_.derivative());
  Polynomial n = num_.derivative() * den_ - num_ * den_.derivative();
  return RationalFunction(std::move(n), den_ * den_);
}

RationalFunction RationalFunction::negate_var() const {
  return RationalFunction(num_.negate_var(), den_.negate_var());
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return num_.str();
  std::string n = num_.degree() <= 0 ? num_.str() : "(" + num_.str() + ")";
  return n + "/(" + den_.str() + ")";
}

}  // namespace sasano
