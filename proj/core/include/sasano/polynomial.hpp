#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sasano/rational.hpp"

namespace sasano {

// Dense univariate polynomial in t over Q.
// Stored as content * primitive integer polynomial with positive leading coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial t() { return Polynomial({Rational(0), Rational(1)}); }
  static Polynomial monomial(const Rational& c, std::size_t k);

  std::vector<Rational> coeffs() const;
  // Primitive integer part (ascending) and rational content; zero has empty part, content 0.
  const std::vector<mpz_class>& primitive_part() const { return ic_; }
  const mpq_class& content() const { return content_; }
  static Polynomial from_integers(std::vector<mpz_class> v, const mpq_class& scale = 1);
  // Coefficient of t^k, zero outside the stored range.
  Rational coeff(long k) const;

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(ic_.size()) - 1; }
  bool is_zero() const { return ic_.empty(); }
  bool is_constant() const { return ic_.size() <= 1; }
  Rational leading() const;
  // Multiplicity of the root t = 0.
  std::size_t low_order() const;

  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  Polynomial monic() const;
  Polynomial derivative() const;
  // p(-t)
  Polynomial negate_var() const;
  // p(t + c)
  Polynomial taylor_shift(const Rational& c) const;
  // t^deg p(1/t)
  Polynomial reversed() const;
  // p / t^k, requires t^k | p
  Polynomial drop_low(std::size_t k) const;
  Polynomial square_free() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.content_ == b.content_ && a.ic_ == b.ic_;
  }

  std::string str(const std::string& var = "t") const;

 private:
  void canonicalize();
  mpq_class content_ = 0;
  std::vector<mpz_class> ic_;
};

// Euclidean division. Throws DomainError when b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// a / b when b divides a exactly, otherwise nothing. Throws DomainError when b is zero.
std::optional<Polynomial> exact_quotient(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Rational roots with multiplicity, ascending. Throws DomainError for the zero polynomial.
std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p);

// Number of distinct real roots in the closed interval [a, b].
int count_real_roots(const Polynomial& p, const Rational& a, const Rational& b);

}  // namespace sasano
