#include "sasano/rational.hpp"

#include <cctype>
#include <ostream>

#include "sasano/errors.hpp"

namespace sasano {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, 1);
  q_ /= den;
}

Rational Rational::parse(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer(s)) throw ParseError("not a rational: '" + std::string(text) + "'");
    return Rational(parse_integer(s));
  }
  auto n = trim(s.substr(0, slash));
  auto d = trim(s.substr(slash + 1));
  if (!valid_integer(n) || !valid_integer(d)) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(d);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(parse_integer(n), den);
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

bool Rational::is_odd_integer() const {
  return is_integer() && mpz_odd_p(q_.get_num_mpz_t());
}

bool Rational::is_even_integer() const {
  return is_integer() && mpz_even_p(q_.get_num_mpz_t());
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sasano

std::size_t std::hash<sasano::Rational>::operator()(const sasano::Rational& r) const noexcept {
  return std::hash<std::string>{}(r.str());
}
