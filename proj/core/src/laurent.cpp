#include "sasano/laurent.hpp"

#include <algorithm>

#include "sasano/errors.hpp"

namespace sasano {

ExpansionPoint ExpansionPoint::parse(const std::string& text) {
  if (text == "0") return zero();
  if (text == "inf" || text == "infinity") return infinity();
  if (text.rfind("c=", 0) == 0) {
    Rational c = Rational::parse(text.substr(2));
    return c.is_zero() ? zero() : at(c);
  }
  throw ParseError("expansion point must be 0, inf or c=VALUE, got '" + text + "'");
}

std::string ExpansionPoint::str() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Infinity: return "inf";
    case Kind::Finite: return "c=" + c.str();
  }
  return "?";
}

LaurentSeries::LaurentSeries(ExpansionPoint point, long valuation, std::vector<Rational> coeffs,
                             long order)
    : point_(std::move(point)), valuation_(valuation), coeffs_(std::move(coeffs)), order_(order) {
  std::size_t skip = 0;
  while (skip < coeffs_.size() && coeffs_[skip].is_zero()) ++skip;
  if (skip == coeffs_.size()) {
    coeffs_.clear();
    valuation_ = order_ + 1;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(skip));
  valuation_ += static_cast<long>(skip);
  long last = valuation_ + static_cast<long>(coeffs_.size()) - 1;
  if (last > order_) coeffs_.resize(static_cast<std::size_t>(order_ - valuation_ + 1));
}

long LaurentSeries::lead() const {
  return point_.kind == ExpansionPoint::Kind::Infinity ? -valuation_ : valuation_;
}

Rational LaurentSeries::local_coeff(long k) const {
  if (k > order_) throw DomainError("coefficient beyond the truncation order");
  long i = k - valuation_;
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational LaurentSeries::coeff(long k) const {
  return local_coeff(point_.kind == ExpansionPoint::Kind::Infinity ? -k : k);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (!(a.point_ == b.point_)) throw DomainError("series at different points");
  long order = std::min(a.valuation_ + b.order_, b.valuation_ + a.order_);
  long val = a.valuation_ + b.valuation_;
  if (a.is_zero() || b.is_zero() || val > order) return LaurentSeries(a.point_, order + 1, {}, order);
  std::vector<Rational> c(static_cast<std::size_t>(order - val + 1));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < c.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentSeries(a.point_, val, std::move(c), order);
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  if (!(a.point_ == b.point_)) throw DomainError("series at different points");
  long order = std::min(a.order_, b.order_);
  long val = std::min(a.valuation_, b.valuation_);
  if (val > order) return LaurentSeries(a.point_, order + 1, {}, order);
  std::vector<Rational> c(static_cast<std::size_t>(order - val + 1));
  for (long k = val; k <= order; ++k) {
    c[static_cast<std::size_t>(k - val)] = a.local_coeff(k) + b.local_coeff(k);
  }
  return LaurentSeries(a.point_, val, std::move(c), order);
}

namespace {

// Power series quotient n/d to `terms` terms, d(0) != 0.
std::vector<Rational> series_divide(const Polynomial& n, const Polynomial& d, long terms) {
  std::vector<Rational> q(static_cast<std::size_t>(std::max(terms, 0L)));
  const Rational d0inv = d.coeff(0).inverse();
  for (long k = 0; k < terms; ++k) {
    Rational acc = n.coeff(k);
    long top = std::min(k, d.degree());
    for (long j = 1; j <= top; ++j) acc -= d.coeff(j) * q[static_cast<std::size_t>(k - j)];
    q[static_cast<std::size_t>(k)] = acc * d0inv;
  }
  return q;
}

// Numerator and denominator rewritten in the local parameter s.
std::pair<Polynomial, Polynomial> local_form(const RationalFunction& f, const ExpansionPoint& point) {
  switch (point.kind) {
    case ExpansionPoint::Kind::Zero:
      return {f.num(), f.den()};
    case ExpansionPoint::Kind::Finite:
      return {f.num().taylor_shift(point.c), f.den().taylor_shift(point.c)};
    case ExpansionPoint::Kind::Infinity: {
      // f(1/s) = s^(deg d - deg n) rev(n)(s) / rev(d)(s)
      long shift = f.den().degree() - f.num().degree();
      Polynomial n = f.num().reversed();
      if (shift > 0) n *= Polynomial::monomial(Rational(1), static_cast<std::size_t>(shift));
      Polynomial d = f.den().reversed();
      if (shift < 0) d *= Polynomial::monomial(Rational(1), static_cast<std::size_t>(-shift));
      return {n, d};
    }
  }
  return {};
}

}  // namespace

LaurentSeries laurent_expand(const RationalFunction& f, const ExpansionPoint& point, long order) {
  if (f.is_zero()) return LaurentSeries(point, order + 1, {}, order);
  auto [n, d] = local_form(f, point);
  std::size_t vn = n.low_order();
  std::size_t vd = d.low_order();
  n = n.drop_low(vn);
  d = d.drop_low(vd);
  long val = static_cast<long>(vn) - static_cast<long>(vd);
  long terms = order - val + 1;
  return LaurentSeries(point, val, series_divide(n, d, terms), order);
}

Rational residue(const RationalFunction& f, const Rational& c) {
  auto point = c.is_zero() ? ExpansionPoint::zero() : ExpansionPoint::at(c);
  return laurent_expand(f, point, -1).coeff(-1);
}

std::optional<long> leading_exponent(const RationalFunction& f, const ExpansionPoint& point) {
  if (f.is_zero()) return std::nullopt;
  auto [n, d] = local_form(f, point);
  long val = static_cast<long>(n.low_order()) - static_cast<long>(d.low_order());
  return point.kind == ExpansionPoint::Kind::Infinity ? -val : val;
}

}  // namespace sasano
