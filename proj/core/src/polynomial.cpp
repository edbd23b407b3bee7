#include "sasano/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

#include "sasano/errors.hpp"

namespace sasano {

namespace {

// Largest common divisor of the entries, stopping early at 1.
mpz_class content_gcd(const std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& a : v) {
    if (a == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

}  // namespace

void Polynomial::canonicalize() {
  while (!ic_.empty() && ic_.back() == 0) ic_.pop_back();
  if (ic_.empty() || content_ == 0) {
    ic_.clear();
    content_ = 0;
    return;
  }
  mpz_class g = content_gcd(ic_);
  if (ic_.back() < 0) g = -g;
  if (g != 1) {
    for (auto& a : ic_) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    content_ *= g;
  }
  content_.canonicalize();
}

Polynomial Polynomial::from_integers(std::vector<mpz_class> v, const mpq_class& scale) {
  Polynomial p;
  p.ic_ = std::move(v);
  p.content_ = scale;
  p.canonicalize();
  return p;
}

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) {
    ic_.emplace_back(1);
    content_ = c.raw();
  }
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs)
    : Polynomial(std::vector<Rational>(coeffs)) {}

Polynomial::Polynomial(std::vector<Rational> coeffs) {
  mpz_class l = 1;
  for (const auto& a : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.den().get_mpz_t());
  ic_.reserve(coeffs.size());
  for (const auto& a : coeffs) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), l.get_mpz_t(), a.den().get_mpz_t());
    ic_.push_back(a.num() * q);
  }
  content_ = mpq_class(1, l);
  canonicalize();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  if (c.is_zero()) return {};
  Polynomial p;
  p.ic_.assign(k + 1, 0);
  p.ic_[k] = 1;
  p.content_ = c.raw();
  return p;
}

std::vector<Rational> Polynomial::coeffs() const {
  std::vector<Rational> out;
  out.reserve(ic_.size());
  for (const auto& a : ic_) out.emplace_back(mpq_class(content_ * a));
  return out;
}

Rational Polynomial::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(ic_.size())) return Rational(0);
  return Rational(mpq_class(content_ * ic_[static_cast<std::size_t>(k)]));
}

Rational Polynomial::leading() const {
  if (ic_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return Rational(mpq_class(content_ * ic_.back()));
}

std::size_t Polynomial::low_order() const {
  std::size_t k = 0;
  while (k < ic_.size() && ic_[k] == 0) ++k;
  return k;
}

// Homogeneous Horner on x = p/q: sum c_k p^k q^(n-k), then one division by q^n.
Rational Polynomial::operator()(const Rational& x) const {
  if (ic_.empty()) return Rational(0);
  const mpz_class& p = x.num();
  const mpz_class& q = x.den();
  mpz_class acc = ic_.back();
  if (q == 1) {
    for (std::size_t k = ic_.size() - 1; k-- > 0;) {
      acc *= p;
      acc += ic_[k];
    }
    return Rational(mpq_class(content_ * acc));
  }
  mpz_class qk = 1;
  for (std::size_t k = ic_.size() - 1; k-- > 0;) {
    qk *= q;
    acc *= p;
    acc += ic_[k] * qk;
  }
  mpq_class r(acc, qk);
  r.canonicalize();
  return Rational(mpq_class(content_ * r));
}

double Polynomial::eval(double x) const { return (*this)(Rational(mpq_class(x))).to_double(); }

Polynomial Polynomial::monic() const {
  if (ic_.empty()) return {};
  Polynomial r = *this;
  r.content_ = mpq_class(1, ic_.back());
  return r;
}

Polynomial Polynomial::derivative() const {
  if (ic_.size() <= 1) return {};
  std::vector<mpz_class> v(ic_.size() - 1);
  for (std::size_t k = 1; k < ic_.size(); ++k) v[k - 1] = ic_[k] * static_cast<unsigned long>(k);
  return from_integers(std::move(v), content_);
}

Polynomial Polynomial::negate_var() const {
  Polynomial r = *this;
  for (std::size_t k = 1; k < r.ic_.size(); k += 2) r.ic_[k] = -r.ic_[k];
  r.canonicalize();
  return r;
}

Polynomial Polynomial::taylor_shift(const Rational& c) const {
  if (c.is_zero() || ic_.size() <= 1) return *this;
  // f(t + p/q) = q^-n * g(q t + p) with g(s) = sum a_k s^k q^(n-k); shift g in Z.
  const std::size_t n = ic_.size() - 1;
  const mpz_class& p = c.num();
  const mpz_class& q = c.den();
  std::vector<mpz_class> v(ic_.size());
  mpz_class qk = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    v[k] = ic_[k] * qk;
    qk *= q;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = n; k > i; --k) v[k - 1] += p * v[k];
  }
  // g(q t + p) has coefficient of t^k equal to v_k q^k.
  mpz_class qpow = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    v[k] *= qpow;
    qpow *= q;
  }
  mpz_class qn;
  mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
  mpq_class scale = content_ / qn;
  return from_integers(std::move(v), scale);
}

Polynomial Polynomial::reversed() const {
  Polynomial r = *this;
  std::reverse(r.ic_.begin(), r.ic_.end());
  r.canonicalize();
  return r;
}

Polynomial Polynomial::drop_low(std::size_t k) const {
  if (k > low_order() && !ic_.empty()) throw DomainError("drop_low: not divisible by t^k");
  if (k >= ic_.size()) return {};
  Polynomial r;
  r.ic_.assign(ic_.begin() + static_cast<long>(k), ic_.end());
  r.content_ = content_;
  return r;
}

Polynomial Polynomial::square_free() const {
  if (degree() <= 0) return monic();
  Polynomial g = gcd(*this, derivative());
  return exact_quotient(*this, g)->monic();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  r.content_ = -r.content_;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.ic_.empty()) return *this;
  if (ic_.empty()) return *this = o;
  // (n1 I1)/d1 + (n2 I2)/d2 over the common denominator lcm(d1, d2)
  const mpz_class& d1 = content_.get_den();
  const mpz_class& d2 = o.content_.get_den();
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
  mpz_class f1 = content_.get_num() * (l / d1);
  mpz_class f2 = o.content_.get_num() * (l / d2);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), f1.get_mpz_t(), f2.get_mpz_t());
  mpz_divexact(f1.get_mpz_t(), f1.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(f2.get_mpz_t(), f2.get_mpz_t(), g.get_mpz_t());
  if (o.ic_.size() > ic_.size()) ic_.resize(o.ic_.size());
  for (std::size_t k = 0; k < ic_.size(); ++k) {
    ic_[k] *= f1;
    if (k < o.ic_.size()) mpz_addmul(ic_[k].get_mpz_t(), f2.get_mpz_t(), o.ic_[k].get_mpz_t());
  }
  content_ = mpq_class(g, l);
  content_.canonicalize();
  canonicalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

// Gauss: the product of primitive polynomials is primitive.
Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (ic_.empty() || o.ic_.empty()) {
    ic_.clear();
    content_ = 0;
    return *this;
  }
  std::vector<mpz_class> v(ic_.size() + o.ic_.size() - 1);
  for (std::size_t i = 0; i < ic_.size(); ++i) {
    if (ic_[i] == 0) continue;
    for (std::size_t j = 0; j < o.ic_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), ic_[i].get_mpz_t(), o.ic_[j].get_mpz_t());
    }
  }
  ic_ = std::move(v);
  content_ *= o.content_;
  return *this;
}

std::string Polynomial::str(const std::string& var) const {
  if (ic_.empty()) return "0";
  const auto c = coeffs();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    const Rational& a = c[k];
    if (a.is_zero()) continue;
    Rational mag = a.abs();
    if (first) {
      if (a.sign() < 0) os << "-";
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (k == 0 || !unit) {
      if (!mag.is_integer() && k > 0) {
        os << "(" << mag << ")";
      } else {
        os << mag;
      }
    }
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  if (auto q = exact_quotient(a, b)) return {std::move(*q), Polynomial()};
  // Pseudo-division in Z: lc^e A = Q B + R.
  std::vector<mpz_class> r(a.primitive_part());
  const auto& bc = b.primitive_part();
  const std::size_t db = bc.size() - 1;
  const mpz_class& lb = bc.back();
  std::vector<mpz_class> q(r.size() - db);
  mpz_class scale = 1;  // accumulated lc power
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r[k].get_mpz_t(), lb.get_mpz_t());
    mpz_class m = lb / g;  // multiply everything by m so r[k] becomes divisible by lb
    mpz_class f = r[k] / g;
    if (m != 1) {
      for (auto& x : r) x *= m;
      for (auto& x : q) x *= m;
      scale *= m;
    }
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k - db + j].get_mpz_t(), f.get_mpz_t(), bc[j].get_mpz_t());
  }
  // a = ca A, b = cb B: quotient ca/(cb scale) Q, remainder ca/scale R
  mpq_class cq = a.content() / (b.content() * scale);
  mpq_class cr = a.content() / mpq_class(scale);
  return {Polynomial::from_integers(std::move(q), cq), Polynomial::from_integers(std::move(r), cr)};
}

std::optional<Polynomial> exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return Polynomial();
  if (a.degree() < b.degree()) return std::nullopt;
  // b primitive divides a in Q[t] iff it does in Z[t] (Gauss).
  std::vector<mpz_class> r(a.primitive_part());
  const auto& bc = b.primitive_part();
  const std::size_t db = bc.size() - 1;
  const mpz_class& lb = bc.back();
  std::vector<mpz_class> q(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), r[k].get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k - db + j].get_mpz_t(), f.get_mpz_t(), bc[j].get_mpz_t());
    q[k - db] = std::move(f);
  }
  for (std::size_t k = 0; k < db; ++k) {
    if (r[k] != 0) return std::nullopt;
  }
  return Polynomial::from_integers(std::move(q), a.content() / b.content());
}

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

// primes stay below 2^31, so products fit in 64 bits
u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

void trim_mod(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce_mod(const std::vector<mpz_class>& a, u64 p) {
  ModPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  trim_mod(out);
  return out;
}

void make_monic_mod(ModPoly& a, u64 p) {
  if (a.empty()) return;
  u64 inv = powmod(a.back(), p - 2, p);
  for (auto& c : a) c = mulmod(c, inv, p);
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    make_monic_mod(b, p);
    // a <- a mod b
    while (a.size() >= b.size()) {
      u64 f = a.back();
      std::size_t shift = a.size() - b.size();
      if (f != 0) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          a[shift + j] = (a[shift + j] + p - mulmod(f, b[j], p)) % p;
        }
      }
      a.pop_back();
      trim_mod(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  make_monic_mod(a, p);
  return a;
}

bool divides(const Polynomial& d, const Polynomial& a) { return exact_quotient(a, d).has_value(); }

Polynomial euclid_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

}  // namespace

// Multi-prime modular gcd with Chinese remaindering; Euclid for tiny inputs.
Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Polynomial(Rational(1));
  if (a.degree() <= 2 && b.degree() <= 2) return euclid_gcd(a, b);
  const auto& A = a.primitive_part();
  const auto& B = b.primitive_part();
  const Polynomial pa = a.monic();
  const Polynomial pb = b.monic();
  mpz_class lc_gcd;
  mpz_gcd(lc_gcd.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());
  std::vector<mpz_class> h;  // CRT image, symmetric residues
  mpz_class modulus = 1;
  long best = std::min(a.degree(), b.degree()) + 1;
  u64 p = (u64{1} << 31);
  for (int rounds = 0; rounds < 100000; ++rounds) {
    // next prime below p
    do {
      --p;
    } while (!mpz_probab_prime_p(mpz_class(static_cast<unsigned long>(p)).get_mpz_t(), 25));
    if (mpz_fdiv_ui(A.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(B.back().get_mpz_t(), p) == 0) continue;
    ModPoly g = gcd_mod(reduce_mod(A, p), reduce_mod(B, p), p);
    long dg = static_cast<long>(g.size()) - 1;
    if (dg == 0) return Polynomial(Rational(1));
    if (dg > best) continue;  // unlucky prime
    u64 scale = mpz_fdiv_ui(lc_gcd.get_mpz_t(), p);
    for (auto& c : g) c = mulmod(c, scale, p);
    bool changed = true;
    if (dg < best) {
      best = dg;
      h.assign(g.size(), 0);
      modulus = static_cast<unsigned long>(p);
      for (std::size_t i = 0; i < g.size(); ++i) {
        h[i] = static_cast<unsigned long>(g[i]);
        if (h[i] > modulus / 2) h[i] -= modulus;
      }
    } else {
      // combine h (mod modulus) with g (mod p)
      mpz_class mp(static_cast<unsigned long>(p));
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), mp.get_mpz_t());
      changed = false;
      for (std::size_t i = 0; i < g.size(); ++i) {
        mpz_class r = h[i] % mp;
        mpz_class diff = (mpz_class(static_cast<unsigned long>(g[i])) - r) % mp;
        if (diff < 0) diff += mp;
        mpz_class k = (diff * inv) % mp;
        if (k != 0) changed = true;
        h[i] += k * modulus;
      }
      modulus *= mp;
      for (auto& v : h) {
        if (v > modulus / 2) v -= modulus;
        else if (v < -(modulus / 2)) v += modulus;
      }
    }
    if (changed) continue;
    // stable image: test by division
    Polynomial cand = Polynomial::from_integers(h).monic();
    if (divides(cand, pa) && divides(cand, pb)) return cand;
  }
  return euclid_gcd(a, b);
}

namespace {

void collect_prime_factors(mpz_class n, std::map<mpz_class, int>& out) {
  n = abs(n);
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (d > 2000000) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) {
        throw DomainError("rational_roots: coefficient too large to factor");
      }
      break;
    }
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::map<mpz_class, int> f;
  collect_prime_factors(n, f);
  std::vector<mpz_class> ds{1};
  for (const auto& [prime, mult] : f) {
    std::size_t existing = ds.size();
    mpz_class pk = 1;
    for (int e = 1; e <= mult; ++e) {
      pk *= prime;
      for (std::size_t i = 0; i < existing; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  std::vector<std::pair<Rational, int>> out;
  std::size_t zero_mult = p.low_order();
  Polynomial rest = p.drop_low(zero_mult);
  if (zero_mult > 0) out.emplace_back(Rational(0), static_cast<int>(zero_mult));
  if (rest.degree() >= 1) {
    Polynomial sf = rest.square_free();
    const auto& ic = sf.primitive_part();
    auto nums = positive_divisors(ic.front());
    auto dens = positive_divisors(ic.back());
    std::vector<Rational> found;
    for (const auto& d : dens) {
      for (const auto& n : nums) {
        for (int s : {1, -1}) {
          Rational r(mpq_class(mpz_class(s * n), d));
          if (sf(r).is_zero()) found.push_back(r);
        }
      }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    for (const auto& r : found) {
      int m = 0;
      Polynomial q = rest;
      Polynomial lin({-r, Rational(1)});
      while (true) {
        auto [quo, rem] = divmod(q, lin);
        if (!rem.is_zero()) break;
        ++m;
        q = std::move(quo);
      }
      out.emplace_back(r, m);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int sign_changes(const std::vector<Polynomial>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const Polynomial& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw DomainError("count_real_roots of the zero polynomial");
  if (a > b) return 0;
  Polynomial sf = p.square_free();
  if (sf.degree() <= 0) return 0;
  std::vector<Polynomial> seq{sf, sf.derivative()};
  while (!seq.back().is_zero()) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  // Sturm counts roots in (a, b]; add a root sitting exactly at a.
  int n = sign_changes(seq, a) - sign_changes(seq, b);
  if (sf(a).is_zero()) ++n;
  return n;
}

}  // namespace sasano
