#include "sasano/backlund.hpp"

#include <array>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "sasano/errors.hpp"

namespace sasano {

namespace {

using RF = RationalFunction;

RF lit(long n) { return RF(Rational(n)); }
RF param(const Rational& a) { return RF(a); }
const RF& tvar() {
  static const RF t = RF::t();
  return t;
}

[[noreturn]] void undefined(System s, Gen g, const std::string& why) {
  throw UndefinedAction(to_string(g) + " on " + to_string(s) + ": " + why);
}

Solution flipped(Solution s) { return s.negate_var(); }

}  // namespace

std::string to_string(Gen g) {
  switch (g) {
    case Gen::S0: return "s0";
    case Gen::S1: return "s1";
    case Gen::S2: return "s2";
    case Gen::S3: return "s3";
    case Gen::S4: return "s4";
    case Gen::Pi1: return "pi1";
    case Gen::Pi2: return "pi2";
    case Gen::Pi3: return "pi3";
    case Gen::Pi4: return "pi4";
    case Gen::Psi: return "psi";
  }
  return "?";
}

std::optional<Gen> parse_gen(const std::string& text) {
  static const std::map<std::string, Gen> names{
      {"s0", Gen::S0},   {"s1", Gen::S1},   {"s2", Gen::S2},   {"s3", Gen::S3},
      {"s4", Gen::S4},   {"pi1", Gen::Pi1}, {"pi2", Gen::Pi2}, {"pi3", Gen::Pi3},
      {"pi4", Gen::Pi4}, {"psi", Gen::Psi}, {"π1", Gen::Pi1},  {"π2", Gen::Pi2},
      {"π3", Gen::Pi3},  {"π4", Gen::Pi4},  {"ψ", Gen::Psi}};
  auto it = names.find(text);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

const std::vector<Gen>& generators(System s) {
  static const std::vector<Gen> b4{Gen::S0, Gen::S1, Gen::S2, Gen::S3, Gen::S4, Gen::Pi1, Gen::Pi2};
  static const std::vector<Gen> d4{Gen::S0,  Gen::S1,  Gen::S2,  Gen::S3, Gen::S4,
                                   Gen::Pi1, Gen::Pi2, Gen::Pi3, Gen::Pi4};
  static const std::vector<Gen> d5{Gen::S0, Gen::S1, Gen::S2, Gen::S3, Gen::S4, Gen::Psi};
  switch (s) {
    case System::B4: return b4;
    case System::D4: return d4;
    case System::D5: return d5;
  }
  return b4;
}

bool gen_valid(System s, Gen g) {
  for (Gen h : generators(s)) {
    if (h == g) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Words

Word::Word(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {}

namespace {

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') {
      if (--depth < 0) throw ParseError("unbalanced ')' in word '" + text + "'");
    }
    bool sep = depth == 0 && (std::isspace(static_cast<unsigned char>(ch)) || ch == ',');
    if (sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (depth != 0) throw ParseError("unbalanced '(' in word '" + text + "'");
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool is_inverse_token(const std::string& tok) {
  return tok.size() >= 5 && tok.rfind("inv(", 0) == 0 && tok.back() == ')';
}

std::string inverse_body(const std::string& tok) { return tok.substr(4, tok.size() - 5); }

int shift_index(const std::string& tok) {
  if (tok.size() == 2 && tok[0] == 'T' && tok[1] >= '1' && tok[1] <= '4') return tok[1] - '0';
  return 0;
}

void check_token(const std::string& tok) {
  if (parse_gen(tok) || shift_index(tok) != 0) return;
  if (is_inverse_token(tok)) {
    for (const auto& inner : split_tokens(inverse_body(tok))) check_token(inner);
    return;
  }
  throw ParseError("unknown word token '" + tok + "'");
}

std::string canonical_token(const std::string& tok) {
  if (auto g = parse_gen(tok)) return to_string(*g);
  if (is_inverse_token(tok)) {
    std::string body;
    for (const auto& inner : split_tokens(inverse_body(tok))) {
      if (!body.empty()) body += " ";
      body += canonical_token(inner);
    }
    return "inv(" + body + ")";
  }
  return tok;
}

}  // namespace

Word Word::parse(const std::string& text) {
  std::vector<std::string> toks;
  for (const auto& tok : split_tokens(text)) {
    check_token(tok);
    toks.push_back(canonical_token(tok));
  }
  return Word(std::move(toks));
}

std::string Word::str() const {
  std::string out;
  for (const auto& tok : tokens_) {
    if (!out.empty()) out += " ";
    out += tok;
  }
  return out;
}

Word& Word::operator+=(const Word& o) {
  tokens_.insert(tokens_.end(), o.tokens_.begin(), o.tokens_.end());
  return *this;
}

namespace {

void expand_into(System s, const std::string& tok, std::vector<Gen>& out);

std::vector<Gen> invert_gens(System s, const std::vector<Gen>& gens) {
  std::vector<Gen> out;
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    int n = generator_order(s, *it);
    for (int k = 1; k < n; ++k) out.push_back(*it);
  }
  return out;
}

void expand_into(System s, const std::string& tok, std::vector<Gen>& out) {
  if (auto g = parse_gen(tok)) {
    if (!gen_valid(s, *g)) throw ParseError(tok + " is not a generator of " + to_string(s));
    out.push_back(*g);
    return;
  }
  if (int i = shift_index(tok)) {
    auto gens = expand(s, shift_word(s, i));
    out.insert(out.end(), gens.begin(), gens.end());
    return;
  }
  if (is_inverse_token(tok)) {
    std::vector<Gen> inner;
    for (const auto& t : split_tokens(inverse_body(tok))) expand_into(s, t, inner);
    auto inv = invert_gens(s, inner);
    out.insert(out.end(), inv.begin(), inv.end());
    return;
  }
  throw ParseError("unknown word token '" + tok + "'");
}

}  // namespace

std::vector<Gen> expand(System s, const Word& w) {
  std::vector<Gen> out;
  for (const auto& tok : w.tokens()) expand_into(s, tok, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parameter actions

Params act_params(Gen g, const Params& p) {
  if (!gen_valid(p.system, g)) {
    throw ParseError(to_string(g) + " is not a generator of " + to_string(p.system));
  }
  const auto& a = p.a;
  const Rational two(2);
  Params q = p;
  auto set = [&](Rational b0, Rational b1, Rational b2, Rational b3, Rational b4) {
    q.a = {std::move(b0), std::move(b1), std::move(b2), std::move(b3), std::move(b4)};
  };
  switch (p.system) {
    case System::B4:
      switch (g) {
        case Gen::S0: set(-a[0], a[1], a[2] + a[0], a[3], a[4]); break;
        case Gen::S1: set(a[0], -a[1], a[2] + a[1], a[3], a[4]); break;
        case Gen::S2: set(a[0] + a[2], a[1] + a[2], -a[2], a[3] + a[2], a[4]); break;
        case Gen::S3: set(a[0], a[1], a[2] + a[3], -a[3], a[4] + a[3]); break;
        case Gen::S4: set(a[0], a[1], a[2], a[3] + two * a[4], -a[4]); break;
        case Gen::Pi1: set(a[1], a[0], a[2], a[3], a[4]); break;
        case Gen::Pi2: set(two * a[4] + a[3], a[3], a[2], a[1], (a[0] - a[1]) / two); break;
        default: break;
      }
      break;
    case System::D4:
      switch (g) {
        case Gen::S0: set(-a[0], a[1], a[2] + a[0], a[3], a[4]); break;
        case Gen::S1: set(a[0], -a[1], a[2] + a[1], a[3], a[4]); break;
        case Gen::S2: set(a[0] + a[2], a[1] + a[2], -a[2], a[3] + a[2], a[4] + a[2]); break;
        case Gen::S3: set(a[0], a[1], a[2] + a[3], -a[3], a[4]); break;
        case Gen::S4: set(a[0], a[1], a[2] + a[4], a[3], -a[4]); break;
        case Gen::Pi1: set(a[1], a[0], a[2], a[3], a[4]); break;
        case Gen::Pi2: set(a[0], a[1], a[2], a[4], a[3]); break;
        case Gen::Pi3: set(a[4], a[3], a[2], a[1], a[0]); break;
        case Gen::Pi4: set(a[3], a[4], a[2], a[0], a[1]); break;
        default: break;
      }
      break;
    case System::D5:
      switch (g) {
        case Gen::S0: set(-a[0], a[1] + two * a[0], a[2], a[3], a[4]); break;
        case Gen::S1: set(a[0] + a[1], -a[1], a[2] + a[1], a[3], a[4]); break;
        case Gen::S2: set(a[0], a[1] + a[2], -a[2], a[3] + a[2], a[4]); break;
        case Gen::S3: set(a[0], a[1], a[2] + a[3], -a[3], a[4] + a[3]); break;
        case Gen::S4: set(a[0], a[1], a[2], a[3] + two * a[4], -a[4]); break;
        case Gen::Psi: set(a[4], a[3], a[2], a[1], a[0]); break;
        default: break;
      }
      break;
  }
  return q;
}

// ---------------------------------------------------------------------------
// Solution actions

namespace {

// x + a/den, or the identity convention when den vanishes identically.
bool shifted_by_quotient(const RF& x, const Rational& a, const RF& den, RF& out) {
  if (den.is_zero()) {
    if (!a.is_zero()) return false;
    out = x;
    return true;
  }
  out = x + param(a) / den;
  return true;
}

Solution act_b4(Gen g, const Params& p, const Solution& s) {
  const auto& a = p.a;
  const RF& t = tvar();
  const auto& [x, y, z, w] = s.u;
  const bool m3 = s.chart == Chart::M3;
  switch (g) {
    case Gen::S0:
    case Gen::S1: {
      const Rational& ai = g == Gen::S0 ? a[0] : a[1];
      RF den = g == Gen::S0 ? y - lit(1) : y;
      RF nx;
      if (!shifted_by_quotient(x, ai, den, nx)) undefined(p.system, g, "y is constant at the pole");
      return {s.chart, {nx, y, z, w}};
    }
    case Gen::S2: {
      if (a[2].is_zero()) return s;
      if (!m3) {
        RF d = x - z;
        if (d.is_zero()) undefined(p.system, g, "x - z vanishes identically");
        RF q = param(a[2]) / d;
        return {s.chart, {x, y - q, z, w + q}};
      }
      RF d = x * z - lit(1);
      if (d.is_zero()) undefined(p.system, g, "x z3 - 1 vanishes identically");
      return {s.chart, {x, y - param(a[2]) * z / d, z, w - param(a[2]) * x / d}};
    }
    case Gen::S3: {
      if (!m3) {
        if (w.is_zero()) {
          if (a[3].is_zero()) return s;
          return {Chart::M3, {x, y, RF(), -param(a[3]) * z}};
        }
        return {s.chart, {x, y, z + param(a[3]) / w, w}};
      }
      RF d = w * z + param(a[3]);
      if (d.is_zero()) return {Chart::M3, {x, y, RF(), w}};
      return {Chart::Affine, {x, y, w / d, -z * d}};
    }
    case Gen::S4: {
      if (m3) return flipped({Chart::M3, {x, y, z, w - t}});
      if (z.is_zero()) undefined(p.system, g, "z vanishes identically");
      return flipped({s.chart, {x, y, z, w - lit(2) * param(a[4]) / z + t / (z * z)}});
    }
    case Gen::Pi1:
      return flipped({s.chart, {-x, lit(1) - y, -z, -w}});
    case Gen::Pi2: {
      RF nx, ny;
      if (m3) {
        nx = t * z;
        ny = w / t;
      } else {
        if (z.is_zero()) undefined(p.system, g, "z vanishes identically");
        nx = t / z;
        ny = -(z / t) * (z * w + param(a[3]));
      }
      if (x.is_zero()) return {Chart::M3, {nx, ny, RF(), t * y}};
      return {Chart::Affine, {nx, ny, t / x, -(x / t) * (x * y + param(a[1]))}};
    }
    default:
      break;
  }
  undefined(p.system, g, "not a generator");
}

Solution act_d4(Gen g, const Params& p, const Solution& s) {
  const auto& a = p.a;
  const RF& t = tvar();
  const auto& [x, y, z, w] = s.u;
  RF out;
  switch (g) {
    case Gen::S0:
      if (!shifted_by_quotient(x, a[0], y - lit(1), out)) undefined(p.system, g, "y - 1 vanishes");
      return {s.chart, {out, y, z, w}};
    case Gen::S1:
      if (!shifted_by_quotient(x, a[1], y, out)) undefined(p.system, g, "y vanishes");
      return {s.chart, {out, y, z, w}};
    case Gen::S2: {
      if (a[2].is_zero()) return s;
      RF d = x * z - lit(1);
      if (d.is_zero()) undefined(p.system, g, "x z - 1 vanishes identically");
      return {s.chart, {x, y - param(a[2]) * z / d, z, w - param(a[2]) * x / d}};
    }
    case Gen::S3:
      if (!shifted_by_quotient(z, a[3], w, out)) undefined(p.system, g, "w vanishes");
      return {s.chart, {x, y, out, w}};
    case Gen::S4:
      if (!shifted_by_quotient(z, a[4], w - t, out)) undefined(p.system, g, "w - t vanishes");
      return {s.chart, {x, y, out, w}};
    case Gen::Pi1:
      return flipped({s.chart, {-x, lit(1) - y, -z, -w}});
    case Gen::Pi2:
      return flipped({s.chart, {x, y, z, w - t}});
    case Gen::Pi3:
      return {s.chart, {t * z, w / t, x / t, t * y}};
    case Gen::Pi4:
      return {s.chart, {-t * z, (t - w) / t, -x / t, t - t * y}};
    default:
      break;
  }
  undefined(p.system, g, "not a generator");
}

// One coordinate pair of a D5 solution, either affine (x, y) or inverted (x1, y1).
struct Part {
  bool inverted;
  RF a;
  RF b;
};

Chart d5_chart(bool xinv, bool zinv) {
  if (xinv && zinv) return Chart::R5;
  if (xinv) return Chart::R1;
  if (zinv) return Chart::R3;
  return Chart::Affine;
}

// The s1/s3 pattern: x + a/y on an affine part, with the infinite image when y = 0.
Part reflect_part(const Rational& a, const Part& in) {
  if (!in.inverted) {
    if (in.b.is_zero()) {
      if (a.is_zero()) return in;
      return {true, RF(), -param(a) * in.a};
    }
    return {false, in.a + param(a) / in.b, in.b};
  }
  RF d = in.a * in.b + param(a);
  if (d.is_zero()) return {true, RF(), in.b};
  return {false, in.b / d, -in.a * d};
}

Solution act_d5(Gen g, const Params& p, const Solution& s) {
  const auto& a = p.a;
  const RF& t = tvar();
  const bool xinv = s.chart == Chart::R1 || s.chart == Chart::R5;
  const bool zinv = s.chart == Chart::R3 || s.chart == Chart::R5;
  Part xp{xinv, s.u[0], s.u[1]};
  Part zp{zinv, s.u[2], s.u[3]};
  auto build = [](const Part& px, const Part& pz) {
    return Solution{d5_chart(px.inverted, pz.inverted), {px.a, px.b, pz.a, pz.b}};
  };
  switch (g) {
    case Gen::S0: {
      Part nx;
      if (xp.inverted) {
        nx = {true, -xp.a, lit(1) - xp.b};
      } else {
        if (xp.a.is_zero()) undefined(p.system, g, "x vanishes identically");
        const RF& x = xp.a;
        nx = {false, -x, -xp.b + lit(2) * param(a[0]) / x - lit(1) / (x * x)};
      }
      Part nz{zp.inverted, -zp.a, -zp.b};
      return flipped(build(nx, nz));
    }
    case Gen::S1:
      return build(reflect_part(a[1], xp), zp);
    case Gen::S3:
      return build(xp, reflect_part(a[3], zp));
    case Gen::S2: {
      if (a[2].is_zero()) return s;
      const RF q = param(a[2]);
      if (!xp.inverted && !zp.inverted) {
        RF d = xp.a * zp.a - lit(1);
        if (d.is_zero()) undefined(p.system, g, "x z - 1 vanishes identically");
        return build({false, xp.a, xp.b - q * zp.a / d}, {false, zp.a, zp.b - q * xp.a / d});
      }
      if (xp.inverted && !zp.inverted) {
        RF d = zp.a - xp.a;
        if (d.is_zero()) undefined(p.system, g, "z - x1 vanishes identically");
        return build({true, xp.a, xp.b + q / d}, {false, zp.a, zp.b - q / d});
      }
      if (!xp.inverted && zp.inverted) {
        RF d = xp.a - zp.a;
        if (d.is_zero()) undefined(p.system, g, "x - z3 vanishes identically");
        return build({false, xp.a, xp.b - q / d}, {true, zp.a, zp.b + q / d});
      }
      RF d = lit(1) - xp.a * zp.a;
      if (d.is_zero()) undefined(p.system, g, "1 - x1 z3 vanishes identically");
      return build({true, xp.a, xp.b + q * zp.a / d}, {true, zp.a, zp.b + q * xp.a / d});
    }
    case Gen::S4: {
      Part nz;
      if (zp.inverted) {
        nz = {true, zp.a, zp.b - t};
      } else {
        const RF& z = zp.a;
        if (z.is_zero()) undefined(p.system, g, "z vanishes identically");
        nz = {false, z, zp.b - lit(2) * param(a[4]) / z + t / (z * z)};
      }
      return flipped(build(xp, nz));
    }
    case Gen::Psi: {
      Part nx = zp.inverted ? Part{true, t * zp.a, zp.b / t} : Part{false, zp.a / t, t * zp.b};
      Part nz = xp.inverted ? Part{true, xp.a / t, t * xp.b} : Part{false, t * xp.a, xp.b / t};
      return build(nx, nz);
    }
    default:
      break;
  }
  undefined(p.system, g, "not a generator");
}

}  // namespace

Solution act_solution(Gen g, const Params& p, const Solution& sol) {
  if (!gen_valid(p.system, g)) {
    throw ParseError(to_string(g) + " is not a generator of " + to_string(p.system));
  }
  if (!chart_valid(p.system, sol.chart)) {
    throw ChartMismatch("chart " + to_string(sol.chart) + " does not belong to " +
                        to_string(p.system));
  }
  switch (p.system) {
    case System::B4: return act_b4(g, p, sol);
    case System::D4: return act_d4(g, p, sol);
    case System::D5: return act_d5(g, p, sol);
  }
  return sol;
}

WordImage act_word(const Word& w, const Params& p, const std::optional<Solution>& sol) {
  WordImage img{p, sol};
  for (Gen g : expand(p.system, w)) {
    if (img.solution) img.solution = act_solution(g, img.params, *img.solution);
    img.params = act_params(g, img.params);
  }
  return img;
}

// ---------------------------------------------------------------------------
// Shift operators

Word shift_word(System s, int i) {
  if (i < 1 || i > 4) throw ParseError("shift index must be 1..4");
  if (s == System::B4) {
    static const Word t1 = Word::parse("s4 pi1 s1 s2 s4 s3 s4 s3 s2 s1");
    Word w = t1;
    static const char* conj[] = {"s0", "s2", "s3"};
    for (int k = 1; k < i; ++k) {
      Word c({conj[k - 1]});
      w = c + w + c;
    }
    return w;
  }
  if (s == System::D4) {
    static const char* words[] = {"s3 s0 s2 s4 s1 s2 pi4", "s4 s1 s2 s3 s0 s2 pi4",
                                  "s3 s2 s0 s1 s2 s3 pi1 pi2", "s4 s3 s2 s1 s0 s2 pi1 pi2"};
    return Word::parse(words[i - 1]);
  }
  throw UnsupportedSystem("shift operators are defined for B4 and D4");
}

std::array<Rational, 5> shift_vector(System s, int i) {
  static const std::array<std::array<long, 5>, 4> b4{{{1, -1, 0, 0, 0},
                                                       {-1, -1, 1, 0, 0},
                                                       {0, 0, -1, 1, 0},
                                                       {0, 0, 0, -1, 1}}};
  static const std::array<std::array<long, 5>, 4> d4{{{1, 0, -1, 1, 0},
                                                       {0, 1, -1, 0, 1},
                                                       {0, 0, 0, 1, -1},
                                                       {0, 0, -1, 1, 1}}};
  if (i < 1 || i > 4) throw ParseError("shift index must be 1..4");
  if (s == System::D5) throw UnsupportedSystem("shift operators are defined for B4 and D4");
  const auto& row = (s == System::B4 ? b4 : d4)[static_cast<std::size_t>(i - 1)];
  std::array<Rational, 5> out;
  for (std::size_t k = 0; k < 5; ++k) out[k] = Rational(row[k]);
  return out;
}

int generator_order(System s, Gen g) {
  static std::mutex mu;
  static std::map<std::pair<System, Gen>, int> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(s, g);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  // generic point: distinct primes over distinct denominators
  Params p = Params::solve_last(s, {Rational(2, 7), Rational(3, 11), Rational(5, 13), Rational(7, 17)});
  Params q = act_params(g, p);
  int n = 1;
  while (!(q == p)) {
    if (++n > 12) throw NormalizationFailed("generator order exceeds 12");
    q = act_params(g, q);
  }
  cache[key] = n;
  return n;
}

Word invert_word(System s, const Word& w) {
  std::vector<std::string> out;
  const auto& toks = w.tokens();
  for (auto it = toks.rbegin(); it != toks.rend(); ++it) {
    const std::string& tok = *it;
    if (auto g = parse_gen(tok)) {
      if (!gen_valid(s, *g)) throw ParseError(tok + " is not a generator of " + to_string(s));
      int n = generator_order(s, *g);
      for (int k = 1; k < n; ++k) out.push_back(to_string(*g));
    } else if (is_inverse_token(tok)) {
      for (const auto& inner : split_tokens(inverse_body(tok))) out.push_back(inner);
    } else {
      out.push_back("inv(" + tok + ")");
    }
  }
  return Word(std::move(out));
}

// ---------------------------------------------------------------------------
// Equivalences and charts

Params equivalence_params(System from, System to, const Params& p) {
  if (from != System::D4 || p.system != System::D4 || (to != System::B4 && to != System::D5)) {
    throw UnsupportedSystem("equivalence maps go from D4 to B4 or D5");
  }
  const auto& a = p.a;
  const Rational two(2);
  if (to == System::B4) return Params{System::B4, {a[0], a[1], a[2], a[3], (a[4] - a[3]) / two}};
  return Params{System::D5, {(a[0] - a[1]) / two, a[1], a[2], a[3], (a[4] - a[3]) / two}};
}

namespace {

// (u1, v1) = (1/u, -(u v + c) u) is an involution of the chart pair.
std::pair<RF, RF> uninvert(const RF& u1, const RF& v1, const Rational& c) {
  return {u1.inverse(), -u1 * (v1 * u1 + param(c))};
}

}  // namespace

std::pair<Params, Solution> equivalence_map(System from, System to, const Params& p,
                                            const Solution& sol) {
  Params q = equivalence_params(from, to, p);
  if (sol.chart != Chart::Affine) throw ChartMismatch("D4 solutions live in the affine chart");
  // The D4 variables are the coordinates of the target in its inverted chart.
  Solution img{to == System::B4 ? Chart::M3 : Chart::R5, sol.u};
  return {q, to_affine_if_finite(q, img)};
}

Solution to_affine_if_finite(const Params& p, const Solution& sol) {
  Solution out = sol;
  const auto& a = p.a;
  switch (sol.chart) {
    case Chart::Affine:
      return out;
    case Chart::M3:
    case Chart::R3:
      if (!sol.u[2].is_zero()) {
        std::tie(out.u[2], out.u[3]) = uninvert(sol.u[2], sol.u[3], a[3]);
        out.chart = Chart::Affine;
      }
      return out;
    case Chart::R1:
      if (!sol.u[0].is_zero()) {
        std::tie(out.u[0], out.u[1]) = uninvert(sol.u[0], sol.u[1], a[1]);
        out.chart = Chart::Affine;
      }
      return out;
    case Chart::R5: {
      bool xinv = sol.u[0].is_zero();
      bool zinv = sol.u[2].is_zero();
      if (!xinv) std::tie(out.u[0], out.u[1]) = uninvert(sol.u[0], sol.u[1], a[1]);
      if (!zinv) std::tie(out.u[2], out.u[3]) = uninvert(sol.u[2], sol.u[3], a[3]);
      out.chart = d5_chart(xinv, zinv);
      return out;
    }
  }
  return out;
}

}  // namespace sasano
