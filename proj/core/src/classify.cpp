#include "sasano/classify.hpp"

#include <deque>
#include <map>
#include <string>

#include "sasano/errors.hpp"
#include "sasano/lattice.hpp"

namespace sasano {

namespace {

bool congruent(const Rational& a, const Rational& b) {
  return a.is_integer() && b.is_integer() && (a - b).is_even_integer();
}

bool incongruent(const Rational& a, const Rational& b) {
  return a.is_integer() && b.is_integer() && (a - b).is_odd_integer();
}

std::string params_str(const Params& p) {
  std::string s = to_string(p.system) + "(";
  for (std::size_t i = 0; i < 5; ++i) s += (i ? "," : "") + p.a[i].str();
  return s + ")";
}

}  // namespace

std::array<bool, 6> existence_conditions(const Params& p) {
  const auto& a = p.a;
  const Rational two(2);
  switch (p.system) {
    case System::B4: {
      Rational d = a[0] - a[1];
      Rational s = a[0] + a[1];
      Rational u = two * a[3] + two * a[4];
      Rational v = two * a[4];
      return {congruent(d, u), congruent(d, v), congruent(s, u), congruent(s, v),
              incongruent(d, s), v.is_integer() && (two * a[3]).is_odd_integer()};
    }
    case System::D4: {
      Rational d = a[0] - a[1];
      Rational s = a[0] + a[1];
      Rational u = a[3] + a[4];
      Rational v = a[3] - a[4];
      return {congruent(d, u), congruent(d, v), congruent(s, u), congruent(s, v),
              incongruent(d, s), incongruent(v, u)};
    }
    case System::D5: {
      Rational d = two * a[0];
      Rational s = two * a[0] + two * a[1];
      Rational u = two * a[3] + two * a[4];
      Rational v = two * a[4];
      return {congruent(d, u), congruent(d, v), congruent(s, u), congruent(s, v),
              d.is_integer() && (two * a[1]).is_odd_integer(),
              v.is_integer() && (two * a[3]).is_odd_integer()};
    }
  }
  return {};
}

ClassificationResult classify(const Params& p) {
  p.require_valid();
  ClassificationResult r;
  auto c = existence_conditions(p);
  for (int i = 0; i < 6; ++i) {
    if (c[static_cast<std::size_t>(i)]) {
      r.verdict = Verdict::Exists;
      r.condition = i + 1;
      break;
    }
  }
  return r;
}

bool is_standard_form(const Params& p) {
  if (!p.valid()) return false;
  const auto& a = p.a;
  if (p.system == System::D5) {
    return a[0].is_zero() && (a[3] + a[4]).is_zero() && !a[1].is_zero() && !a[4].is_zero();
  }
  return (a[0] - a[1]).is_zero() && (a[3] + a[4]).is_zero() && !a[4].is_zero();
}

std::optional<Word> search_standard_form(const Params& p, std::size_t max_depth,
                                         std::size_t max_states) {
  if (is_standard_form(p)) return Word();
  std::vector<std::string> alphabet;
  for (Gen g : generators(p.system)) alphabet.push_back(to_string(g));
  if (p.system != System::D5) {
    for (int i = 1; i <= 4; ++i) {
      alphabet.push_back("T" + std::to_string(i));
      alphabet.push_back("inv(T" + std::to_string(i) + ")");
    }
  }
  std::map<std::array<Rational, 5>, Word> seen{{p.a, Word()}};
  std::deque<std::pair<Params, std::size_t>> queue{{p, 0}};
  while (!queue.empty()) {
    auto [cur, depth] = queue.front();
    queue.pop_front();
    if (depth >= max_depth) continue;
    const Word base = seen.at(cur.a);
    for (const auto& tok : alphabet) {
      Word step({tok});
      Params next = act_word(step, cur).params;
      if (seen.count(next.a)) continue;
      Word w = base + step;
      if (is_standard_form(next)) return w;
      if (seen.size() >= max_states) return std::nullopt;
      seen.emplace(next.a, w);
      queue.emplace_back(next, depth + 1);
    }
  }
  return std::nullopt;
}

namespace {

std::vector<Word> candidate_words(const Params& p) {
  if (is_standard_form(p)) return {Word()};
  std::vector<Word> out;
  for (auto& w : standard_form_words(p)) {
    if (is_standard_form(act_word(w, p).params)) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

std::pair<Word, Params> normalize_to_standard(const Params& p) {
  p.require_valid();
  auto words = candidate_words(p);
  if (!words.empty()) return {words.front(), act_word(words.front(), p).params};
  if (auto w = search_standard_form(p)) return {*w, act_word(*w, p).params};
  throw NormalizationFailed("no word reaches standard form from " + params_str(p));
}

Solution seed_solution(const Params& q) {
  if (!is_standard_form(q)) throw NotStandardForm(params_str(q) + " is not in standard form");
  using RF = RationalFunction;
  const RF t = RF::t();
  const Rational half(1, 2);
  const Rational& a4 = q.a[4];
  switch (q.system) {
    case System::B4:
      return {Chart::Affine, {RF(), RF(half), t / RF(Rational(2) * a4), RF()}};
    case System::D4:
      return {Chart::Affine, {RF(), RF(half), RF(Rational(2) * a4) / t, t / RF(Rational(2))}};
    case System::D5: {
      // inverted x-part; with a3 + a4 = 0 the t^-1 terms vanish
      RF c = RF(Rational(2) * a4 * (q.a[3] + a4)) / t;
      return {Chart::R1, {RF(), RF(half) + c, t / RF(Rational(2) * a4), -c}};
    }
  }
  return {};
}

ClassificationResult construct_rational_solution(const Params& p) {
  ClassificationResult r = classify(p);
  if (r.verdict == Verdict::NotExists) return r;
  std::vector<Word> words = candidate_words(p);
  if (words.empty()) {
    if (auto w = search_standard_form(p)) words.push_back(*w);
  }
  std::string last_error = "no word reaches standard form";
  for (const auto& w : words) {
    Params q = act_word(w, p).params;
    try {
      Solution seed = seed_solution(q);
      WordImage back = act_word(invert_word(p.system, w), q, seed);
      if (!(back.params == p)) {
        last_error = "pullback of " + w.str() + " does not return to the input";
        continue;
      }
      Solution sol = to_affine_if_finite(p, *back.solution);
      if (!residual_vanishes(p, sol)) {
        last_error = "pullback of the seed along " + w.str() + " fails the residual check";
        continue;
      }
      r.word = w;
      r.standard = q;
      r.solution = std::move(sol);
      return r;
    } catch (const UndefinedAction& e) {
      last_error = e.what();
    }
  }
  throw NormalizationFailed(params_str(p) + ": " + last_error);
}

}  // namespace sasano
