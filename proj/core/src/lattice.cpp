#include "sasano/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "sasano/errors.hpp"

namespace sasano {

ECoords e_coordinates(const Params& p) {
  const auto& a = p.a;
  const Rational half(1, 2);
  switch (p.system) {
    case System::B4: {
      Rational e4 = a[4];
      Rational e3 = a[3] + e4;
      Rational e2 = a[2] + e3;
      return {a[1] + e2, e2, e3, e4};
    }
    case System::D4:
      return {(Rational(1) - a[0] + a[1]) * half, (Rational(1) - a[0] - a[1]) * half,
              (a[3] + a[4]) * half, (a[4] - a[3]) * half};
    case System::D5: {
      Rational e4 = a[4];
      Rational e3 = a[3] + e4;
      Rational e2 = a[2] + e3;
      return {half - a[0], e2, e3, e4};
    }
  }
  return {};
}

Params from_e_coordinates(System s, const ECoords& e) {
  const Rational one(1);
  switch (s) {
    case System::B4:
      return {s, {one - e[0] - e[1], e[0] - e[1], e[1] - e[2], e[2] - e[3], e[3]}};
    case System::D4:
      return {s, {one - e[0] - e[1], e[0] - e[1], e[1] - e[2], e[2] - e[3], e[2] + e[3]}};
    case System::D5:
      return {s, {Rational(1, 2) - e[0], e[0] - e[1], e[1] - e[2], e[2] - e[3], e[3]}};
  }
  return {};
}

namespace {

const char* swap_gen(int i) {
  static const char* names[] = {"s1", "s2", "s3"};
  return names[i];
}

// +1 on the first coordinate for D5: negate it by conjugating s4, then reflect with s0.
Word d5_raise_first() { return Word::parse("s1 s2 s3 s4 s3 s2 s1 s0"); }

Word conjugate_to(System s, int i, const Word& w) {
  // move coordinate i to slot 0, apply w, move back
  Word pre;
  for (int k = i - 1; k >= 0; --k) pre += Word({swap_gen(k)});
  return pre + w + invert_word(s, pre);
}

}  // namespace

Word move_word(System s, const LatticeMove& m) {
  if (m.kind == LatticeMove::Kind::Swap) return Word({swap_gen(m.i)});
  const bool up = m.amount > 0;
  switch (s) {
    case System::B4: {
      static const char* raise[] = {"inv(T1)", "T2", "T3", "T4"};
      static const char* lower[] = {"T1", "inv(T2)", "inv(T3)", "inv(T4)"};
      return Word::parse(up ? raise[m.i] : lower[m.i]);
    }
    case System::D4: {
      static const char* raise[] = {"T2 inv(T1) T3", "T4 inv(T2) inv(T1)", "T4", "inv(T3)"};
      static const char* lower[] = {"inv(T3) T1 inv(T2)", "T1 T2 inv(T4)", "inv(T4)", "T3"};
      return Word::parse(up ? raise[m.i] : lower[m.i]);
    }
    case System::D5: {
      Word w = d5_raise_first();
      if (!up) w = invert_word(s, w);
      return conjugate_to(s, m.i, w);
    }
  }
  return {};
}

ECoords apply_move(const ECoords& e, const LatticeMove& m) {
  ECoords out = e;
  if (m.kind == LatticeMove::Kind::Swap) {
    std::swap(out[static_cast<std::size_t>(m.i)], out[static_cast<std::size_t>(m.i + 1)]);
  } else {
    out[static_cast<std::size_t>(m.i)] += Rational(m.amount);
  }
  return out;
}

namespace {

bool half_odd(const Rational& r) { return (Rational(2) * r).is_odd_integer(); }

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw NormalizationFailed("translation too large");
  return z.get_si();
}

void translate(std::vector<LatticeMove>& moves, int coord, long k) {
  for (long n = 0; n < std::labs(k); ++n) {
    moves.push_back({LatticeMove::Kind::Translate, coord, k > 0 ? 1 : -1});
  }
}

// Adjacent swaps carrying the entry at slot `from` to slot `to`.
void carry(std::vector<LatticeMove>& moves, std::array<int, 4>& slot_of, int from, int to) {
  int cur = from;
  while (cur != to) {
    int k = cur > to ? cur - 1 : cur;
    moves.push_back({LatticeMove::Kind::Swap, k, 0});
    for (auto& s : slot_of) {
      if (s == k) s = k + 1;
      else if (s == k + 1) s = k;
    }
    cur = cur > to ? cur - 1 : cur + 1;
  }
}

}  // namespace

std::vector<Word> standard_form_words(const Params& p) {
  const ECoords e0 = e_coordinates(p);
  const System s = p.system;
  std::vector<std::pair<std::size_t, Word>> found;
  for (int i = 0; i < 4; ++i) {
    if (!half_odd(e0[static_cast<std::size_t>(i)])) continue;
    for (int j = 0; j < 4; ++j) {
      if (j == i || !e0[static_cast<std::size_t>(j)].is_integer()) continue;
      std::vector<LatticeMove> moves;
      std::array<int, 4> slot_of{0, 1, 2, 3};  // slot of original coordinate
      carry(moves, slot_of, slot_of[static_cast<std::size_t>(i)], 0);
      carry(moves, slot_of, slot_of[static_cast<std::size_t>(j)], 2);
      ECoords e = e0;
      for (const auto& m : moves) e = apply_move(e, m);
      translate(moves, 0, -to_long((e[0] - Rational(1, 2)).floor()));
      translate(moves, 2, -to_long(e[2].floor()));
      e = e0;
      for (const auto& m : moves) e = apply_move(e, m);
      if (s == System::D5 && e[1] == Rational(1, 2)) translate(moves, 1, 1);
      if (e[3].is_zero()) translate(moves, 3, 1);
      Word w;
      for (const auto& m : moves) w += move_word(s, m);
      found.emplace_back(w.size(), std::move(w));
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Word> out;
  for (auto& [n, w] : found) {
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace sasano
