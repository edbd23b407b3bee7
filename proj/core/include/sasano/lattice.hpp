#pragma once

#include <array>
#include <vector>

#include "sasano/backlund.hpp"
#include "sasano/systems.hpp"

namespace sasano {

// Orthogonal coordinates on parameter space in which every group generator acts as
// a signed permutation, a reflection e -> 1 - e, or an integer translation.
using ECoords = std::array<Rational, 4>;

ECoords e_coordinates(const Params& p);
Params from_e_coordinates(System s, const ECoords& e);

// Elementary moves on e-coordinates together with a word realizing each.
struct LatticeMove {
  enum class Kind { Swap, Translate };
  Kind kind;
  int i;       // Swap(i, i+1), or Translate coordinate i (0-based)
  int amount;  // +1 or -1 for Translate
};

Word move_word(System s, const LatticeMove& m);
ECoords apply_move(const ECoords& e, const LatticeMove& m);

// Words taking p into standard form I, cheapest first. Empty when no pairing
// condition holds.
std::vector<Word> standard_form_words(const Params& p);

}  // namespace sasano
