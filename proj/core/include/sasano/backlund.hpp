#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sasano/systems.hpp"

namespace sasano {

enum class Gen { S0, S1, S2, S3, S4, Pi1, Pi2, Pi3, Pi4, Psi };

std::string to_string(Gen g);
// Accepts s0..s4, pi1..pi4, psi and the Greek spellings.
std::optional<Gen> parse_gen(const std::string& text);
bool gen_valid(System s, Gen g);
const std::vector<Gen>& generators(System s);

// A word is a list of tokens: generator names, T1..T4 and inv(...). Tokens are
// applied leftmost first.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::string> tokens);
  static Word parse(const std::string& text);

  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  std::string str() const;

  Word& operator+=(const Word& o);
  friend Word operator+(Word a, const Word& b) { return a += b; }
  friend bool operator==(const Word& a, const Word& b) { return a.tokens_ == b.tokens_; }

 private:
  std::vector<std::string> tokens_;
};

// Throws ParseError for tokens not valid in the system.
std::vector<Gen> expand(System s, const Word& w);

Params act_params(Gen g, const Params& p);
// Throws UndefinedAction where no action is available, ChartMismatch for a foreign chart.
Solution act_solution(Gen g, const Params& p, const Solution& sol);

struct WordImage {
  Params params;
  std::optional<Solution> solution;
};
WordImage act_word(const Word& w, const Params& p, const std::optional<Solution>& sol = std::nullopt);

// Shift operator T_i for B4 or D4, written out in generators.
Word shift_word(System s, int i);
// Translation added to the parameters by T_i.
std::array<Rational, 5> shift_vector(System s, int i);

// Order of g acting on parameters, found by iteration (at most 12).
int generator_order(System s, Gen g);
Word invert_word(System s, const Word& w);

// Birational maps from D4 into B4 or D5. Throws UnsupportedSystem for other pairs.
Params equivalence_params(System from, System to, const Params& p);
std::pair<Params, Solution> equivalence_map(System from, System to, const Params& p,
                                            const Solution& sol);

// Re-express a possibly infinite solution in the affine chart when every inverted
// component is not identically zero; otherwise returns it unchanged.
Solution to_affine_if_finite(const Params& p, const Solution& sol);

}  // namespace sasano
