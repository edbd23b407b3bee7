#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>

#include "sasano/backlund.hpp"
#include "sasano/systems.hpp"

namespace sasano {

enum class Verdict { Exists, NotExists };

struct ClassificationResult {
  Verdict verdict = Verdict::NotExists;
  std::optional<int> condition;  // 1..6, lowest match
  std::optional<Word> word;      // takes the input parameters to standard form
  std::optional<Params> standard;
  std::optional<Solution> solution;
};

// The six existence conditions for the system, in order.
std::array<bool, 6> existence_conditions(const Params& p);
ClassificationResult classify(const Params& p);

bool is_standard_form(const Params& p);

// Throws NormalizationFailed when no word is found.
std::pair<Word, Params> normalize_to_standard(const Params& p);

// Breadth-first search over generator and shift tokens.
std::optional<Word> search_standard_form(const Params& p, std::size_t max_depth = 16,
                                         std::size_t max_states = 200000);

// Throws NotStandardForm.
Solution seed_solution(const Params& q);

// Residual of the returned solution is checked before returning.
ClassificationResult construct_rational_solution(const Params& p);

}  // namespace sasano
