#pragma once

#include <nlohmann/json.hpp>

#include "sasano/backlund.hpp"
#include "sasano/classify.hpp"
#include "sasano/laurent.hpp"
#include "sasano/polynomial.hpp"
#include "sasano/rational.hpp"
#include "sasano/rational_function.hpp"
#include "sasano/systems.hpp"
#include "sasano/verify.hpp"

namespace sasano {

using json = nlohmann::ordered_json;

// Decoders throw ParseError on malformed input.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const json& j);

json to_json(const Params& p);
Params params_from_json(const json& j);

json to_json(const Solution& s);
Solution solution_from_json(const json& j);

json to_json(const Word& w);
Word word_from_json(const json& j);

json to_json(const ClassificationResult& r);
json to_json(const InvariantReport& r);
json to_json(const LaurentSeries& s);

}  // namespace sasano
