#pragma once

#include "qshuffle/cartan.hpp"
#include "qshuffle/laurent.hpp"
#include "qshuffle/shuffle.hpp"

#include <json.hpp>

namespace qshuffle {

/// {"3":1,"1":2,...}; coefficients outside int64 are written as strings.
nlohmann::json to_json(const LaurentPoly &p);
LaurentPoly laurent_from_json(const nlohmann::json &j);

/// Word as a list of original node numbers.
nlohmann::json to_json(const Word &w, const CartanDatum &datum);
Word word_from_json(const nlohmann::json &j, const CartanDatum &datum);

nlohmann::json weight_to_json(const Weight &w, const CartanDatum &datum);

/// {"weight":[...],"terms":[{"word":[...],"coef":{...}}]}, largest word first.
nlohmann::json to_json(const ShuffleElt &f);
ShuffleElt elt_from_json(const nlohmann::json &j, const DatumPtr &datum);

} // namespace qshuffle
