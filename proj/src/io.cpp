#include "qshuffle/io.hpp"

#include "qshuffle/errors.hpp"

#include <limits>

namespace qshuffle {

using nlohmann::json;

json to_json(const LaurentPoly &p) {
  json out = json::object();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Integer &c = it->coeff;
    if (c.fits_slong_p())
      out[std::to_string(it->exp)] = static_cast<std::int64_t>(c.get_si());
    else
      out[std::to_string(it->exp)] = c.get_str();
  }
  return out;
}

LaurentPoly laurent_from_json(const json &j) {
  if (!j.is_object())
    throw parse_error("coefficient must be a JSON object");
  std::vector<LaurentPoly::Term> terms;
  for (const auto &[key, value] : j.items()) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(key, &used);
      if (used != key.size())
        throw parse_error("bad exponent '" + key + "'");
    } catch (const std::logic_error &) {
      throw parse_error("bad exponent '" + key + "'");
    }
    Integer c;
    if (value.is_number_integer())
      c = Integer(std::to_string(value.get<std::int64_t>()));
    else if (value.is_string())
      c = Integer(value.get<std::string>());
    else
      throw parse_error("bad coefficient for exponent " + key);
    terms.push_back({e, c});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

json to_json(const Word &w, const CartanDatum &datum) {
  json out = json::array();
  for (std::size_t k = 0; k < w.size(); ++k)
    out.push_back(datum.label(w[k]));
  return out;
}

Word word_from_json(const json &j, const CartanDatum &datum) {
  if (!j.is_array())
    throw parse_error("word must be a JSON array");
  Word w;
  for (const auto &x : j) {
    if (!x.is_number_integer())
      throw parse_error("letters must be integers");
    w.push_back(datum.letter_of_label(x.get<int>()));
  }
  return w;
}

json weight_to_json(const Weight &w, const CartanDatum &datum) {
  json out = json::array();
  for (int n = 1; n <= datum.rank(); ++n)
    out.push_back(w[datum.letter_of_label(n)]);
  return out;
}

json to_json(const ShuffleElt &f) {
  json terms = json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back({{"word", to_json(it->first, f.cartan())}, {"coef", to_json(it->second)}});
  return {{"weight", weight_to_json(f.weight(), f.cartan())}, {"terms", std::move(terms)}};
}

ShuffleElt elt_from_json(const json &j, const DatumPtr &datum) {
  if (!j.is_object() || !j.contains("weight") || !j.contains("terms"))
    throw parse_error("element must have 'weight' and 'terms'");
  const json &jw = j.at("weight");
  if (!jw.is_array() || static_cast<int>(jw.size()) != datum->rank())
    throw parse_error("weight has the wrong length");
  Weight w = Weight::zero(datum->rank());
  for (int n = 1; n <= datum->rank(); ++n)
    w[datum->letter_of_label(n)] = jw[static_cast<std::size_t>(n - 1)].get<int>();
  ShuffleElt f(datum, w);
  for (const auto &t : j.at("terms"))
    f.add_term(word_from_json(t.at("word"), *datum), laurent_from_json(t.at("coef")));
  return f;
}

} // namespace qshuffle
