#include "qshuffle/cli.hpp"

#include "qshuffle/basis.hpp"
#include "qshuffle/characters.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <sstream>

namespace qshuffle {

using nlohmann::json;

namespace {

struct RunConfig {
  std::string datum_name;
  std::string order;
  std::string format = "text";
  std::string weight;
  std::string word;
  int max_height = 0;
  std::string check = "positivity";
  std::string skew;
  std::string shifted;
  std::optional<int> shift;
  bool timing = false;
};

DatumPtr load_datum(const RunConfig &cfg) {
  CartanDatum d = CartanDatum::parse(cfg.datum_name);
  if (!cfg.order.empty()) {
    std::vector<int> order;
    std::stringstream ss(cfg.order);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        order.push_back(std::stoi(item, &used));
        if (used != item.size())
          throw parse_error("malformed order '" + cfg.order + "'");
      } catch (const std::logic_error &) {
        throw parse_error("malformed order '" + cfg.order + "'");
      }
    }
    d = d.with_order(order);
  }
  return make_datum(std::move(d));
}

json order_json(const CartanDatum &d) {
  json out = json::array();
  for (int k = 1; k <= d.rank(); ++k)
    out.push_back(d.label(k));
  return out;
}

json header(const CartanDatum &d, const std::string &command) {
  return {{"command", command}, {"datum", d.name()}, {"order", order_json(d)}};
}

std::string poly_text(const LaurentPoly &p) { return p.to_string(); }

std::string indent(const std::string &block) {
  std::string out;
  std::istringstream in(block);
  std::string line;
  while (std::getline(in, line))
    out += "  " + line + "\n";
  return out;
}

// Good words selected by --word or --weight, increasing.
std::vector<Word> selected_words(DualBasis &basis, const RunConfig &cfg) {
  const CartanDatum &d = basis.table().cartan();
  if (!cfg.word.empty()) {
    Word g = parse_word(cfg.word, d);
    factor_good_word(basis.table(), g);
    return {g};
  }
  if (cfg.weight.empty())
    throw usage_error("either --weight or --word is required");
  std::vector<Word> out;
  for (const auto &g : good_words_of_weight(basis.table(), d.parse_weight(cfg.weight)))
    out.push_back(g.word);
  return out;
}

int cmd_roots(const RunConfig &cfg, std::ostream &out) {
  DatumPtr d = load_datum(cfg);
  GoodLyndonTable table(d);
  const auto &order = table.convex_order();
  if (cfg.format == "json") {
    json j = header(*d, "roots");
    json roots = json::array();
    for (std::size_t k = 0; k < order.size(); ++k)
      roots.push_back({{"index", k + 1},
                       {"root", weight_to_json(order[k], *d)},
                       {"good_lyndon_word", to_json(table.lyndon_of(order[k]), *d)}});
    j["roots"] = std::move(roots);
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  for (std::size_t k = 0; k < order.size(); ++k)
    out << (k + 1) << "  " << d->render_weight(order[k]) << "  "
        << render_word(table.lyndon_of(order[k]), *d) << "\n";
  return exit_ok;
}

int cmd_good_words(const RunConfig &cfg, std::ostream &out) {
  DatumPtr d = load_datum(cfg);
  GoodLyndonTable table(d);
  if (cfg.weight.empty())
    throw usage_error("--weight is required");
  const auto goods = good_words_of_weight(table, d->parse_weight(cfg.weight));
  if (cfg.format == "json") {
    json j = header(*d, "good-words");
    j["weight"] = weight_to_json(d->parse_weight(cfg.weight), *d);
    json list = json::array();
    for (const auto &g : goods) {
      json factors = json::array();
      for (const auto &[l, a] : g.factors)
        factors.push_back({{"lyndon", to_json(l, *d)}, {"multiplicity", a}});
      list.push_back({{"word", to_json(g.word, *d)}, {"factors", std::move(factors)}});
    }
    j["good_words"] = std::move(list);
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  for (const auto &g : goods) {
    out << render_word(g.word, *d) << "  =";
    for (const auto &[l, a] : g.factors) {
      out << " " << render_word(l, *d);
      if (a > 1)
        out << "^" << a;
    }
    out << "\n";
  }
  return exit_ok;
}

int cmd_dual_pbw(const RunConfig &cfg, std::ostream &out) {
  DatumPtr d = load_datum(cfg);
  DualBasis basis(d);
  const auto words = selected_words(basis, cfg);
  json list = json::array();
  for (std::size_t k = 0; k < words.size(); ++k) {
    const DualPBWVector e = basis.dual_pbw(words[k]);
    if (cfg.format == "json") {
      list.push_back({{"good_word", to_json(e.g.word, *d)},
                      {"kappa", to_json(e.kappa)},
                      {"element", to_json(e.elt)}});
      continue;
    }
    if (k)
      out << "\n";
    out << "E*_" << render_word(e.g.word, *d) << "  (kappa = " << poly_text(e.kappa) << ")\n"
        << indent(e.elt.to_text());
  }
  if (cfg.format == "json") {
    json j = header(*d, "dual-pbw");
    j["elements"] = std::move(list);
    out << j.dump(2) << "\n";
  }
  return exit_ok;
}

int cmd_dual_canonical(const RunConfig &cfg, std::ostream &out) {
  DatumPtr d = load_datum(cfg);
  DualBasis basis(d);
  const auto words = selected_words(basis, cfg);
  json list = json::array();
  for (std::size_t k = 0; k < words.size(); ++k) {
    const DualCanonicalVector b = basis.dual_canonical(words[k]);
    if (cfg.format == "json") {
      list.push_back({{"good_word", to_json(b.g.word, *d)},
                      {"kappa", to_json(b.kappa)},
                      {"element", to_json(b.elt)}});
      continue;
    }
    if (k)
      out << "\n";
    out << "b*_" << render_word(b.g.word, *d) << "  (kappa = " << poly_text(b.kappa) << ")\n"
        << indent(b.elt.to_text());
  }
  if (cfg.format == "json") {
    json j = header(*d, "dual-canonical");
    j["elements"] = std::move(list);
    out << j.dump(2) << "\n";
  }
  return exit_ok;
}

int cmd_expand(const RunConfig &cfg, std::ostream &out) {
  DatumPtr d = load_datum(cfg);
  DualBasis basis(d);
  const auto words = selected_words(basis, cfg);
  json list = json::array();
  for (std::size_t k = 0; k < words.size(); ++k) {
    const DualCanonicalVector b = basis.dual_canonical(words[k]);
    const auto coeffs = basis.expand_in_dual_pbw(b.elt);
    if (cfg.format == "json") {
      json terms = json::array();
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        terms.push_back({{"good_word", to_json(it->first, *d)}, {"coef", to_json(it->second)}});
      list.push_back({{"good_word", to_json(b.g.word, *d)}, {"expansion", std::move(terms)}});
      continue;
    }
    if (k)
      out << "\n";
    out << "b*_" << render_word(b.g.word, *d) << " =\n";
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      std::string c = poly_text(it->second);
      if (it->second.term_count() > 1)
        c = "(" + c + ")";
      out << "  " << c << " \xC2\xB7 E*_" << render_word(it->first, *d) << "\n";
    }
  }
  if (cfg.format == "json") {
    json j = header(*d, "expand");
    j["elements"] = std::move(list);
    out << j.dump(2) << "\n";
  }
  return exit_ok;
}

struct Finding {
  std::string text;
  json data;
};

std::vector<Finding> check_positivity(DualBasis &basis, const Weight &nu, std::size_t &count) {
  const CartanDatum &d = basis.table().cartan();
  count = basis.dual_canonical_weight(nu).size();
  std::vector<Finding> out;
  for (const auto &v : basis.positivity_report(nu))
    out.push_back({"b*_" + render_word(v.g, d) + ": " + render_word(v.w, d) + " has coefficient " +
                       v.coef.to_string(),
                   {{"good_word", to_json(v.g, d)}, {"word", to_json(v.w, d)}, {"coef", to_json(v.coef)}}});
  return out;
}

std::vector<Finding> check_reality(DualBasis &basis, const Weight &nu, std::size_t &count) {
  const CartanDatum &d = basis.table().cartan();
  const auto vectors = basis.dual_canonical_weight(nu);
  count = vectors.size();
  std::vector<Finding> out;
  for (const auto &b : vectors) {
    const RealityResult r = basis.is_real(b);
    if (!r.real)
      out.push_back({"b*_" + render_word(b.g.word, d) + " is imaginary",
                     {{"good_word", to_json(b.g.word, d)}, {"imaginary", true}}});
  }
  return out;
}

std::vector<Finding> check_invariants(DualBasis &basis, const Weight &nu, std::size_t &count) {
  const CartanDatum &d = basis.table().cartan();
  const auto vectors = basis.dual_canonical_weight(nu);
  count = vectors.size();
  std::vector<Finding> out;
  auto report = [&](const Word &g, const std::string &what) {
    out.push_back({"b*_" + render_word(g, d) + ": " + what,
                   {{"good_word", to_json(g, d)}, {"failure", what}}});
  };
  const std::size_t partitions = kostant_partitions(nu, d).size();
  if (partitions != vectors.size())
    out.push_back({"good word count " + std::to_string(vectors.size()) +
                       " differs from Kostant partition count " + std::to_string(partitions),
                   {{"failure", "count"}}});
  for (const auto &b : vectors) {
    const Word &g = b.g.word;
    if (b.elt.max_word() != g || b.elt.leading_coefficient() != b.kappa)
      report(g, "leading term is not kappa_g * g");
    if (!b.kappa.is_bar_symmetric())
      report(g, "kappa is not bar symmetric");
    if (auto w = largest_asymmetric_word(b.elt))
      report(g, "coefficient of " + render_word(*w, d) + " is not bar symmetric");
    if (auto witness = serre_witness(b.elt))
      report(g, "not in U: " + witness->to_string(d));
    for (const auto &[h, c] : basis.expand_in_dual_pbw(b.elt)) {
      if (h == g ? c != LaurentPoly(1) : (c.is_zero() || c.min_exp() < 1))
        report(g, "dual PBW coefficient at " + render_word(h, d) + " is " + c.to_string());
    }
  }
  return out;
}

int cmd_scan(const RunConfig &cfg, std::ostream &out) {
  DatumPtr d = load_datum(cfg);
  if (cfg.max_height < 1)
    throw usage_error("--max-height must be at least 1");
  DualBasis basis(d);
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  json weights = json::array();
  std::size_t total_vectors = 0, total_violations = 0;
  std::ostringstream text;
  for (const Weight &nu : weights_up_to_height(d->rank(), cfg.max_height)) {
    const auto t0 = Clock::now();
    std::size_t count = 0;
    std::vector<Finding> findings;
    if (cfg.check == "positivity")
      findings = check_positivity(basis, nu, count);
    else if (cfg.check == "reality")
      findings = check_reality(basis, nu, count);
    else
      findings = check_invariants(basis, nu, count);
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    total_vectors += count;
    total_violations += findings.size();
    json entry = {{"weight", weight_to_json(nu, *d)},
                  {"vectors", count},
                  {"status", findings.empty() ? "ok" : "violation"}};
    json viol = json::array();
    for (const auto &f : findings)
      viol.push_back(f.data);
    entry["violations"] = std::move(viol);
    if (cfg.timing)
      entry["seconds"] = seconds;
    weights.push_back(std::move(entry));
    text << d->render_weight(nu) << "  vectors=" << count << "  "
         << (findings.empty() ? "ok" : "violations=" + std::to_string(findings.size()));
    if (cfg.timing)
      text << "  " << seconds << "s";
    text << "\n";
    for (const auto &f : findings)
      text << "  " << f.text << "\n";
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (cfg.format == "json") {
    json j = header(*d, "scan");
    j["check"] = cfg.check;
    j["max_height"] = cfg.max_height;
    j["weights"] = std::move(weights);
    j["total_vectors"] = total_vectors;
    j["total_violations"] = total_violations;
    if (cfg.timing)
      j["seconds"] = seconds;
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << "scan " << d->name() << " check=" << cfg.check << " max-height=" << cfg.max_height << "\n"
      << text.str() << "total: weights=" << weights.size() << " vectors=" << total_vectors
      << " violations=" << total_violations;
  if (cfg.timing)
    out << " seconds=" << seconds;
  out << "\n";
  return exit_ok;
}

int cmd_character(const RunConfig &cfg, std::ostream &out) {
  DatumPtr d = load_datum(cfg);
  if (cfg.skew.empty() == cfg.shifted.empty())
    throw usage_error("exactly one of --skew and --shifted is required");
  std::string shape_text;
  auto compute = [&]() -> TableauCharacter {
    if (!cfg.skew.empty()) {
      SkewShape shape = parse_skew_shape(cfg.skew);
      if (cfg.shift)
        shape.shift = *cfg.shift;
      else if (cfg.skew.find('+') == std::string::npos)
        throw usage_error("skew shapes need --shift");
      shape_text = to_string(shape);
      return skew_tableau_character(d, shape);
    }
    if (cfg.shift)
      throw usage_error("--shift only applies to skew shapes");
    const ShiftedShape shape = parse_shifted_shape(cfg.shifted);
    shape_text = to_string(shape);
    return shifted_tableau_character(d, shape);
  };
  const TableauCharacter ch = compute();
  DualBasis basis(d);
  const bool good = basis.table().is_good(ch.g);
  std::optional<DualCanonicalVector> b;
  if (good)
    b = basis.dual_canonical(ch.g);
  const bool match = b && b->elt == ch.sum;
  if (cfg.format == "json") {
    json j = header(*d, "character");
    j["shape"] = shape_text;
    j["kind"] = cfg.skew.empty() ? "shifted" : "skew";
    j["good_word"] = to_json(ch.g, *d);
    j["tableaux"] = ch.tableaux;
    j["character"] = to_json(ch.sum);
    j["dual_canonical"] = b ? to_json(b->elt) : json(nullptr);
    j["match"] = match;
    out << j.dump(2) << "\n";
  } else {
    out << "shape " << shape_text << "\n"
        << "g = " << render_word(ch.g, *d) << "\n"
        << "tableaux: " << ch.tableaux << "\n"
        << "character: " << ch.sum.to_inline() << "\n";
    if (!good)
      out << "g is not a good word\n";
    else if (!match)
      out << "b*: " << b->elt.to_inline() << "\n";
    out << (match ? "MATCH" : "MISMATCH") << "\n";
  }
  return match ? exit_ok : exit_theory;
}

int cmd_is_real(const RunConfig &cfg, std::ostream &out) {
  DatumPtr d = load_datum(cfg);
  DualBasis basis(d);
  const auto words = selected_words(basis, cfg);
  json list = json::array();
  for (const Word &g : words) {
    const DualCanonicalVector b = basis.dual_canonical(g);
    const RealityResult r = basis.is_real(b);
    if (cfg.format == "json") {
      json entry = {{"good_word", to_json(g, *d)}, {"real", r.real}};
      if (r.real) {
        entry["partner"] = to_json(r.partner, *d);
        entry["shift"] = r.shift;
      }
      list.push_back(std::move(entry));
      continue;
    }
    out << "b*_" << render_word(g, *d) << "  ";
    if (r.real)
      out << "real  (b* * b* = q^" << r.shift << " b*_" << render_word(r.partner, *d) << ")\n";
    else
      out << "imaginary\n";
  }
  if (cfg.format == "json") {
    json j = header(*d, "is-real");
    j["elements"] = std::move(list);
    out << j.dump(2) << "\n";
  }
  return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"qshuffle: bases of U_q(n) in the shuffle algebra"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App *sub) {
    sub->add_option("datum", cfg.datum_name, "root system, e.g. A3, G2")->required();
    sub->add_option("--order", cfg.order, "order of the simple roots, smallest first, e.g. 2,1");
    sub->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto weight_or_word = [&](CLI::App *sub) {
    sub->add_option("--weight", cfg.weight, "weight c1,...,cr");
    sub->add_option("--word", cfg.word, "a single good word, e.g. w[1,2,1]");
  };

  auto *roots = app.add_subcommand("roots", "positive roots in convex order with l(beta)");
  common(roots);
  auto *good = app.add_subcommand("good-words", "good words of a weight");
  common(good);
  good->add_option("--weight", cfg.weight, "weight c1,...,cr")->required();
  auto *pbw = app.add_subcommand("dual-pbw", "dual PBW vectors");
  common(pbw);
  weight_or_word(pbw);
  auto *canon = app.add_subcommand("dual-canonical", "dual canonical basis vectors");
  common(canon);
  weight_or_word(canon);
  auto *expand = app.add_subcommand("expand", "dual canonical vectors on the dual PBW basis");
  common(expand);
  weight_or_word(expand);
  auto *scan = app.add_subcommand("scan", "checks over all weights up to a height");
  common(scan);
  scan->add_option("--max-height", cfg.max_height, "height bound")->required();
  scan->add_option("--check", cfg.check, "positivity, reality or invariants")
      ->check(CLI::IsMember({"positivity", "reality", "invariants"}));
  scan->add_flag("--timing", cfg.timing, "report wall clock times");
  auto *character = app.add_subcommand("character", "tableau characters against b*");
  common(character);
  character->add_option("--skew", cfg.skew, "skew shape lambda/mu, e.g. 2,1/0");
  character->add_option("--shifted", cfg.shifted, "shifted shape lambda/mu, e.g. 3,1");
  character->add_option("--shift", cfg.shift, "shift s for skew shapes");
  auto *real = app.add_subcommand("is-real", "whether b* * b* is a power of q times some b*");
  common(real);
  weight_or_word(real);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (roots->parsed())
      return cmd_roots(cfg, out);
    if (good->parsed())
      return cmd_good_words(cfg, out);
    if (pbw->parsed())
      return cmd_dual_pbw(cfg, out);
    if (canon->parsed())
      return cmd_dual_canonical(cfg, out);
    if (expand->parsed())
      return cmd_expand(cfg, out);
    if (scan->parsed())
      return cmd_scan(cfg, out);
    if (character->parsed())
      return cmd_character(cfg, out);
    if (real->parsed())
      return cmd_is_real(cfg, out);
  } catch (const usage_error &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const theory_violation &e) {
    err << "internal error: " << e.what() << "\n";
    return exit_theory;
  }
  return exit_usage;
}

} // namespace qshuffle
