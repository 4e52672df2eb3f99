#include "qshuffle/basis.hpp"
#include "qshuffle/characters.hpp"
#include "qshuffle/cli.hpp"
#include "qshuffle/errors.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace qshuffle;

namespace {

struct Datum {
  DatumPtr ptr;
};

py::int_ to_py(const Integer &x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

Integer from_py(const py::handle &h) { return Integer(py::str(h).cast<std::string>()); }

py::dict poly_to_py(const LaurentPoly &p) {
  py::dict d;
  for (const auto &t : p.terms())
    d[py::int_(t.exp)] = to_py(t.coeff);
  return d;
}

LaurentPoly poly_from_py(const py::handle &h) {
  if (py::isinstance<py::str>(h))
    return LaurentPoly::parse(h.cast<std::string>());
  if (py::isinstance<py::int_>(h))
    return LaurentPoly(from_py(h));
  if (!py::isinstance<py::dict>(h))
    throw usage_error("a coefficient is an int, a string like 'q + q^-1', or a dict {exponent: coefficient}");
  std::vector<LaurentPoly::Term> terms;
  for (const auto &[e, c] : h.cast<py::dict>())
    terms.push_back({e.cast<int>(), from_py(c)});
  return LaurentPoly::from_terms(std::move(terms));
}

py::tuple word_to_py(const Word &w, const CartanDatum &d) {
  py::tuple t(w.size());
  for (std::size_t k = 0; k < w.size(); ++k)
    t[k] = d.label(w[k]);
  return t;
}

Word word_from_py(const std::vector<int> &labels, const CartanDatum &d) {
  Word w;
  for (int n : labels)
    w.push_back(d.letter_of_label(n));
  return w;
}

py::tuple weight_to_py(const Weight &nu, const CartanDatum &d) {
  py::tuple t(static_cast<std::size_t>(d.rank()));
  for (int n = 1; n <= d.rank(); ++n)
    t[static_cast<std::size_t>(n - 1)] = nu[d.letter_of_label(n)];
  return t;
}

Weight weight_from_py(const std::vector<int> &c, const CartanDatum &d) {
  if (static_cast<int>(c.size()) != d.rank())
    throw usage_error("weight needs " + std::to_string(d.rank()) + " coefficients");
  Weight nu = Weight::zero(d.rank());
  for (int n = 1; n <= d.rank(); ++n)
    nu[d.letter_of_label(n)] = c[static_cast<std::size_t>(n - 1)];
  if (!nu.is_nonnegative())
    throw usage_error("weight has a negative coefficient");
  return nu;
}

py::dict terms_to_py(const ShuffleElt &f) {
  py::dict d;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    d[word_to_py(it->first, f.cartan())] = poly_to_py(it->second);
  return d;
}

ShuffleElt elt_from_py(const Datum &d, const py::dict &terms, const std::optional<std::vector<int>> &weight) {
  std::optional<Weight> nu;
  if (weight)
    nu = weight_from_py(*weight, *d.ptr);
  std::vector<std::pair<Word, LaurentPoly>> parsed;
  for (const auto &[w, c] : terms) {
    parsed.emplace_back(word_from_py(w.cast<std::vector<int>>(), *d.ptr), poly_from_py(c));
    if (!nu)
      nu = parsed.back().first.weight(d.ptr->rank());
  }
  if (!nu)
    throw usage_error("an empty element needs an explicit weight");
  ShuffleElt f(d.ptr, *nu);
  for (const auto &[w, c] : parsed)
    f.add_term(w, c);
  return f;
}

py::dict vector_to_py(const GoodWord &g, const ShuffleElt &elt, const LaurentPoly &kappa) {
  py::dict d;
  d["good_word"] = word_to_py(g.word, elt.cartan());
  d["element"] = elt;
  d["kappa"] = poly_to_py(kappa);
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact q-shuffle algebra computations: good Lyndon words, dual PBW and dual canonical bases";

  py::register_exception<usage_error>(m, "UsageError", PyExc_ValueError);
  py::register_exception<theory_violation>(m, "TheoryViolation", PyExc_RuntimeError);

  py::class_<Datum>(m, "Datum")
      .def(py::init([](const std::string &name, std::optional<std::vector<int>> order) {
             CartanDatum c = CartanDatum::parse(name);
             if (order)
               c = c.with_order(*order);
             return Datum{make_datum(std::move(c))};
           }),
           py::arg("name"), py::arg("order") = py::none())
      .def_property_readonly("name", [](const Datum &d) { return d.ptr->name(); })
      .def_property_readonly("rank", [](const Datum &d) { return d.ptr->rank(); })
      .def_property_readonly("order", [](const Datum &d) {
        return std::vector<int>(d.ptr->labels().begin(), d.ptr->labels().end());
      })
      .def("cartan_matrix",
           [](const Datum &d) {
             const int r = d.ptr->rank();
             std::vector<std::vector<int>> a(static_cast<std::size_t>(r));
             for (int i = 1; i <= r; ++i)
               for (int j = 1; j <= r; ++j)
                 a[static_cast<std::size_t>(i - 1)].push_back(
                     d.ptr->cartan(d.ptr->letter_of_label(i), d.ptr->letter_of_label(j)));
             return a;
           })
      .def("positive_roots",
           [](const Datum &d) {
             py::list out;
             for (const auto &beta : d.ptr->positive_roots())
               out.append(weight_to_py(beta, *d.ptr));
             return out;
           })
      .def("kostant_count",
           [](const Datum &d, const std::vector<int> &nu) {
             return kostant_partitions(weight_from_py(nu, *d.ptr), *d.ptr).size();
           })
      .def("__repr__", [](const Datum &d) { return "Datum('" + d.ptr->name() + "')"; });

  py::class_<ShuffleElt>(m, "Element")
      .def(py::init(&elt_from_py), py::arg("datum"), py::arg("terms"), py::arg("weight") = py::none())
      .def_static(
          "word", [](const Datum &d, const std::vector<int> &w) { return ShuffleElt::word(d.ptr, word_from_py(w, *d.ptr)); },
          py::arg("datum"), py::arg("word"))
      .def("terms", &terms_to_py)
      .def_property_readonly("weight", [](const ShuffleElt &f) { return weight_to_py(f.weight(), f.cartan()); })
      .def("coefficient",
           [](const ShuffleElt &f, const std::vector<int> &w) {
             return poly_to_py(f.coefficient(word_from_py(w, f.cartan())));
           })
      .def("max_word", [](const ShuffleElt &f) { return word_to_py(f.max_word(), f.cartan()); })
      .def("is_zero", &ShuffleElt::is_zero)
      .def("__len__", &ShuffleElt::size)
      .def("__mul__", [](const ShuffleElt &f, const ShuffleElt &g) { return qshuffle::qshuffle(f, g); })
      .def("__pow__", [](const ShuffleElt &f, int k) { return shuffle_power(f, k); })
      .def("__add__", [](const ShuffleElt &f, const ShuffleElt &g) { return f + g; })
      .def("__sub__", [](const ShuffleElt &f, const ShuffleElt &g) { return f - g; })
      .def("__neg__", [](const ShuffleElt &f) { return -f; })
      .def("scaled", [](const ShuffleElt &f, const py::object &c) { return poly_from_py(c) * f; })
      .def("__eq__", [](const ShuffleElt &f, const ShuffleElt &g) { return f == g; })
      .def("concat", [](const ShuffleElt &f, const ShuffleElt &g) { return concat(f, g); })
      .def("bracket", [](const ShuffleElt &f, const ShuffleElt &g) { return shuffle_bracket(f, g); })
      .def("tau", [](const ShuffleElt &f) { return tau(f); })
      .def("bar", [](const ShuffleElt &f) { return bar_elt(f); })
      .def("sigma", [](const ShuffleElt &f) { return sigma(f); })
      .def("e_prime",
           [](const ShuffleElt &f, int node) { return e_prime(f, f.cartan().letter_of_label(node)); })
      .def("e_prime_dag",
           [](const ShuffleElt &f, int node) { return e_prime_dag(f, f.cartan().letter_of_label(node)); })
      .def("is_in_U", [](const ShuffleElt &f) { return is_in_U(f); })
      .def("serre_witness",
           [](const ShuffleElt &f) -> std::optional<std::string> {
             auto w = serre_witness(f);
             if (!w)
               return std::nullopt;
             return w->to_string(f.cartan());
           })
      .def("at_q1",
           [](const ShuffleElt &f) {
             py::dict d;
             for (const auto &[w, c] : specialize_q1(f))
               d[word_to_py(w, f.cartan())] = to_py(c);
             return d;
           })
      .def("__str__", &ShuffleElt::to_inline)
      .def("__repr__", [](const ShuffleElt &f) { return "Element(" + f.to_inline() + ")"; });

  m.def(
      "shuffle",
      [](const Datum &d, const std::vector<int> &u, const std::vector<int> &v) {
        return qshuffle_words(d.ptr, word_from_py(u, *d.ptr), word_from_py(v, *d.ptr));
      },
      py::arg("datum"), py::arg("u"), py::arg("v"), "q-shuffle product of two words");

  m.def(
      "is_lyndon", [](const std::vector<int> &w) { return is_lyndon(Word(w)); }, py::arg("word"));
  m.def(
      "lyndon_factorization",
      [](const std::vector<int> &w) {
        std::vector<std::vector<int>> out;
        for (const auto &f : lyndon_factorization(Word(w)))
          out.push_back(f.letters());
        return out;
      },
      py::arg("word"));

  py::class_<DualBasis>(m, "Basis")
      .def(py::init([](const Datum &d) { return std::make_unique<DualBasis>(d.ptr); }), py::arg("datum"))
      .def("good_lyndon_words",
           [](DualBasis &b) {
             py::list out;
             for (const auto &beta : b.table().convex_order())
               out.append(py::make_tuple(weight_to_py(beta, b.table().cartan()),
                                         word_to_py(b.table().lyndon_of(beta), b.table().cartan())));
             return out;
           })
      .def("good_words",
           [](DualBasis &b, const std::vector<int> &nu) {
             py::list out;
             const CartanDatum &c = b.table().cartan();
             for (const auto &g : good_words_of_weight(b.table(), weight_from_py(nu, c)))
               out.append(word_to_py(g.word, c));
             return out;
           },
           py::arg("weight"))
      .def("dual_pbw",
           [](DualBasis &b, const std::vector<int> &g) {
             auto v = b.dual_pbw(word_from_py(g, b.table().cartan()));
             return vector_to_py(v.g, v.elt, v.kappa);
           },
           py::arg("word"))
      .def("dual_canonical",
           [](DualBasis &b, const std::vector<int> &g) {
             auto v = b.dual_canonical(word_from_py(g, b.table().cartan()));
             return vector_to_py(v.g, v.elt, v.kappa);
           },
           py::arg("word"))
      .def("dual_canonical_weight",
           [](DualBasis &b, const std::vector<int> &nu) {
             py::list out;
             for (const auto &v : b.dual_canonical_weight(weight_from_py(nu, b.table().cartan())))
               out.append(vector_to_py(v.g, v.elt, v.kappa));
             return out;
           },
           py::arg("weight"))
      .def("expand",
           [](DualBasis &b, const ShuffleElt &f) {
             py::dict out;
             for (const auto &[g, c] : b.expand_in_dual_pbw(f))
               out[word_to_py(g, f.cartan())] = poly_to_py(c);
             return out;
           },
           py::arg("element"), "coefficients on the dual PBW basis")
      .def("positivity_violations",
           [](DualBasis &b, const std::vector<int> &nu) {
             return b.positivity_report(weight_from_py(nu, b.table().cartan())).size();
           },
           py::arg("weight"))
      .def("is_real",
           [](DualBasis &b, const std::vector<int> &g) {
             const CartanDatum &c = b.table().cartan();
             auto r = b.is_real(b.dual_canonical(word_from_py(g, c)));
             py::dict d;
             d["real"] = r.real;
             if (r.real) {
               d["partner"] = word_to_py(r.partner, c);
               d["shift"] = r.shift;
             }
             return d;
           },
           py::arg("word"));

  m.def(
      "skew_character",
      [](const Datum &d, const std::string &shape, std::optional<int> shift) {
        SkewShape s = parse_skew_shape(shape);
        if (shift)
          s.shift = *shift;
        auto ch = skew_tableau_character(d.ptr, s);
        return py::make_tuple(word_to_py(ch.g, *d.ptr), ch.sum, ch.tableaux);
      },
      py::arg("datum"), py::arg("shape"), py::arg("shift") = py::none());
  m.def(
      "shifted_character",
      [](const Datum &d, const std::string &shape) {
        auto ch = shifted_tableau_character(d.ptr, parse_shifted_shape(shape));
        return py::make_tuple(word_to_py(ch.g, *d.ptr), ch.sum, ch.tableaux);
      },
      py::arg("datum"), py::arg("shape"));

  m.def(
      "run_cli",
      [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "runs the command line front end; returns (exit code, stdout, stderr)");
}
