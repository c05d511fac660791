#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "wordlat/analysis.hpp"
#include "wordlat/oracle.hpp"

namespace py = pybind11;
using namespace wordlat;

namespace {

py::int_ to_int(const bigint& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::dict stats_dict(const MNWord& w) {
  const WordStats st = word_stats(w);
  py::dict d;
  d["min_letter"] = st.min_letter;
  d["support"] = st.support;
  d["top_count"] = st.top_count;
  d["in_degree"] = st.in_degree;
  return d;
}

py::dict poset_dict(const FinitePoset& p) {
  py::dict d;
  d["elements"] = p.labels();
  py::list covers;
  for (auto [a, b] : p.covers()) covers.append(py::make_tuple(a, b));
  d["covers"] = covers;
  return d;
}

py::dict certificate_dict(const LatticeCertificate& c) {
  py::dict d;
  d["size"] = c.size;
  d["is_lattice"] = c.is_lattice;
  if (!c.is_lattice) d["lattice_witness"] = c.lattice_witness;
  d["length"] = c.length;
  d["join_irreducible_count"] = c.join_irreducible_count;
  d["meet_irreducible_count"] = c.meet_irreducible_count;
  d["is_extremal"] = c.is_extremal;
  d["is_join_semidistributive"] = c.is_join_semidistributive;
  d["is_meet_semidistributive"] = c.is_meet_semidistributive;
  if (!c.jsd_witness.empty()) d["jsd_witness"] = c.jsd_witness;
  if (!c.msd_witness.empty()) d["msd_witness"] = c.msd_witness;
  d["has_left_modular_chain"] = c.has_left_modular_chain;
  d["left_modular_chain"] = c.left_modular_chain;
  d["is_trim"] = c.is_trim;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "lattices of (m,n)-words: enumeration, certification, and cross-checks";

  py::register_exception<WordError>(m, "WordError", PyExc_ValueError);
  py::register_exception<PosetError>(m, "PosetError", PyExc_ValueError);
  py::register_exception<PipelineMismatch>(m, "PipelineMismatch", PyExc_RuntimeError);

  py::class_<MNWord>(m, "Word")
      .def(py::init([](int m_, const std::string& text) { return MNWord::parse(m_, text); }),
           py::arg("m"), py::arg("text"))
      .def(py::init([](int m_, const std::vector<int>& letters) {
             return MNWord::validate(m_, letters);
           }),
           py::arg("m"), py::arg("letters"))
      .def_property_readonly("m", &MNWord::m)
      .def_property_readonly("n", &MNWord::n)
      .def_property_readonly("letters", &MNWord::letters)
      .def("stats", &stats_dict)
      .def("__str__", &MNWord::str)
      .def("__repr__",
           [](const MNWord& w) {
             return "Word(" + std::to_string(w.m()) + ", '" + w.str() + "')";
           })
      .def("__eq__", [](const MNWord& a, const MNWord& b) { return a == b; })
      .def("__lt__", [](const MNWord& a, const MNWord& b) { return a < b; })
      .def("__le__", [](const MNWord& a, const MNWord& b) { return a <= b; })
      .def("__hash__",
           [](const MNWord& w) { return py::hash(py::make_tuple(w.m(), w.str())); });

  py::class_<Irreducible>(m, "Irreducible")
      .def_property_readonly("kind",
                             [](const Irreducible& x) {
                               return x.kind == Irreducible::Kind::A ? "a" : "b";
                             })
      .def_readonly("i", &Irreducible::i)
      .def_readonly("j", &Irreducible::j)
      .def("name", &Irreducible::name)
      .def("materialize", &Irreducible::materialize, py::arg("m"), py::arg("n"))
      .def("__repr__", [](const Irreducible& x) { return x.name(); })
      .def("__eq__", [](const Irreducible& a, const Irreducible& b) { return a == b; });

  m.def("enumerate_words", &enumerate_words, py::arg("m"), py::arg("n"));
  m.def("count_words", [](int m_, int n) { return to_int(count_words(m_, n)); }, py::arg("m"),
        py::arg("n"));
  m.def("count_topless", [](int m_, int n) { return to_int(count_topless(m_, n)); },
        py::arg("m"), py::arg("n"));
  m.def("leq", &leq, py::arg("u"), py::arg("v"));
  m.def("join", &join, py::arg("u"), py::arg("v"));
  m.def("meet", &meet, py::arg("u"), py::arg("v"));
  m.def("lower_covers", &lower_covers, py::arg("v"));
  m.def("word_stats", &stats_dict, py::arg("v"));
  m.def("bottom_word", &bottom_word, py::arg("m"), py::arg("n"));
  m.def("top_word", &top_word, py::arg("m"), py::arg("n"));

  m.def("irreducible_catalog", &irreducible_catalog, py::arg("m"), py::arg("n"));
  m.def("canonical_join_rep", &canonical_join_rep, py::arg("w"));
  m.def("atom_count", &atom_count, py::arg("w"));

  m.def("hasse", [](int m_, int n) { return poset_dict(word_poset(m_, n)); }, py::arg("m"),
        py::arg("n"));
  m.def("hasse_dot", [](int m_, int n) { return to_dot(word_poset(m_, n)); }, py::arg("m"),
        py::arg("n"));
  m.def("certify", [](int m_, int n) { return certificate_dict(certify(word_poset(m_, n))); },
        py::arg("m"), py::arg("n"));
  m.def("longest_chain", &longest_chain_witness, py::arg("m"), py::arg("n"));

  m.def("h_triangle",
        [](int m_, int n) {
          const HTriangle t = h_triangle(m_, n);
          py::dict cells;
          for (const auto& [key, value] : t.cells)
            if (value != 0) cells[py::make_tuple(key.first, key.second)] = to_int(value);
          py::dict d;
          d["m"] = t.m;
          d["n"] = t.n;
          d["cells"] = cells;
          d["total"] = to_int(t.total());
          d["polynomial"] = t.polynomial();
          return d;
        },
        py::arg("m"), py::arg("n"));
  m.def("h_coefficient_closed_form",
        [](int m_, int n, int a, int b) { return to_int(h_coefficient_closed_form(m_, n, a, b)); },
        py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("refined_count",
        [](int m_, int n, int a, int b) { return to_int(refined_count_closed_form(m_, n, a, b)); },
        py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("in_degree_count",
        [](int m_, int n, int a) { return to_int(in_degree_count(m_, n, a)); }, py::arg("m"),
        py::arg("n"), py::arg("a"));
  m.def("conjectured_in_degree_count",
        [](int m_, int n, int a) { return to_int(conjectured_in_degree_count(m_, n, a)); },
        py::arg("m"), py::arg("n"), py::arg("a"));

  m.def("scan_in_degree_conjecture",
        [](int max_m, int max_n, std::optional<int> max_a) {
          const ConjectureScan r = scan_in_degree_conjecture(max_m, max_n, max_a);
          py::dict d;
          d["max_m"] = r.max_m;
          d["max_n"] = r.max_n;
          d["checked"] = r.checked;
          d["agreed"] = r.agreed;
          if (!r.agreed) {
            py::dict w;
            w["m"] = r.witness_m;
            w["n"] = r.witness_n;
            w["a"] = r.witness_a;
            w["in_degree_count"] = to_int(r.lhs);
            w["conjectured"] = to_int(r.rhs);
            d["witness"] = w;
          }
          return d;
        },
        py::arg("max_m") = 8, py::arg("max_n") = 8, py::arg("max_a") = py::none());

  m.def("galois_graph",
        [](int m_, int n) {
          const GaloisGraph g = galois_graph_direct(m_, n);
          py::dict d;
          d["m"] = g.m;
          d["n"] = g.n;
          py::list names, words;
          for (const Irreducible& v : g.vertices) {
            names.append(v.name());
            words.append(v.materialize(m_, n).str());
          }
          py::list edges;
          for (auto [a, b] : g.edges) edges.append(py::make_tuple(a, b));
          d["vertices"] = names;
          d["words"] = words;
          d["edges"] = edges;
          return d;
        },
        py::arg("m"), py::arg("n"));
  m.def("galois_dot", [](int m_, int n) { return galois_graph_direct(m_, n).to_dot(); },
        py::arg("m"), py::arg("n"));

  m.def("doubling_trace",
        [](int m_, int n) {
          const DoublingTrace tr = build_by_doubling(m_, n);
          py::dict d;
          d["m"] = tr.m;
          d["n"] = tr.n;
          d["sizes"] = tr.sizes();
          py::list steps;
          for (const DoublingStep& s : tr.steps) {
            py::dict step;
            if (s.interval_hi.empty())
              step["interval"] = py::none();
            else
              step["interval"] = py::make_tuple(s.interval_lo, s.interval_hi);
            step["size_before"] = s.size_before;
            step["size_after"] = s.size_after;
            steps.append(step);
          }
          d["steps"] = steps;
          return d;
        },
        py::arg("m"), py::arg("n"));

  m.def("run_suite",
        [](int max_m, int max_n, long long budget) {
          oracle::SuiteConfig cfg;
          cfg.max_m = max_m;
          cfg.max_n = max_n;
          cfg.budget = budget;
          py::list out;
          for (const oracle::OracleReport& r : oracle::run_suite(cfg)) {
            py::dict d;
            d["subject"] = r.subject;
            d["m"] = r.m;
            d["n"] = r.n;
            d["agreed"] = r.agreed;
            d["witness"] = r.witness;
            out.append(d);
          }
          return out;
        },
        py::arg("max_m") = 3, py::arg("max_n") = 4, py::arg("budget") = 1'000'000LL);
}
