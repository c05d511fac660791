#include "wordlat/analysis.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wordlat {

std::string Irreducible::name() const {
  if (kind == Kind::A) return "a(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return "b(" + std::to_string(i) + ")";
}

MNWord Irreducible::materialize(int m, int n) const {
  std::vector<int> letters(n, 0);
  if (kind == Kind::A) {
    if (i < 1 || i > n || j < 1 || j > m)
      throw std::invalid_argument(name() + " does not exist in W(" + std::to_string(m) + "," +
                                  std::to_string(n) + ")");
    std::fill(letters.begin(), letters.begin() + i, j);
  } else {
    if (i < 2 || i > n)
      throw std::invalid_argument(name() + " does not exist in W(" + std::to_string(m) + "," +
                                  std::to_string(n) + ")");
    letters[i - 1] = m + 1;
  }
  return MNWord::validate(m, std::move(letters));
}

std::vector<Irreducible> irreducible_catalog(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("m and n must be nonnegative");
  std::vector<Irreducible> out;
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i <= n; ++i) out.push_back({Irreducible::Kind::A, i, j});
  for (int i = 2; i <= n; ++i) out.push_back({Irreducible::Kind::B, i, 0});
  return out;
}

std::vector<Irreducible> canonical_join_rep(const MNWord& w) {
  const int top = w.m() + 1;
  std::vector<Irreducible> out;
  for (int s = 1; s <= w.m(); ++s) {
    int last = -1;
    for (int i = 0; i < w.n(); ++i)
      if (w.letters()[i] == s) last = i;
    if (last >= 0) out.push_back({Irreducible::Kind::A, last + 1, s});
  }
  for (int i = 0; i < w.n(); ++i)
    if (w.letters()[i] == top) out.push_back({Irreducible::Kind::B, i + 1, 0});
  return out;
}

int atom_count(const MNWord& w) {
  int count = 0;
  for (const Irreducible& x : canonical_join_rep(w))
    if (x.kind == Irreducible::Kind::B || (x.i == 1 && x.j == 1)) ++count;
  return count;
}

// ---- H-triangle

bigint HTriangle::coefficient(int a, int b) const {
  auto it = cells.find({a, b});
  return it == cells.end() ? bigint(0) : it->second;
}

bigint HTriangle::total() const {
  bigint t = 0;
  for (const auto& [ab, c] : cells) t += c;
  return t;
}

std::string HTriangle::polynomial() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [ab, c] : cells) {
    if (c == 0) continue;
    const auto [a, b] = ab;
    bigint v = c;
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    std::string monomial;
    if (a > 0) monomial += a == 1 ? "x" : "x^" + std::to_string(a);
    if (b > 0) monomial += std::string(monomial.empty() ? "" : "*") +
                           (b == 1 ? "y" : "y^" + std::to_string(b));
    if (monomial.empty())
      os << v;
    else if (v == 1)
      os << monomial;
    else
      os << v << "*" << monomial;
  }
  if (first) os << "0";
  return os.str();
}

std::string HTriangle::csv() const {
  std::ostringstream os;
  os << "m,n,a,b,coefficient\n";
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= a; ++b)
      os << m << "," << n << "," << a << "," << b << "," << coefficient(a, b) << "\n";
  return os.str();
}

nlohmann::json HTriangle::to_json() const {
  nlohmann::json cell_list = nlohmann::json::array();
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= a; ++b)
      cell_list.push_back(
          {{"a", a}, {"b", b}, {"coefficient", coefficient(a, b).str()}});
  return nlohmann::json{
      {"m", m}, {"n", n}, {"cells", cell_list}, {"polynomial", polynomial()}};
}

HTriangle h_triangle(int m, int n) {
  HTriangle t;
  t.m = m;
  t.n = n;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= a; ++b) t.cells[{a, b}] = 0;
  for_each_word(m, n, [&](const MNWord& w) {
    WordStats st = word_stats(w);
    t.cells[{st.in_degree, atom_count(w)}] += 1;
  });
  return t;
}

bigint h_coefficient_closed_form(int m, int n, int a, int b) {
  if (b < 0 || a < b || a > n) return 0;
  if (b == a) return binomial(n, a);
  if (b == a - 1)
    return bigint(static_cast<long long>(m) * n - static_cast<long long>(m) * a + m - 1) *
           binomial(n - 1, a - 1);
  return binomial(m, a - b) * binomial(n - b, a - b) * binomial(n - 1, b);
}

HTriangle h_triangle_closed_form(int m, int n) {
  HTriangle t;
  t.m = m;
  t.n = n;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= a; ++b) t.cells[{a, b}] = h_coefficient_closed_form(m, n, a, b);
  return t;
}

bigint refined_count_closed_form(int m, int n, int a, int b) {
  if (n == 0) return a == 0 && b == 0 ? 1 : 0;
  return binomial(m, b) * binomial(n - a + b, b) * binomial(n - 1, n - a + b - 1);
}

bigint in_degree_count(int m, int n, int a) {
  if (n == 0) return a == 0 ? 1 : 0;
  bigint total = 0;
  for (int b = 0; b <= a; ++b)
    total += binomial(m, b) * binomial(n - a + b, n - a) * binomial(n - 1, a - b);
  return total;
}

bigint conjectured_in_degree_count(int m, int n, int a) {
  return binomial(m + a, a) * binomial(n, a) - binomial(m + a - 1, m) * binomial(n - 1, a - 1);
}

nlohmann::json ConjectureScan::to_json() const {
  nlohmann::json j{{"max_m", max_m}, {"max_n", max_n}, {"checked", checked}, {"agreed", agreed}};
  if (!agreed) {
    j["witness"] = {{"m", witness_m},
                    {"n", witness_n},
                    {"a", witness_a},
                    {"in_degree_count", lhs.str()},
                    {"conjectured", rhs.str()}};
  }
  return j;
}

ConjectureScan scan_in_degree_conjecture(int max_m, int max_n, std::optional<int> max_a) {
  ConjectureScan r;
  r.max_m = max_m;
  r.max_n = max_n;
  for (int n = 0; n <= max_n && r.agreed; ++n) {
    for (int m = 0; m <= max_m && r.agreed; ++m) {
      const int a_hi = max_a ? std::min(*max_a, n) : n;
      for (int a = 0; a <= a_hi; ++a) {
        ++r.checked;
        bigint lhs = in_degree_count(m, n, a);
        bigint rhs = conjectured_in_degree_count(m, n, a);
        if (lhs != rhs) {
          r.agreed = false;
          r.witness_m = m;
          r.witness_n = n;
          r.witness_a = a;
          r.lhs = lhs;
          r.rhs = rhs;
          break;
        }
      }
    }
  }
  return r;
}

// ---- Galois graph

LabeledDigraph GaloisGraph::as_labeled() const {
  LabeledDigraph g;
  for (const Irreducible& v : vertices) g.vertices.push_back(v.materialize(m, n).str());
  g.edges = edges;
  return g;
}

nlohmann::json GaloisGraph::to_json() const {
  nlohmann::json verts = nlohmann::json::array();
  for (const Irreducible& v : vertices)
    verts.push_back({{"name", v.name()}, {"word", v.materialize(m, n).str()}});
  nlohmann::json e = nlohmann::json::array();
  for (auto [a, b] : edges) e.push_back({a, b});
  return nlohmann::json{{"m", m}, {"n", n}, {"vertices", verts}, {"edges", e}};
}

std::string GaloisGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph galois {\n";
  for (const Irreducible& v : vertices)
    os << "  \"" << v.name() << "\" [label=\"" << v.name() << " "
       << v.materialize(m, n).str() << "\"];\n";
  for (auto [a, b] : edges)
    os << "  \"" << vertices[a].name() << "\" -> \"" << vertices[b].name() << "\";\n";
  os << "}\n";
  return os.str();
}

GaloisGraph galois_graph_direct(int m, int n) {
  GaloisGraph g;
  g.m = m;
  g.n = n;
  g.vertices = irreducible_catalog(m, n);
  for (size_t u = 0; u < g.vertices.size(); ++u) {
    for (size_t v = 0; v < g.vertices.size(); ++v) {
      if (u == v) continue;
      const Irreducible& x = g.vertices[u];
      const Irreducible& y = g.vertices[v];
      if (y.kind == Irreducible::Kind::B) continue;
      bool edge = false;
      if (x.kind == Irreducible::Kind::A)
        edge = x.i >= y.i && x.j >= y.j;
      else
        edge = x.i == y.i;
      if (edge) g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// ---- doubling pipeline

namespace {

FinitePoset poset_on(const std::vector<MNWord>& words) {
  std::vector<std::string> labels;
  labels.reserve(words.size());
  for (const MNWord& w : words) labels.push_back(w.str());
  return FinitePoset::from_leq(std::move(labels),
                               [&](int a, int b) { return leq(words[a], words[b]); });
}

std::set<std::pair<std::string, std::string>> cover_labels(const FinitePoset& p) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [a, b] : p.covers()) out.insert({p.label(a), p.label(b)});
  return out;
}

void check_step(const FinitePoset& got, const FinitePoset& expected, const std::string& what) {
  std::set<std::string> gl(got.labels().begin(), got.labels().end());
  std::set<std::string> el(expected.labels().begin(), expected.labels().end());
  if (gl != el) throw PipelineMismatch(what + ": element sets differ");
  if (cover_labels(got) != cover_labels(expected))
    throw PipelineMismatch(what + ": cover relations differ");
}

MNWord with_last(const MNWord& w, int letter) {
  std::vector<int> letters = w.letters();
  letters.back() = letter;
  return MNWord::validate(w.m(), std::move(letters));
}

MNWord appended(const MNWord& w, int letter) {
  std::vector<int> letters = w.letters();
  letters.push_back(letter);
  return MNWord::validate(w.m(), std::move(letters));
}

}  // namespace

std::vector<int> DoublingTrace::sizes() const {
  std::vector<int> out;
  out.reserve(steps.size());
  for (const DoublingStep& s : steps) out.push_back(s.size_after);
  return out;
}

nlohmann::json DoublingTrace::to_json() const {
  nlohmann::json step_list = nlohmann::json::array();
  for (const DoublingStep& s : steps) {
    nlohmann::json j{{"size_before", s.size_before}, {"size_after", s.size_after}};
    if (!s.interval_hi.empty()) j["interval"] = {s.interval_lo, s.interval_hi};
    step_list.push_back(std::move(j));
  }
  return nlohmann::json{{"m", m}, {"n", n}, {"steps", step_list}};
}

std::string DoublingTrace::to_text() const {
  std::ostringstream os;
  os << "W(" << m << "," << n << ") by interval doubling\n";
  for (size_t k = 0; k < steps.size(); ++k) {
    const DoublingStep& s = steps[k];
    os << "step " << k << ": ";
    if (s.interval_hi.empty())
      os << "chain W(" << m << "," << std::min(n, 1) << ") (" << s.size_after << " elements)";
    else
      os << "double [" << s.interval_lo << ", " << s.interval_hi << "]: " << s.size_before
         << " -> " << s.size_after << ", certified";
    os << "\n";
  }
  return os.str();
}

DoublingTrace build_by_doubling(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("m and n must be nonnegative");
  DoublingTrace tr;
  tr.m = m;
  tr.n = n;

  std::vector<MNWord> words = enumerate_words(m, std::min(n, 1));
  FinitePoset cur = poset_on(words);
  tr.steps.push_back({"", "", cur.size(), cur.size(), cur});

  for (int len = 1; len < n; ++len) {
    struct Stage {
      MNWord lo, hi;
      std::optional<int> relabel_letter;  // letter replacing the trailing 0
    };
    std::vector<Stage> stages;
    stages.push_back({bottom_word(m, len), top_word(m, len), std::nullopt});
    for (int j = m; j >= 1; --j) {
      std::vector<int> lo(len + 1, j);
      lo.back() = 0;
      stages.push_back(
          {MNWord::validate(m, std::move(lo)), appended(top_word(m, len), 0), j});
    }

    for (const Stage& stage : stages) {
      const std::string what = "W(" + std::to_string(m) + "," + std::to_string(len + 1) +
                               ") stage [" + stage.lo.str() + ", " + stage.hi.str() + "]";
      auto lo_idx = cur.index_of(stage.lo.str());
      auto hi_idx = cur.index_of(stage.hi.str());
      if (!lo_idx || !hi_idx) throw PipelineMismatch(what + ": interval endpoint missing");

      DoubledPoset d = double_by_interval_traced(cur, *lo_idx, *hi_idx);

      Bitset interval = cur.up_set(*lo_idx);
      interval &= cur.down_set(*hi_idx);
      if (stage.relabel_letter) {
        for (int i = 0; i < cur.size(); ++i) {
          const auto& letters = words[i].letters();
          const bool in_slice =
              letters.back() == 0 &&
              *std::min_element(letters.begin(), letters.end() - 1) >= *stage.relabel_letter;
          if (in_slice != interval.test(i))
            throw PipelineMismatch(what + ": doubling set is not the expected slice at '" +
                                   words[i].str() + "'");
        }
      }

      std::vector<MNWord> next_words;
      next_words.reserve(d.origin.size());
      for (auto [idx, layer] : d.origin) {
        if (stage.relabel_letter) {
          if (layer == 2 && interval.test(idx))
            next_words.push_back(with_last(words[idx], *stage.relabel_letter));
          else
            next_words.push_back(words[idx]);
        } else {
          next_words.push_back(appended(words[idx], layer == 1 ? 0 : m + 1));
        }
      }

      std::vector<std::string> new_labels;
      new_labels.reserve(next_words.size());
      for (const MNWord& w : next_words) new_labels.push_back(w.str());
      FinitePoset relabeled = d.poset.relabeled(std::move(new_labels));

      std::sort(next_words.begin(), next_words.end());
      FinitePoset expected = poset_on(next_words);
      check_step(relabeled, expected, what);

      tr.steps.push_back({stage.lo.str(), stage.hi.str(), cur.size(),
                          static_cast<int>(next_words.size()), expected});
      words = std::move(next_words);
      cur = tr.steps.back().poset;
    }
  }

  std::vector<MNWord> direct = enumerate_words(m, n);
  if (words != direct)
    throw PipelineMismatch("final element set differs from direct enumeration");
  return tr;
}

// ---- structure of the irreducibles

bool irreducible_poset_shape(int m, int n) {
  std::vector<Irreducible> catalog = irreducible_catalog(m, n);
  std::vector<MNWord> words;
  words.reserve(catalog.size());
  for (const Irreducible& x : catalog) words.push_back(x.materialize(m, n));
  std::vector<std::string> labels;
  for (const MNWord& w : words) labels.push_back(w.str());
  FinitePoset induced = FinitePoset::from_leq(
      std::move(labels), [&](int a, int b) { return leq(words[a], words[b]); });

  FinitePoset grid = product_poset(chain_poset(m), chain_poset(n));
  std::vector<std::string> iso_labels;
  for (int i = 0; i < n - 1; ++i) iso_labels.push_back("p" + std::to_string(i));
  FinitePoset isolated =
      FinitePoset::from_leq(std::move(iso_labels), [](int a, int b) { return a == b; });
  FinitePoset target = disjoint_union(grid, isolated);
  return are_isomorphic(induced, target).has_value();
}

std::vector<MNWord> longest_chain_witness(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("m and n must be nonnegative");
  if (n == 0) return {MNWord::validate(m, {})};
  std::vector<MNWord> chain;
  for (int s = 0; s <= m; ++s) chain.push_back(MNWord::validate(m, {s}));
  for (int len = 1; len < n; ++len) {
    std::vector<MNWord> next;
    next.reserve(chain.size() + m + 1);
    for (const MNWord& c : chain) next.push_back(appended(c, 0));
    for (int j = 1; j <= m + 1; ++j) next.push_back(appended(top_word(m, len), j));
    chain = std::move(next);
  }
  return chain;
}

FinitePoset word_poset(int m, int n) {
  return poset_on(enumerate_words(m, n));
}

}  // namespace wordlat
