#include "wordlat/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "wordlat/analysis.hpp"

namespace wordlat::oracle {

namespace {

bool tuple_valid(int m, const std::vector<int>& w) {
  const int top = m + 1;
  if (!w.empty() && w[0] == top) return false;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 1 || w[i] > m) continue;
    for (size_t k = 0; k < i; ++k)
      if (w[k] < w[i]) return false;
  }
  return true;
}

bool tuple_leq(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string tuple_str(int m, const std::vector<int>& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (m + 1 <= 9) {
      out += std::to_string(w[i]);
    } else {
      if (i) out += ',';
      out += std::to_string(w[i]);
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> oracle_enumerate(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("m and n must be nonnegative");
  std::vector<std::vector<int>> out;
  std::vector<int> w(n, 0);
  while (true) {
    if (tuple_valid(m, w)) out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[i] == m + 1) {
      w[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

MNWord oracle_meet(const MNWord& u, const MNWord& v) {
  if (u.m() != v.m() || u.n() != v.n())
    throw WordError(WordError::Kind::ShapeMismatch, "oracle_meet: shape mismatch");
  std::vector<std::vector<int>> lower;
  for (const auto& w : oracle_enumerate(u.m(), u.n()))
    if (tuple_leq(w, u.letters()) && tuple_leq(w, v.letters())) lower.push_back(w);
  for (const auto& g : lower) {
    bool greatest = true;
    for (const auto& w : lower)
      if (!tuple_leq(w, g)) {
        greatest = false;
        break;
      }
    if (greatest) return MNWord::validate(u.m(), g);
  }
  throw std::runtime_error("oracle_meet: no greatest lower bound of " +
                           tuple_str(u.m(), u.letters()) + " and " +
                           tuple_str(v.m(), v.letters()));
}

std::vector<std::vector<int>> oracle_covers(const MNWord& v) {
  std::vector<std::vector<int>> strictly_below;
  for (const auto& w : oracle_enumerate(v.m(), v.n()))
    if (w != v.letters() && tuple_leq(w, v.letters())) strictly_below.push_back(w);
  std::vector<std::vector<int>> out;
  for (const auto& w : strictly_below) {
    bool maximal = true;
    for (const auto& x : strictly_below)
      if (x != w && tuple_leq(w, x)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(w);
  }
  return out;
}

std::vector<int> oracle_canonical_join_rep(const FinitePoset& p, int x) {
  const int n = p.size();

  std::vector<int> jirr;
  for (int b = 0; b < n; ++b) {
    int covers = 0;
    for (int a = 0; a < n; ++a) {
      if (a == b || !p.leq(a, b)) continue;
      bool between = false;
      for (int c = 0; c < n && !between; ++c)
        if (c != a && c != b && p.leq(a, c) && p.leq(c, b)) between = true;
      if (!between) ++covers;
    }
    if (covers == 1) jirr.push_back(b);
  }

  std::vector<int> below;
  for (int j : jirr)
    if (p.leq(j, x)) below.push_back(j);
  if (below.size() > 24)
    throw std::invalid_argument("oracle canonical join search too large at '" + p.label(x) +
                                "'");

  const int k = static_cast<int>(below.size());
  std::vector<std::vector<bool>> minimal;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    bool is_lub = true;
    for (int b = 0; b < k && is_lub; ++b)
      if ((mask >> b & 1) && !p.leq(below[b], x)) is_lub = false;
    for (int z = 0; z < n && is_lub; ++z) {
      bool upper = true;
      for (int b = 0; b < k && upper; ++b)
        if ((mask >> b & 1) && !p.leq(below[b], z)) upper = false;
      if (upper && !p.leq(x, z)) is_lub = false;
    }
    if (!is_lub) continue;

    std::vector<bool> ideal(n, false);
    for (int b = 0; b < k; ++b)
      if (mask >> b & 1)
        for (int e = 0; e < n; ++e)
          if (p.leq(e, below[b])) ideal[e] = true;

    auto contains = [n](const std::vector<bool>& big, const std::vector<bool>& small) {
      for (int e = 0; e < n; ++e)
        if (small[e] && !big[e]) return false;
      return true;
    };
    bool dominated = false;
    for (const auto& seen : minimal)
      if (contains(ideal, seen)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    std::erase_if(minimal, [&](const std::vector<bool>& seen) { return contains(seen, ideal); });
    minimal.push_back(std::move(ideal));
  }

  if (minimal.size() != 1)
    throw PosetError(PosetError::Kind::NoCanonicalRep,
                     "'" + p.label(x) + "' has " + std::to_string(minimal.size()) +
                         " minimal representation ideals");

  std::vector<int> out;
  const auto& ideal = minimal.front();
  for (int e = 0; e < n; ++e) {
    if (!ideal[e]) continue;
    bool maximal = true;
    for (int f = 0; f < n && maximal; ++f)
      if (f != e && ideal[f] && p.leq(e, f)) maximal = false;
    if (maximal) out.push_back(e);
  }
  return out;
}

// ---- the suite

nlohmann::json OracleReport::to_json() const {
  return nlohmann::json{
      {"subject", subject}, {"m", m}, {"n", n}, {"agreed", agreed}, {"witness", witness}};
}

namespace {

long long saturating_tuple_count(int m, int n) {
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > std::numeric_limits<long long>::max() / (m + 2))
      return std::numeric_limits<long long>::max();
    total *= m + 2;
  }
  return total;
}

struct InstanceChecker {
  int m, n;
  const SuiteConfig& cfg;
  std::vector<OracleReport>& reports;

  void report(const std::string& subject, bool agreed, const std::string& witness) {
    reports.push_back({subject, m, n, agreed, agreed ? "" : witness});
  }

  void run() {
    const auto oracle_words = oracle_enumerate(m, n);
    const auto lib_words = enumerate_words(m, n);

    check_counts(oracle_words, lib_words);
    check_meets(lib_words);
    check_covers(lib_words);

    FinitePoset p = word_poset(m, n);
    check_canonical_join_reps(p, lib_words);
    LatticeCertificate cert = certify(p);
    check_certificate(cert);
    check_galois(p, cert);
    check_doubling();
  }

  void check_counts(const std::vector<std::vector<int>>& oracle_words,
                    const std::vector<MNWord>& lib_words) {
    if (count_words(m, n) != oracle_words.size()) {
      report("count", false,
             "count_words = " + count_words(m, n).str() + ", oracle enumerates " +
                 std::to_string(oracle_words.size()));
      return;
    }
    if (lib_words.size() != oracle_words.size()) {
      report("count", false,
             "enumerate_words yields " + std::to_string(lib_words.size()) + ", oracle " +
                 std::to_string(oracle_words.size()));
      return;
    }
    for (size_t i = 0; i < lib_words.size(); ++i)
      if (lib_words[i].letters() != oracle_words[i]) {
        report("count", false, "enumeration order differs at index " + std::to_string(i) +
                                   ": " + lib_words[i].str() + " vs " +
                                   tuple_str(m, oracle_words[i]));
        return;
      }
    long long topless = 0;
    for (const auto& w : oracle_words)
      if (std::find(w.begin(), w.end(), m + 1) == w.end()) ++topless;
    if (count_topless(m, n) != topless) {
      report("count", false,
             "count_topless = " + count_topless(m, n).str() + ", oracle counts " +
                 std::to_string(topless));
      return;
    }
    report("count", true, "");
  }

  void check_meets(const std::vector<MNWord>& words) {
    std::function<std::vector<int>(const MNWord&, const MNWord&)> meet_fn = cfg.meet_fn;
    if (!meet_fn)
      meet_fn = [](const MNWord& a, const MNWord& b) { return meet(a, b).letters(); };
    for (size_t i = 0; i < words.size(); ++i) {
      for (size_t k = i; k < words.size(); ++k) {
        std::vector<int> got = meet_fn(words[i], words[k]);
        MNWord want = oracle_meet(words[i], words[k]);
        if (got != want.letters()) {
          report("meet", false, "meet(" + words[i].str() + ", " + words[k].str() +
                                    ") = " + tuple_str(m, got) + ", oracle finds " +
                                    want.str());
          return;
        }
      }
    }
    report("meet", true, "");
  }

  void check_covers(const std::vector<MNWord>& words) {
    for (const MNWord& w : words) {
      std::vector<std::vector<int>> got;
      for (const MNWord& c : lower_covers(w)) got.push_back(c.letters());
      std::vector<std::vector<int>> want = oracle_covers(w);
      if (got != want) {
        report("covers", false,
               "lower_covers(" + w.str() + ") yields " + std::to_string(got.size()) +
                   " words, oracle finds " + std::to_string(want.size()) +
                   " or a different set");
        return;
      }
      if (static_cast<int>(got.size()) != word_stats(w).in_degree) {
        report("covers", false, "in_degree stat of " + w.str() + " is " +
                                    std::to_string(word_stats(w).in_degree) + " but " +
                                    std::to_string(got.size()) + " covers exist");
        return;
      }
    }
    report("covers", true, "");
  }

  void check_canonical_join_reps(const FinitePoset& p, const std::vector<MNWord>& words) {
    for (int x = 0; x < p.size(); ++x) {
      std::set<std::string> formula;
      for (const Irreducible& j : canonical_join_rep(words[x]))
        formula.insert(j.materialize(m, n).str());

      std::set<std::string> brute;
      for (int e : oracle_canonical_join_rep(p, x)) brute.insert(p.label(e));
      if (formula != brute) {
        report("canonical_join_rep", false,
               "joinands of " + words[x].str() + " differ from the oracle");
        return;
      }

      std::set<std::string> generic;
      for (int e : canonical_join_rep_generic(p, x)) generic.insert(p.label(e));
      if (formula != generic) {
        report("canonical_join_rep", false,
               "joinands of " + words[x].str() + " differ from the generic computation");
        return;
      }
    }
    report("canonical_join_rep", true, "");
  }

  void check_certificate(const LatticeCertificate& cert) {
    const int expected = n >= 1 ? (m + 1) * n - 1 : 0;
    std::string why;
    if (!cert.is_lattice)
      why = "not certified a lattice: " + cert.lattice_witness;
    else if (!cert.is_extremal)
      why = "not extremal";
    else if (!cert.is_join_semidistributive)
      why = "not join-semidistributive at '" + cert.jsd_witness + "'";
    else if (!cert.is_meet_semidistributive)
      why = "not meet-semidistributive at '" + cert.msd_witness + "'";
    else if (!cert.is_trim)
      why = "not trim";
    else if (cert.length != expected || cert.join_irreducible_count != expected ||
             cert.meet_irreducible_count != expected)
      why = "length " + std::to_string(cert.length) + ", " +
            std::to_string(cert.join_irreducible_count) + " join-irreducibles, " +
            std::to_string(cert.meet_irreducible_count) + " meet-irreducibles, expected " +
            std::to_string(expected);
    report("certificate", why.empty(), why);
  }

  void check_galois(const FinitePoset& p, const LatticeCertificate& cert) {
    try {
      LabeledDigraph direct = galois_graph_direct(m, n).as_labeled();
      LabeledDigraph generic = galois_graph_generic(p, cert);
      auto canon = [](const LabeledDigraph& g) {
        std::set<std::string> verts(g.vertices.begin(), g.vertices.end());
        std::set<std::pair<std::string, std::string>> edges;
        for (auto [a, b] : g.edges) edges.insert({g.vertices[a], g.vertices[b]});
        return std::make_pair(verts, edges);
      };
      if (canon(direct) != canon(generic)) {
        report("galois", false, "direct and generic Galois graphs differ");
        return;
      }
      report("galois", true, "");
    } catch (const std::exception& e) {
      report("galois", false, e.what());
    }
  }

  void check_doubling() {
    try {
      build_by_doubling(m, n);
      report("doubling", true, "");
    } catch (const std::exception& e) {
      report("doubling", false, e.what());
    }
  }
};

}  // namespace

std::vector<OracleReport> run_suite(const SuiteConfig& cfg) {
  std::vector<OracleReport> reports;
  long long budget_left = cfg.budget;
  for (int n = 0; n <= cfg.max_n; ++n) {
    for (int m = 0; m <= cfg.max_m; ++m) {
      const long long tuples = saturating_tuple_count(m, n);
      if (tuples > budget_left) return reports;
      budget_left -= tuples;
      InstanceChecker{m, n, cfg, reports}.run();
    }
  }
  return reports;
}

std::string to_jsonl(const std::vector<OracleReport>& reports) {
  std::ostringstream os;
  for (const OracleReport& r : reports) os << r.to_json().dump() << "\n";
  return os.str();
}

bool all_agreed(const std::vector<OracleReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const OracleReport& r) { return r.agreed; });
}

}  // namespace wordlat::oracle
