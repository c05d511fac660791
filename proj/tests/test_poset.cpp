#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "wordlat/analysis.hpp"
#include "wordlat/poset.hpp"

using namespace wordlat;

namespace {

// Covers given as label pairs; leq is their reflexive-transitive closure,
// computed here naively so the poset code under test contributes nothing.
FinitePoset from_covers(std::vector<std::string> labels,
                        const std::vector<std::pair<std::string, std::string>>& covers) {
  const int n = static_cast<int>(labels.size());
  auto at = [&](const std::string& l) {
    return static_cast<int>(std::find(labels.begin(), labels.end(), l) - labels.begin());
  };
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) r[i][i] = true;
  for (const auto& [a, b] : covers) r[at(a)][at(b)] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return FinitePoset::from_leq(std::move(labels), [r](int a, int b) { return r[a][b]; });
}

FinitePoset m3() {
  return from_covers({"0", "a", "b", "c", "1"},
                     {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

FinitePoset n5() {
  return from_covers({"0", "x", "y", "z", "1"},
                     {{"0", "x"}, {"x", "y"}, {"y", "1"}, {"0", "z"}, {"z", "1"}});
}

std::vector<std::string> labels_of(const FinitePoset& p, const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(p.label(i));
  return out;
}

}  // namespace

TEST_CASE("bitsets") {
  Bitset b(130);
  CHECK(!b.any());
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.test(64));
  b.reset(64);
  CHECK(!b.test(64));
  CHECK(b.to_vector() == std::vector<int>{0, 129});

  Bitset c(130);
  c.set(0);
  CHECK(c.subset_of(b));
  CHECK(!b.subset_of(c));
  CHECK(b.intersects(c));
  c &= b;
  CHECK(c.count() == 1);
  c |= b;
  CHECK(c == b);
}

TEST_CASE("construction verifies the order axioms") {
  CHECK_THROWS_AS(FinitePoset::from_leq({"a", "b"}, [](int, int) { return false; }),
                  PosetError);  // not reflexive
  CHECK_THROWS_AS(FinitePoset::from_leq({"a", "b"}, [](int, int) { return true; }),
                  PosetError);  // not antisymmetric
  CHECK_THROWS_AS(FinitePoset::from_leq({"a", "b", "c"},
                                        [](int a, int b) {
                                          if (a == b) return true;
                                          return (a == 0 && b == 1) || (b == 2 && a == 1);
                                        }),
                  PosetError);  // not transitive
  CHECK_THROWS_AS(FinitePoset::from_leq({"a", "a"}, [](int a, int b) { return a == b; }),
                  std::invalid_argument);
}

TEST_CASE("covers are the transitive reduction") {
  const auto div12 = from_covers({"1", "2", "3", "4", "6", "12"}, {{"1", "2"},
                                                                  {"1", "3"},
                                                                  {"2", "4"},
                                                                  {"2", "6"},
                                                                  {"3", "6"},
                                                                  {"4", "12"},
                                                                  {"6", "12"}});
  CHECK(div12.covers().size() == 7);
  CHECK(div12.leq(*div12.index_of("1"), *div12.index_of("12")));
  CHECK(!div12.leq(*div12.index_of("4"), *div12.index_of("6")));
  CHECK(labels_of(div12, div12.upper_covers(*div12.index_of("2"))) ==
        std::vector<std::string>{"4", "6"});
  CHECK(div12.down_set(*div12.index_of("6")).count() == 4);
  CHECK(length_of(div12) == 3);

  const auto d = div12.dual();
  CHECK(d.covers().size() == 7);
  CHECK(d.leq(*d.index_of("12"), *d.index_of("1")));
  CHECK(length_of(d) == 3);
}

TEST_CASE("joins and meets") {
  const auto p = word_poset(2, 2);
  const int i03 = *p.index_of("03"), i10 = *p.index_of("10");
  CHECK(p.label(join_of(p, i03, i10)) == "13");
  CHECK(p.label(meet_of(p, i03, i10)) == "00");

  const auto anti = from_covers({"a", "b"}, {});
  CHECK_THROWS_AS(join_of(anti, 0, 1), PosetError);
}

TEST_CASE("irreducibles and canonical join representations") {
  const auto b3 = boolean_lattice(3);
  CHECK(join_irreducibles(b3).size() == 3);
  CHECK(meet_irreducibles(b3).size() == 3);

  const auto p = word_poset(2, 3);
  const auto cj = canonical_join_rep_generic(p, *p.index_of("231"));
  auto got = labels_of(p, cj);
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"030", "111", "200"});

  CHECK_THROWS_AS(canonical_join_rep_generic(m3(), *m3().index_of("1")), PosetError);
}

TEST_CASE("semidistributivity and left modularity") {
  const auto p5 = n5();
  CHECK(is_join_semidistributive(p5).first);
  CHECK(is_meet_semidistributive(p5).first);
  CHECK(!is_left_modular(p5, *p5.index_of("z")));
  CHECK(is_left_modular(p5, *p5.index_of("x")));
  CHECK(is_left_modular(p5, *p5.index_of("y")));

  const auto p3 = m3();
  const auto [jsd, jw] = is_join_semidistributive(p3);
  CHECK(!jsd);
  CHECK(jw.has_value());
  for (const auto& l : {"0", "a", "b", "c", "1"})
    CHECK(is_left_modular(p3, *p3.index_of(l)));
}

TEST_CASE("certificates for the five-element classics") {
  const auto c3 = certify(m3());
  CHECK(c3.is_lattice);
  CHECK(c3.length == 2);
  CHECK(c3.join_irreducible_count == 3);
  CHECK(c3.meet_irreducible_count == 3);
  CHECK(!c3.is_extremal);
  CHECK(!c3.is_join_semidistributive);
  CHECK(!c3.is_meet_semidistributive);
  CHECK(!c3.jsd_witness.empty());
  CHECK(c3.has_left_modular_chain);
  CHECK(c3.left_modular_chain.size() == 3);
  CHECK(!c3.is_trim);

  const auto c5 = certify(n5());
  CHECK(c5.is_lattice);
  CHECK(c5.length == 3);
  CHECK(c5.join_irreducible_count == 3);
  CHECK(c5.meet_irreducible_count == 3);
  CHECK(c5.is_extremal);
  CHECK(c5.is_join_semidistributive);
  CHECK(c5.is_meet_semidistributive);
  CHECK(c5.has_left_modular_chain);
  CHECK(c5.left_modular_chain == std::vector<std::string>{"0", "x", "y", "1"});
  CHECK(c5.is_trim);

  const auto anti = from_covers({"a", "b"}, {});
  const auto ca = certify(anti);
  CHECK(!ca.is_lattice);
  CHECK(!ca.lattice_witness.empty());
  CHECK(!ca.is_trim);

  const auto j5 = c5.to_json();
  CHECK(j5["trim"] == true);
  CHECK(j5["size"] == 5);
  CHECK(certify(n5()).to_text().find("trim: yes") != std::string::npos);
}

TEST_CASE("interval doubling") {
  const auto two = chain_poset(2);
  const auto grid = double_by_interval(two, 0, 1);
  CHECK(grid.size() == 4);
  CHECK(are_isomorphic(grid, boolean_lattice(2)).has_value());

  const auto one = chain_poset(1);
  const auto doubled = double_by_interval(one, 0, 0);
  CHECK(doubled.size() == 2);
  CHECK(are_isomorphic(doubled, chain_poset(2)).has_value());
  CHECK(doubled.labels() == std::vector<std::string>{"(0,1)", "(0,2)"});

  const auto traced = double_by_interval_traced(two, 1, 1);
  CHECK(traced.poset.size() == 3);
  CHECK(traced.origin ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {1, 2}});

  const auto anti = from_covers({"a", "b"}, {});
  CHECK_THROWS_AS(double_by_interval(anti, 0, 1), PosetError);
}

TEST_CASE("ideals") {
  const auto p = word_poset(2, 2);
  CHECK(labels_of(p, ideal_below(p, {*p.index_of("11")})) ==
        std::vector<std::string>{"00", "10", "11"});
  CHECK(ideal_below(p, {}).empty());
  CHECK(ideal_below(p, {*p.index_of("23")}).size() == 9);
}

TEST_CASE("generic galois graph guards its hypotheses") {
  const auto p3 = m3();
  const auto c3 = certify(p3);
  CHECK_THROWS_AS(galois_graph_generic(p3, c3), PosetError);

  const auto p5 = n5();
  const auto c5 = certify(p5);
  CHECK_THROWS_AS(galois_graph_generic(p3, c5), PosetError);

  const auto g = galois_graph_generic(p5, c5);
  CHECK(g.vertices == std::vector<std::string>{"x", "y", "z"});
  std::vector<std::pair<int, int>> want{{1, 0}, {2, 1}};
  CHECK(g.edges == want);
}

TEST_CASE("isomorphism checks") {
  CHECK(are_isomorphic(chain_poset(3), chain_poset(3)).has_value());
  CHECK(!are_isomorphic(chain_poset(3), chain_poset(4)).has_value());

  const auto cube =
      product_poset(chain_poset(2), product_poset(chain_poset(2), chain_poset(2)));
  const auto b3 = boolean_lattice(3);
  const auto iso = are_isomorphic(cube, b3);
  REQUIRE(iso.has_value());
  for (const auto& [a, b] : cube.covers()) {
    bool found = false;
    for (const auto& [c, d] : b3.covers())
      if (c == (*iso)[a] && d == (*iso)[b]) found = true;
    CHECK(found);
  }

  const auto vee = from_covers({"0", "l", "r"}, {{"0", "l"}, {"0", "r"}});
  CHECK(!are_isomorphic(vee, chain_poset(3)).has_value());
  CHECK(!are_isomorphic(vee, vee.dual()).has_value());
}

TEST_CASE("stock posets and exports") {
  CHECK(chain_poset(1).size() == 1);
  CHECK(chain_poset(4).covers().size() == 3);
  CHECK(boolean_lattice(0).size() == 1);
  CHECK(boolean_lattice(4).size() == 16);
  CHECK(length_of(boolean_lattice(4)) == 4);
  CHECK_THROWS_AS(boolean_lattice(17), std::invalid_argument);

  const auto u = disjoint_union(chain_poset(2), chain_poset(1));
  CHECK(u.size() == 3);
  CHECK(u.covers().size() == 1);

  const auto p = word_poset(2, 2);
  const auto j = to_json(p);
  CHECK(j["elements"].size() == 9);
  CHECK(j["covers"].size() == 11);
  const std::string dot = to_dot(p);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("\"00\"") != std::string::npos);

  const auto relabeled = chain_poset(2).relabeled({"lo", "hi"});
  CHECK(relabeled.label(0) == "lo");
  CHECK(relabeled.leq(0, 1));
}
