#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "wordlat/analysis.hpp"

using namespace wordlat;

namespace {

std::vector<std::string> materialized(const std::vector<Irreducible>& xs, int m, int n) {
  std::vector<std::string> out;
  for (const Irreducible& x : xs) out.push_back(x.materialize(m, n).str());
  return out;
}

bigint direct_in_degree_count(int m, int n, int a) {
  bigint total = 0;
  for_each_word(m, n, [&](const MNWord& w) {
    if (word_stats(w).in_degree == a) ++total;
  });
  return total;
}

bigint direct_refined_count(int m, int n, int a, int b) {
  bigint total = 0;
  for_each_word(m, n, [&](const MNWord& w) {
    const WordStats st = word_stats(w);
    if (st.in_degree == a && static_cast<int>(st.support.size()) == b) ++total;
  });
  return total;
}

}  // namespace

TEST_CASE("irreducible catalog") {
  const auto cat23 = irreducible_catalog(2, 3);
  CHECK(materialized(cat23, 2, 3) ==
        std::vector<std::string>{"100", "110", "111", "200", "220", "222", "030", "003"});
  CHECK(cat23[0].name() == "a(1,1)");
  CHECK(cat23[6].name() == "b(2)");

  CHECK(irreducible_catalog(1, 2).size() == 3);
  CHECK(irreducible_catalog(2, 1).size() == 2);
  CHECK(irreducible_catalog(3, 0).empty());
  CHECK(irreducible_catalog(0, 4).size() == 3);

  for (int m = 0; m <= 3; ++m)
    for (int n = 1; n <= 4; ++n)
      CHECK(static_cast<int>(irreducible_catalog(m, n).size()) == (m + 1) * n - 1);

  const Irreducible bad_a{Irreducible::Kind::A, 0, 1};
  const Irreducible bad_b{Irreducible::Kind::B, 1, 0};
  const Irreducible too_long{Irreducible::Kind::A, 4, 1};
  CHECK_THROWS_AS(bad_a.materialize(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(bad_b.materialize(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(too_long.materialize(2, 3), std::invalid_argument);
}

TEST_CASE("canonical join representation formula") {
  const auto cj = canonical_join_rep(MNWord::parse(2, "231"));
  CHECK(materialized(cj, 2, 3) == std::vector<std::string>{"111", "200", "030"});

  const MNWord big = MNWord::validate(6, {4, 7, 4, 3, 3, 7, 7, 2, 0});
  CHECK(materialized(canonical_join_rep(big), 6, 9) ==
        std::vector<std::string>{"222222220", "333330000", "444000000", "070000000",
                                 "000007000", "000000700"});

  CHECK(canonical_join_rep(bottom_word(2, 3)).empty());

  for_each_word(2, 3, [&](const MNWord& w) {
    const auto parts = canonical_join_rep(w);
    CHECK(static_cast<int>(parts.size()) == word_stats(w).in_degree);
    MNWord acc = bottom_word(2, 3);
    for (const Irreducible& x : parts) acc = join(acc, x.materialize(2, 3));
    CHECK(acc == w);
  });
}

TEST_CASE("atom counts") {
  CHECK(atom_count(MNWord::validate(6, {4, 7, 4, 3, 3, 7, 7, 2, 0})) == 3);
  CHECK(atom_count(MNWord::parse(2, "100")) == 1);
  CHECK(atom_count(MNWord::parse(2, "110")) == 0);
  CHECK(atom_count(MNWord::parse(2, "000")) == 0);
  CHECK(atom_count(MNWord::parse(2, "103")) == 2);
}

TEST_CASE("h-triangle by direct enumeration") {
  const HTriangle t = h_triangle(2, 3);
  CHECK(t.coefficient(0, 0) == 1);
  CHECK(t.coefficient(1, 0) == 5);
  CHECK(t.coefficient(1, 1) == 3);
  CHECK(t.coefficient(2, 0) == 3);
  CHECK(t.coefficient(2, 1) == 6);
  CHECK(t.coefficient(2, 2) == 3);
  CHECK(t.coefficient(3, 0) == 0);
  CHECK(t.coefficient(3, 1) == 2);
  CHECK(t.coefficient(3, 2) == 1);
  CHECK(t.coefficient(3, 3) == 1);
  CHECK(t.total() == 25);
  CHECK(t.polynomial() ==
        "1 + 5*x + 3*x*y + 3*x^2 + 6*x^2*y + 3*x^2*y^2 + 2*x^3*y + x^3*y^2 + x^3*y^3");

  const std::string csv = t.csv();
  CHECK(csv.rfind("m,n,a,b,coefficient\n", 0) == 0);
  CHECK(csv.find("2,3,2,1,6\n") != std::string::npos);

  CHECK(h_triangle(3, 0).total() == 1);
  CHECK(h_triangle(0, 4).total() == 8);
}

TEST_CASE("h-triangle closed form") {
  CHECK(h_coefficient_closed_form(2, 3, 1, 0) == 5);
  CHECK(h_coefficient_closed_form(2, 3, 2, 0) == 3);
  CHECK(h_coefficient_closed_form(4, 6, 0, 0) == 1);

  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 4; ++n)
      CHECK(h_triangle_closed_form(m, n).cells == h_triangle(m, n).cells);

  // The b = a case ignores m, which overcounts at m = 0: the closed form
  // gives C(n,a) where the true diagonal is C(n-1,a).
  CHECK(h_coefficient_closed_form(0, 2, 1, 1) == 2);
  CHECK(h_triangle(0, 2).coefficient(1, 1) == 1);
  CHECK(h_coefficient_closed_form(0, 2, 1, 0) == -1);
}

TEST_CASE("refined and in-degree counts") {
  CHECK(refined_count_closed_form(2, 3, 1, 1) == 6);
  CHECK(refined_count_closed_form(3, 4, 0, 0) == 1);
  CHECK(refined_count_closed_form(2, 0, 0, 0) == 1);
  CHECK(in_degree_count(2, 3, 1) == 8);
  CHECK(in_degree_count(2, 0, 0) == 1);
  CHECK(conjectured_in_degree_count(2, 3, 1) == 8);

  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 4; ++n)
      for (int a = 0; a <= n; ++a) {
        CHECK(in_degree_count(m, n, a) == direct_in_degree_count(m, n, a));
        for (int b = 0; b <= a; ++b)
          CHECK(refined_count_closed_form(m, n, a, b) == direct_refined_count(m, n, a, b));
      }
}

TEST_CASE("conjecture scan") {
  const auto scan = scan_in_degree_conjecture(4, 4);
  CHECK(scan.agreed);
  CHECK(scan.checked == 75);
  CHECK(scan.to_json()["agreed"] == true);

  const auto capped = scan_in_degree_conjecture(8, 8, 0);
  CHECK(capped.agreed);
  CHECK(capped.checked == 81);
}

TEST_CASE("galois graph from the letter description") {
  const auto g = galois_graph_direct(2, 3);
  REQUIRE(g.vertices.size() == 8);
  CHECK(g.edges.size() == 16);

  const auto lg = g.as_labeled();
  auto has_edge = [&](const std::string& from, const std::string& to) {
    for (auto [a, b] : lg.edges)
      if (lg.vertices[a] == from && lg.vertices[b] == to) return true;
    return false;
  };
  CHECK(has_edge("030", "110"));
  CHECK(has_edge("030", "220"));
  CHECK(has_edge("003", "111"));
  CHECK(has_edge("003", "222"));
  CHECK(has_edge("222", "200"));
  CHECK(!has_edge("110", "030"));
  CHECK(!has_edge("100", "200"));

  CHECK(galois_graph_direct(0, 3).edges.empty());
  CHECK(galois_graph_direct(2, 1).edges.size() == 1);
  CHECK(g.to_dot().rfind("digraph", 0) == 0);
  CHECK(g.to_json()["edges"].size() == 16);
}

TEST_CASE("doubling pipeline") {
  const auto tr12 = build_by_doubling(1, 2);
  CHECK(tr12.sizes() == std::vector<int>{2, 4, 5});

  const auto tr23 = build_by_doubling(2, 3);
  CHECK(tr23.sizes() == std::vector<int>{3, 6, 7, 9, 18, 20, 25});
  CHECK(tr23.final_poset().size() == 25);
  CHECK(tr23.final_poset().labels() == word_poset(2, 3).labels());
  CHECK(tr23.steps[4].interval_lo == "00");
  CHECK(tr23.steps[4].interval_hi == "23");
  CHECK(tr23.to_text().find("double [110, 230]: 20 -> 25") != std::string::npos);

  CHECK(build_by_doubling(3, 0).sizes() == std::vector<int>{1});
  CHECK(build_by_doubling(3, 1).sizes() == std::vector<int>{4});
  CHECK(build_by_doubling(0, 3).sizes() == std::vector<int>{1, 2, 4});
}

TEST_CASE("induced order on the irreducibles") {
  CHECK(irreducible_poset_shape(1, 2));
  CHECK(irreducible_poset_shape(2, 3));
  CHECK(irreducible_poset_shape(3, 2));
  CHECK(irreducible_poset_shape(0, 4));
  CHECK(irreducible_poset_shape(2, 0));
}

TEST_CASE("longest chain witness") {
  const auto c12 = longest_chain_witness(1, 2);
  std::vector<std::string> got;
  for (const auto& w : c12) got.push_back(w.str());
  CHECK(got == std::vector<std::string>{"00", "10", "11", "12"});

  const auto c23 = longest_chain_witness(2, 3);
  got.clear();
  for (const auto& w : c23) got.push_back(w.str());
  CHECK(got == std::vector<std::string>{"000", "100", "200", "210", "220", "230", "231", "232",
                                        "233"});

  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 4; ++n) {
      const auto chain = longest_chain_witness(m, n);
      const int expected = n == 0 ? 0 : (m + 1) * n - 1;
      CHECK(static_cast<int>(chain.size()) == expected + 1);
      for (size_t i = 1; i < chain.size(); ++i) {
        const auto covers = lower_covers(chain[i]);
        CHECK(std::find(covers.begin(), covers.end(), chain[i - 1]) != covers.end());
      }
    }
  }
}

TEST_CASE("word poset construction") {
  const auto p = word_poset(2, 2);
  CHECK(p.size() == 9);
  CHECK(p.covers().size() == 11);
  CHECK(p.label(0) == "00");
  CHECK(p.label(8) == "23");
}
