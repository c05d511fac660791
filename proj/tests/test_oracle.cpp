#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "wordlat/analysis.hpp"
#include "wordlat/oracle.hpp"

using namespace wordlat;

TEST_CASE("oracle enumeration filters raw tuples") {
  const auto raw = oracle::oracle_enumerate(2, 2);
  CHECK(raw.size() == 9);
  CHECK(raw.front() == std::vector<int>{0, 0});
  CHECK(raw.back() == std::vector<int>{2, 3});

  const auto fast = enumerate_words(2, 2);
  REQUIRE(fast.size() == raw.size());
  for (size_t i = 0; i < raw.size(); ++i) CHECK(fast[i].letters() == raw[i]);

  CHECK(oracle::oracle_enumerate(0, 0).size() == 1);
  CHECK(oracle::oracle_enumerate(3, 4).size() == 129);
}

TEST_CASE("oracle meet agrees with the normalized meet") {
  const auto u = MNWord::parse(2, "220");
  const auto v = MNWord::parse(2, "130");
  CHECK(oracle::oracle_meet(u, v).str() == "110");
  CHECK(oracle::oracle_meet(u, v) == meet(u, v));

  for (const auto& a : enumerate_words(2, 3))
    for (const auto& b : enumerate_words(2, 3)) CHECK(oracle::oracle_meet(a, b) == meet(a, b));
}

TEST_CASE("oracle covers agree with the letter-dropping rules") {
  const auto w = MNWord::parse(2, "231");
  const auto oc = oracle::oracle_covers(w);
  REQUIRE(oc.size() == 3);
  CHECK(oc[0] == std::vector<int>{1, 3, 1});
  CHECK(oc[1] == std::vector<int>{2, 2, 1});
  CHECK(oc[2] == std::vector<int>{2, 3, 0});

  for (const auto& v : enumerate_words(1, 3)) {
    const auto expect = oracle::oracle_covers(v);
    const auto got = lower_covers(v);
    REQUIRE(got.size() == expect.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].letters() == expect[i]);
  }
}

TEST_CASE("oracle canonical join representation") {
  const auto p = word_poset(2, 3);
  const int x = *p.index_of("231");
  const auto got = oracle::oracle_canonical_join_rep(p, x);
  std::vector<std::string> labels;
  for (int i : got) labels.push_back(p.label(i));
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::string>{"030", "111", "200"});

  for (int i = 0; i < p.size(); ++i) {
    auto a = oracle::oracle_canonical_join_rep(p, i);
    auto b = canonical_join_rep_generic(p, i);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("suite passes on the library implementations") {
  oracle::SuiteConfig cfg;
  cfg.max_m = 2;
  cfg.max_n = 3;
  const auto reports = oracle::run_suite(cfg);
  CHECK(oracle::all_agreed(reports));
  CHECK(reports.size() == 84);  // 7 subjects x 12 instances

  const std::string jsonl = oracle::to_jsonl(reports);
  CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 84);
  CHECK(jsonl.find("\"agreed\":false") == std::string::npos);

  for (const auto& r : reports) {
    CHECK(r.agreed);
    CHECK(r.witness.empty());
    CHECK(r.to_json()["subject"] == r.subject);
  }
}

TEST_CASE("suite instances run smallest first") {
  oracle::SuiteConfig cfg;
  cfg.max_m = 1;
  cfg.max_n = 2;
  const auto reports = oracle::run_suite(cfg);
  REQUIRE(!reports.empty());
  CHECK(reports.front().m == 0);
  CHECK(reports.front().n == 0);
  for (size_t i = 1; i < reports.size(); ++i) {
    const auto& a = reports[i - 1];
    const auto& b = reports[i];
    CHECK(std::pair(a.n, a.m) <= std::pair(b.n, b.m));
  }
}

TEST_CASE("budget skips oversized instances") {
  oracle::SuiteConfig cfg;
  cfg.max_m = 3;
  cfg.max_n = 4;
  cfg.budget = 100;
  const auto reports = oracle::run_suite(cfg);
  CHECK(oracle::all_agreed(reports));
  CHECK(reports.size() < 140);
}

TEST_CASE("a broken meet is caught with a minimal witness") {
  oracle::SuiteConfig cfg;
  cfg.max_m = 2;
  cfg.max_n = 3;
  cfg.meet_fn = [](const MNWord& a, const MNWord& b) {
    std::vector<int> out(a.n());
    for (int i = 0; i < a.n(); ++i) out[i] = std::min(a.letters()[i], b.letters()[i]);
    return out;
  };
  const auto reports = oracle::run_suite(cfg);
  CHECK(!oracle::all_agreed(reports));

  const auto bad = std::find_if(reports.begin(), reports.end(),
                                [](const oracle::OracleReport& r) { return !r.agreed; });
  REQUIRE(bad != reports.end());
  CHECK(bad->subject == "meet");
  CHECK(bad->m == 1);
  CHECK(bad->n == 2);
  CHECK(!bad->witness.empty());
  CHECK(bad->witness.find("02") != std::string::npos);
}
