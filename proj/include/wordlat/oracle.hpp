#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wordlat/poset.hpp"
#include "wordlat/word.hpp"

namespace wordlat::oracle {

// Brute-force reference implementations, deliberately independent of the main
// code paths: enumeration filters raw tuples, bounds and covers come from
// pairwise scans, irreducibles are recomputed from scratch.

// Every valid letter tuple in lexicographic order.
std::vector<std::vector<int>> oracle_enumerate(int m, int n);

// Greatest common lower bound, found by scanning all of W(m,n).
MNWord oracle_meet(const MNWord& u, const MNWord& v);

// Lower covers as letter tuples, lexicographic.
std::vector<std::vector<int>> oracle_covers(const MNWord& v);

// Canonical join representation by exhausting join representations among
// recomputed join-irreducibles and comparing the ideals they generate.
// Throws PosetError(NoCanonicalRep) like the main implementation.
std::vector<int> oracle_canonical_join_rep(const FinitePoset& p, int x);

struct OracleReport {
  std::string subject;
  int m = 0, n = 0;
  bool agreed = true;
  std::string witness;  // nonempty exactly when agreed is false

  nlohmann::json to_json() const;
};

struct SuiteConfig {
  int max_m = 3;
  int max_n = 4;
  // Cap on raw tuples the oracle enumerator scans, across all instances;
  // checking stops before the first instance that would exceed it.
  long long budget = 1'000'000;
  // Seam for fault injection: the meet under test, as raw letters. Defaults
  // to the library meet.
  std::function<std::vector<int>(const MNWord&, const MNWord&)> meet_fn;
};

// Cross-checks counts, meets, covers, canonical join representations, Galois
// graphs, doubling traces, and certificates for every W(m,n) within bounds,
// one report per subject per instance. Instances run in order of increasing
// n, then m, so the first failing report is a minimal witness.
std::vector<OracleReport> run_suite(const SuiteConfig& cfg = {});

std::string to_jsonl(const std::vector<OracleReport>& reports);
bool all_agreed(const std::vector<OracleReport>& reports);

}  // namespace wordlat::oracle
