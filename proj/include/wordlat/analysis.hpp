#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordlat/poset.hpp"
#include "wordlat/word.hpp"

namespace wordlat {

// The join-irreducibles of W(m,n) come in two families:
//   a(i,j): the letter j repeated i times, then zeros (1 <= i <= n, 1 <= j <= m);
//   b(i):   zeros with a single m+1 at position i (2 <= i <= n).
struct Irreducible {
  enum class Kind { A, B };
  Kind kind = Kind::A;
  int i = 0;
  int j = 0;  // letter for kind A, unused for kind B

  std::string name() const;
  MNWord materialize(int m, int n) const;

  friend bool operator==(const Irreducible&, const Irreducible&) = default;
  friend auto operator<=>(const Irreducible&, const Irreducible&) = default;
};

// All (m+1)n - 1 join-irreducibles for n >= 1 (a-family by letter then
// length, then the b-family); empty for n = 0.
std::vector<Irreducible> irreducible_catalog(int m, int n);

// Canonical joinands of w: a(last occurrence of s, s) for each support letter
// s, plus b(i) for each position i holding m+1.
std::vector<Irreducible> canonical_join_rep(const MNWord& w);

// Number of canonical joinands that are atoms, i.e. b(i) plus a(1,1).
int atom_count(const MNWord& w);

struct HTriangle {
  int m = 0, n = 0;
  // cell (a,b): number of words with in-degree a and atom count b,
  // for 0 <= b <= a <= n.
  std::map<std::pair<int, int>, bigint> cells;

  bigint coefficient(int a, int b) const;
  bigint total() const;
  std::string polynomial() const;  // sum of c * x^a * y^b terms
  std::string csv() const;         // header m,n,a,b,coefficient
  nlohmann::json to_json() const;
};

HTriangle h_triangle(int m, int n);  // by enumeration

// Closed form for one cell:
//   b = a:      C(n, a)
//   b = a - 1:  (mn - ma + m - 1) C(n-1, a-1)
//   b < a - 1:  C(m, a-b) C(n-b, a-b) C(n-1, b)
// Known not to match the enumerated triangle at m = 0 (it is validated
// against h_triangle wherever used).
bigint h_coefficient_closed_form(int m, int n, int a, int b);
HTriangle h_triangle_closed_form(int m, int n);

// Words with in-degree a and support size b: C(m,b) C(n-a+b,b) C(n-1,n-a+b-1)
// for n >= 1; the empty word is counted directly.
bigint refined_count_closed_form(int m, int n, int a, int b);

// Words with in-degree a, as the sum over support sizes.
bigint in_degree_count(int m, int n, int a);

// Product-formula candidate for the same quantity:
// C(m+a,a) C(n,a) - C(m+a-1,m) C(n-1,a-1).
bigint conjectured_in_degree_count(int m, int n, int a);

struct ConjectureScan {
  int max_m = 0, max_n = 0;
  long long checked = 0;
  bool agreed = true;
  int witness_m = -1, witness_n = -1, witness_a = -1;
  bigint lhs, rhs;  // filled at the witness

  nlohmann::json to_json() const;
};

// Compares in_degree_count with conjectured_in_degree_count for all
// 0 <= m <= max_m, 0 <= n <= max_n, 0 <= a <= min(n, max_a); stops at the
// first mismatch.
ConjectureScan scan_in_degree_conjecture(int max_m, int max_n,
                                         std::optional<int> max_a = std::nullopt);

struct GaloisGraph {
  int m = 0, n = 0;
  std::vector<Irreducible> vertices;       // catalog order
  std::vector<std::pair<int, int>> edges;  // indices into vertices, sorted

  LabeledDigraph as_labeled() const;  // vertices become serialized words
  nlohmann::json to_json() const;
  std::string to_dot() const;
};

// Galois graph from the combinatorial description: a(s,t) -> a(s',t') when
// (s,t) != (s',t') and s >= s', t >= t'; b(s) -> a(s,t') for every t'; no
// edges into the b-family.
GaloisGraph galois_graph_direct(int m, int n);

class PipelineMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DoublingStep {
  std::string interval_lo, interval_hi;  // empty on the base step
  int size_before = 0, size_after = 0;
  FinitePoset poset;  // after the step, relabeled to words and sorted
};

struct DoublingTrace {
  int m = 0, n = 0;
  std::vector<DoublingStep> steps;

  const FinitePoset& final_poset() const { return steps.back().poset; }
  std::vector<int> sizes() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Rebuilds W(m,n) from the chain W(m,1) by interval doubling: one full
// doubling per added letter followed by one doubling per slice
// [j...j0, top], j = m down to 1. Every step is checked against the
// componentwise order on the predicted words (PipelineMismatch otherwise)
// and every doubling output is certified a lattice.
DoublingTrace build_by_doubling(int m, int n);

// Induced order on the irreducibles, compared against the disjoint union of
// an m-by-n grid and n-1 isolated points.
bool irreducible_poset_shape(int m, int n);

// An explicit maximum-length chain, bottom first: length (m+1)n - 1 for n >= 1.
std::vector<MNWord> longest_chain_witness(int m, int n);

// W(m,n) as a FinitePoset, elements in lexicographic order, labeled by their
// serialized words.
FinitePoset word_poset(int m, int n);

}  // namespace wordlat
