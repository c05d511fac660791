#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

namespace wordlat {

class PosetError : public std::runtime_error {
 public:
  enum class Kind {
    NotAPartialOrder,
    NotALattice,
    NoCanonicalRep,
    NotAnInterval,
    PreconditionUnverified,
  };

  PosetError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Fixed-width bit vector sized at construction.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  Bitset& operator&=(const Bitset& o);
  Bitset& operator|=(const Bitset& o);
  bool subset_of(const Bitset& o) const;
  bool intersects(const Bitset& o) const;
  int count() const;
  bool any() const;

  // Calls fn on every set index in ascending order.
  void for_each(const std::function<void(int)>& fn) const;
  std::vector<int> to_vector() const;

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Finite poset over uniquely labeled elements. Construction verifies the
// order axioms and stores the full reachability relation plus the cover
// relation (its transitive reduction).
class FinitePoset {
 public:
  // leq is consulted on index pairs; throws PosetError(NotAPartialOrder) with
  // a witness when it is not reflexive, antisymmetric, and transitive.
  static FinitePoset from_leq(std::vector<std::string> labels,
                              const std::function<bool(int, int)>& leq);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  std::optional<int> index_of(std::string_view label) const;

  bool leq(int a, int b) const { return up_[a].test(b); }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int i) const { return upadj_[i]; }
  const std::vector<int>& lower_covers(int i) const { return downadj_[i]; }
  const Bitset& up_set(int i) const { return up_[i]; }      // includes i
  const Bitset& down_set(int i) const { return down_[i]; }  // includes i

  FinitePoset dual() const;
  FinitePoset relabeled(std::vector<std::string> labels) const;

 private:
  FinitePoset() = default;
  void finish(std::vector<Bitset> up);

  std::vector<std::string> labels_;
  std::vector<Bitset> up_, down_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> upadj_, downadj_;
  std::unordered_map<std::string, int> index_;
};

struct LatticeCertificate {
  int size = 0;
  bool is_lattice = false;
  std::string lattice_witness;  // nonempty iff is_lattice is false
  int length = 0;
  int join_irreducible_count = 0;
  int meet_irreducible_count = 0;
  bool is_extremal = false;
  bool is_join_semidistributive = false;
  bool is_meet_semidistributive = false;
  std::string jsd_witness, msd_witness;  // offending element, if any
  bool has_left_modular_chain = false;
  std::vector<std::string> left_modular_chain;  // maximal chain, bottom first
  bool is_trim = false;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Least upper / greatest lower bound of two elements; throws
// PosetError(NotALattice) with the offending pair when absent.
int join_of(const FinitePoset& p, int a, int b);
int meet_of(const FinitePoset& p, int a, int b);

// Length of the longest chain.
int length_of(const FinitePoset& p);

// Elements with exactly one lower (resp. upper) cover, ascending.
std::vector<int> join_irreducibles(const FinitePoset& p);
std::vector<int> meet_irreducibles(const FinitePoset& p);

// Canonical join representation of x: among all sets of join-irreducibles
// joining to x, the unique one generating the inclusion-minimal order ideal.
// Returns its elements (an antichain), ascending. Throws
// PosetError(NoCanonicalRep) naming x when the minimal ideal is not unique.
std::vector<int> canonical_join_rep_generic(const FinitePoset& p, int x);

// True iff every element admits a canonical join (resp. meet) representation;
// the witness is an element without one.
std::pair<bool, std::optional<int>> is_join_semidistributive(const FinitePoset& p);
std::pair<bool, std::optional<int>> is_meet_semidistributive(const FinitePoset& p);

// x is left-modular when (p v x) ^ q == p v (x ^ q) for every p < q.
bool is_left_modular(const FinitePoset& p, int x);

// A maximal-length chain consisting of left-modular elements, bottom first,
// or nullopt when none exists.
std::optional<std::vector<int>> find_left_modular_chain(const FinitePoset& p);

LatticeCertificate certify(const FinitePoset& p);

// Day doubling of the interval [lo, hi]: the ideal below hi keeps layer 1,
// everything else moves to layer 2, and the interval itself appears in both
// layers; layers are ordered by the product order. Labels become
// "(label,1)" / "(label,2)". The result is verified to be a lattice.
FinitePoset double_by_interval(const FinitePoset& p, int lo, int hi);

struct DoubledPoset {
  FinitePoset poset;
  std::vector<std::pair<int, int>> origin;  // (index in the input, layer 1 or 2)
};
DoubledPoset double_by_interval_traced(const FinitePoset& p, int lo, int hi);

// Union of the down-sets of xs, ascending.
std::vector<int> ideal_below(const FinitePoset& p, const std::vector<int>& xs);

struct LabeledDigraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;  // indices into vertices

  nlohmann::json to_json() const;
  std::string to_dot() const;
  friend bool operator==(const LabeledDigraph&, const LabeledDigraph&) = default;
};

// Galois graph of an extremal lattice: vertices are the join-irreducibles,
// with an edge j -> j' whenever j != j' and j' <= j'_* v j, where j'_* is the
// unique lower cover of j'. The caller vouches for the hypotheses by passing
// the certificate produced by certify(p); a certificate that does not match p
// or lacks the lattice/extremal flags throws PreconditionUnverified.
LabeledDigraph galois_graph_generic(const FinitePoset& p, const LatticeCertificate& cert);

// Cover-preserving bijection between p and q, as a map from p-indices to
// q-indices, or nullopt.
std::optional<std::vector<int>> are_isomorphic(const FinitePoset& p, const FinitePoset& q);

FinitePoset chain_poset(int k);  // k elements labeled "0" .. "k-1"
FinitePoset boolean_lattice(int k);
FinitePoset product_poset(const FinitePoset& a, const FinitePoset& b);
FinitePoset disjoint_union(const FinitePoset& a, const FinitePoset& b);

std::string to_dot(const FinitePoset& p);
nlohmann::json to_json(const FinitePoset& p);

}  // namespace wordlat
