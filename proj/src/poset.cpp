#include "wordlat/poset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace wordlat {

Bitset& Bitset::operator&=(const Bitset& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

bool Bitset::subset_of(const Bitset& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

bool Bitset::intersects(const Bitset& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

int Bitset::count() const {
  int c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

bool Bitset::any() const {
  for (auto w : w_)
    if (w) return true;
  return false;
}

void Bitset::for_each(const std::function<void(int)>& fn) const {
  for (size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t w = w_[i];
    while (w) {
      fn(static_cast<int>(i * 64) + std::countr_zero(w));
      w &= w - 1;
    }
  }
}

std::vector<int> Bitset::to_vector() const {
  std::vector<int> out;
  for_each([&](int i) { out.push_back(i); });
  return out;
}

// ---- FinitePoset

FinitePoset FinitePoset::from_leq(std::vector<std::string> labels,
                                  const std::function<bool(int, int)>& leq) {
  FinitePoset p;
  const int n = static_cast<int>(labels.size());
  p.labels_ = std::move(labels);

  std::vector<Bitset> up(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq(a, b)) up[a].set(b);

  for (int a = 0; a < n; ++a)
    if (!up[a].test(a))
      throw PosetError(PosetError::Kind::NotAPartialOrder,
                       "relation not reflexive at '" + p.labels_[a] + "'");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (up[a].test(b) && up[b].test(a))
        throw PosetError(PosetError::Kind::NotAPartialOrder,
                         "relation not antisymmetric on '" + p.labels_[a] + "', '" +
                             p.labels_[b] + "'");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !up[a].test(b) || up[b].subset_of(up[a])) continue;
      for (int c = 0; c < n; ++c)
        if (up[b].test(c) && !up[a].test(c))
          throw PosetError(PosetError::Kind::NotAPartialOrder,
                           "relation not transitive: '" + p.labels_[a] + "' <= '" +
                               p.labels_[b] + "' <= '" + p.labels_[c] + "'");
    }
  }

  p.finish(std::move(up));
  return p;
}

void FinitePoset::finish(std::vector<Bitset> up) {
  const int n = static_cast<int>(labels_.size());
  up_ = std::move(up);
  down_.assign(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    up_[a].for_each([&](int b) { down_[b].set(a); });

  covers_.clear();
  upadj_.assign(n, {});
  downadj_.assign(n, {});
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !up_[a].test(b)) continue;
      Bitset between = up_[a];
      between &= down_[b];
      if (between.count() == 2) {
        covers_.emplace_back(a, b);
        upadj_[a].push_back(b);
        downadj_[b].push_back(a);
      }
    }
  }

  index_.clear();
  for (int i = 0; i < n; ++i)
    if (!index_.emplace(labels_[i], i).second)
      throw std::invalid_argument("duplicate element label '" + labels_[i] + "'");
}

std::optional<int> FinitePoset::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  return it == index_.end() ? std::nullopt : std::optional<int>(it->second);
}

FinitePoset FinitePoset::dual() const {
  FinitePoset q;
  q.labels_ = labels_;
  q.finish(down_);
  return q;
}

FinitePoset FinitePoset::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != labels_.size())
    throw std::invalid_argument("relabeled: label count mismatch");
  FinitePoset q = *this;
  q.labels_ = std::move(labels);
  q.index_.clear();
  for (int i = 0; i < q.size(); ++i)
    if (!q.index_.emplace(q.labels_[i], i).second)
      throw std::invalid_argument("duplicate element label '" + q.labels_[i] + "'");
  return q;
}

// ---- basic lattice operations

namespace {

std::vector<int> height_topo_order(const FinitePoset& p) {
  std::vector<int> ord(p.size());
  std::iota(ord.begin(), ord.end(), 0);
  std::vector<int> weight(p.size());
  for (int i = 0; i < p.size(); ++i) weight[i] = p.down_set(i).count();
  std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) { return weight[a] < weight[b]; });
  return ord;
}

[[noreturn]] void throw_bound_failure(const FinitePoset& p, int a, int b, const Bitset& bounds,
                                      bool upper) {
  const char* what = upper ? "join" : "meet";
  if (!bounds.any())
    throw PosetError(PosetError::Kind::NotALattice, std::string(what) + " of '" + p.label(a) +
                                                        "' and '" + p.label(b) +
                                                        "' does not exist: no common bound");
  std::string extremes;
  bounds.for_each([&](int u) {
    Bitset side = upper ? p.down_set(u) : p.up_set(u);
    side &= bounds;
    if (side.count() == 1) extremes += (extremes.empty() ? "'" : ", '") + p.label(u) + "'";
  });
  throw PosetError(PosetError::Kind::NotALattice, std::string(what) + " of '" + p.label(a) +
                                                      "' and '" + p.label(b) +
                                                      "' is not unique: candidates " + extremes);
}

}  // namespace

int join_of(const FinitePoset& p, int a, int b) {
  Bitset ub = p.up_set(a);
  ub &= p.up_set(b);
  for (int u = 0; u < p.size(); ++u)
    if (ub.test(u) && ub.subset_of(p.up_set(u))) return u;
  throw_bound_failure(p, a, b, ub, true);
}

int meet_of(const FinitePoset& p, int a, int b) {
  Bitset lb = p.down_set(a);
  lb &= p.down_set(b);
  for (int u = p.size() - 1; u >= 0; --u)
    if (lb.test(u) && lb.subset_of(p.down_set(u))) return u;
  throw_bound_failure(p, a, b, lb, false);
}

int length_of(const FinitePoset& p) {
  std::vector<int> height(p.size(), 0);
  int best = 0;
  for (int i : height_topo_order(p)) {
    for (int u : p.upper_covers(i)) height[u] = std::max(height[u], height[i] + 1);
    best = std::max(best, height[i]);
  }
  return best;
}

std::vector<int> join_irreducibles(const FinitePoset& p) {
  std::vector<int> out;
  for (int i = 0; i < p.size(); ++i)
    if (p.lower_covers(i).size() == 1) out.push_back(i);
  return out;
}

std::vector<int> meet_irreducibles(const FinitePoset& p) {
  std::vector<int> out;
  for (int i = 0; i < p.size(); ++i)
    if (p.upper_covers(i).size() == 1) out.push_back(i);
  return out;
}

// ---- canonical join representations

namespace {

struct LatticeTables {
  std::vector<std::vector<int>> join, meet;
  int bottom = -1, top = -1;
};

LatticeTables build_tables(const FinitePoset& p) {
  const int n = p.size();
  if (n == 0) throw PosetError(PosetError::Kind::NotALattice, "empty poset");
  LatticeTables t;
  t.join.assign(n, std::vector<int>(n));
  t.meet.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    t.join[a][a] = t.meet[a][a] = a;
    for (int b = a + 1; b < n; ++b) {
      t.join[a][b] = t.join[b][a] = join_of(p, a, b);
      t.meet[a][b] = t.meet[b][a] = meet_of(p, a, b);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (p.down_set(i).count() == 1) t.bottom = i;
    if (p.up_set(i).count() == 1) t.top = i;
  }
  return t;
}

std::vector<int> cj_with(const FinitePoset& p, const LatticeTables& t,
                         const std::vector<int>& jirr, int x) {
  std::vector<int> below;
  for (int j : jirr)
    if (p.leq(j, x)) below.push_back(j);
  if (below.size() > 24)
    throw std::invalid_argument("canonical join search too large at '" + p.label(x) + "'");

  const int k = static_cast<int>(below.size());
  std::vector<Bitset> minimal;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    int acc = t.bottom;
    for (int b = 0; b < k; ++b)
      if (mask >> b & 1) acc = t.join[acc][below[b]];
    if (acc != x) continue;
    Bitset ideal(p.size());
    for (int b = 0; b < k; ++b)
      if (mask >> b & 1) ideal |= p.down_set(below[b]);
    bool dominated = false;
    for (const Bitset& seen : minimal)
      if (seen.subset_of(ideal)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    std::erase_if(minimal, [&](const Bitset& seen) { return ideal.subset_of(seen); });
    minimal.push_back(ideal);
  }

  if (minimal.empty())
    throw PosetError(PosetError::Kind::NoCanonicalRep,
                     "'" + p.label(x) + "' is not a join of join-irreducibles");
  if (minimal.size() > 1)
    throw PosetError(PosetError::Kind::NoCanonicalRep,
                     "'" + p.label(x) + "' admits " + std::to_string(minimal.size()) +
                         " minimal representation ideals");

  std::vector<int> out;
  const Bitset& ideal = minimal.front();
  ideal.for_each([&](int e) {
    Bitset above = p.up_set(e);
    above &= ideal;
    if (above.count() == 1) out.push_back(e);
  });
  return out;
}

}  // namespace

std::vector<int> canonical_join_rep_generic(const FinitePoset& p, int x) {
  LatticeTables t = build_tables(p);
  return cj_with(p, t, join_irreducibles(p), x);
}

std::pair<bool, std::optional<int>> is_join_semidistributive(const FinitePoset& p) {
  LatticeTables t = build_tables(p);
  std::vector<int> jirr = join_irreducibles(p);
  for (int x = 0; x < p.size(); ++x) {
    try {
      cj_with(p, t, jirr, x);
    } catch (const PosetError& e) {
      if (e.kind() == PosetError::Kind::NoCanonicalRep) return {false, x};
      throw;
    }
  }
  return {true, std::nullopt};
}

std::pair<bool, std::optional<int>> is_meet_semidistributive(const FinitePoset& p) {
  return is_join_semidistributive(p.dual());
}

// ---- left-modularity

namespace {

bool lm_with(const FinitePoset& p, const LatticeTables& t, int x) {
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      if (a == b || !p.leq(a, b)) continue;
      if (t.meet[t.join[a][x]][b] != t.join[a][t.meet[x][b]]) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> lm_chain_with(const FinitePoset& p, const LatticeTables& t) {
  const int n = p.size();
  std::vector<bool> lm(n);
  for (int x = 0; x < n; ++x) lm[x] = lm_with(p, t, x);

  std::vector<int> len(n, 0), parent(n, -1);
  int best = -1, best_len = 0;
  for (int i : height_topo_order(p)) {
    if (!lm[i]) continue;
    if (len[i] == 0) len[i] = 1;
    for (int u : p.upper_covers(i)) {
      if (!lm[u]) continue;
      if (len[i] + 1 > len[u]) {
        len[u] = len[i] + 1;
        parent[u] = i;
      }
    }
    if (len[i] > best_len) {
      best_len = len[i];
      best = i;
    }
  }
  if (best_len != length_of(p) + 1) return std::nullopt;
  std::vector<int> chain;
  for (int v = best; v != -1; v = parent[v]) chain.push_back(v);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

bool is_left_modular(const FinitePoset& p, int x) {
  return lm_with(p, build_tables(p), x);
}

std::optional<std::vector<int>> find_left_modular_chain(const FinitePoset& p) {
  return lm_chain_with(p, build_tables(p));
}

// ---- certification

LatticeCertificate certify(const FinitePoset& p) {
  LatticeCertificate c;
  c.size = p.size();
  c.length = length_of(p);
  c.join_irreducible_count = static_cast<int>(join_irreducibles(p).size());
  c.meet_irreducible_count = static_cast<int>(meet_irreducibles(p).size());

  LatticeTables t;
  try {
    t = build_tables(p);
  } catch (const PosetError& e) {
    c.lattice_witness = e.what();
    return c;
  }
  c.is_lattice = true;
  c.is_extremal =
      c.join_irreducible_count == c.length && c.meet_irreducible_count == c.length;

  auto [jsd, jw] = is_join_semidistributive(p);
  c.is_join_semidistributive = jsd;
  if (jw) c.jsd_witness = p.label(*jw);
  auto [msd, mw] = is_meet_semidistributive(p);
  c.is_meet_semidistributive = msd;
  if (mw) c.msd_witness = p.label(*mw);

  if (auto chain = lm_chain_with(p, t)) {
    c.has_left_modular_chain = true;
    for (int i : *chain) c.left_modular_chain.push_back(p.label(i));
  }
  c.is_trim = c.is_extremal && c.has_left_modular_chain;
  return c;
}

nlohmann::json LatticeCertificate::to_json() const {
  nlohmann::json j{{"size", size},
                   {"lattice", is_lattice},
                   {"length", length},
                   {"join_irreducibles", join_irreducible_count},
                   {"meet_irreducibles", meet_irreducible_count},
                   {"extremal", is_extremal},
                   {"join_semidistributive", is_join_semidistributive},
                   {"meet_semidistributive", is_meet_semidistributive},
                   {"left_modular_chain", left_modular_chain},
                   {"trim", is_trim}};
  if (!is_lattice) j["lattice_witness"] = lattice_witness;
  if (!jsd_witness.empty()) j["jsd_witness"] = jsd_witness;
  if (!msd_witness.empty()) j["msd_witness"] = msd_witness;
  return j;
}

std::string LatticeCertificate::to_text() const {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "size: " << size << "\n";
  os << "lattice: " << yn(is_lattice);
  if (!is_lattice) os << " (" << lattice_witness << ")";
  os << "\n";
  os << "length: " << length << "\n";
  os << "join_irreducibles: " << join_irreducible_count << "\n";
  os << "meet_irreducibles: " << meet_irreducible_count << "\n";
  os << "extremal: " << yn(is_extremal) << "\n";
  os << "join_semidistributive: " << yn(is_join_semidistributive);
  if (!jsd_witness.empty()) os << " (witness '" << jsd_witness << "')";
  os << "\n";
  os << "meet_semidistributive: " << yn(is_meet_semidistributive);
  if (!msd_witness.empty()) os << " (witness '" << msd_witness << "')";
  os << "\n";
  os << "left_modular_chain:";
  if (has_left_modular_chain)
    for (const auto& l : left_modular_chain) os << " " << l;
  else
    os << " none";
  os << "\n";
  os << "trim: " << yn(is_trim) << "\n";
  return os.str();
}

// ---- interval doubling

DoubledPoset double_by_interval_traced(const FinitePoset& p, int lo, int hi) {
  if (lo < 0 || hi < 0 || lo >= p.size() || hi >= p.size())
    throw std::invalid_argument("interval endpoint out of range");
  if (!p.leq(lo, hi))
    throw PosetError(PosetError::Kind::NotAnInterval,
                     "'" + p.label(lo) + "' is not below '" + p.label(hi) + "'");

  Bitset interval = p.up_set(lo);
  interval &= p.down_set(hi);
  const Bitset& ideal = p.down_set(hi);

  std::vector<std::pair<int, int>> origin;
  for (int i = 0; i < p.size(); ++i)
    if (ideal.test(i)) origin.emplace_back(i, 1);
  for (int i = 0; i < p.size(); ++i)
    if (!ideal.test(i) || interval.test(i)) origin.emplace_back(i, 2);

  std::vector<std::string> labels;
  labels.reserve(origin.size());
  for (auto [i, layer] : origin)
    labels.push_back("(" + p.label(i) + "," + std::to_string(layer) + ")");

  DoubledPoset d{FinitePoset::from_leq(std::move(labels),
                                       [&](int a, int b) {
                                         return origin[a].second <= origin[b].second &&
                                                p.leq(origin[a].first, origin[b].first);
                                       }),
                 std::move(origin)};
  build_tables(d.poset);
  return d;
}

FinitePoset double_by_interval(const FinitePoset& p, int lo, int hi) {
  return double_by_interval_traced(p, lo, hi).poset;
}

std::vector<int> ideal_below(const FinitePoset& p, const std::vector<int>& xs) {
  Bitset acc(p.size());
  for (int x : xs) acc |= p.down_set(x);
  return acc.to_vector();
}

// ---- Galois graph

LabeledDigraph galois_graph_generic(const FinitePoset& p, const LatticeCertificate& cert) {
  if (!cert.is_lattice || !cert.is_extremal)
    throw PosetError(PosetError::Kind::PreconditionUnverified,
                     "certificate does not attest an extremal lattice");
  std::vector<int> jirr = join_irreducibles(p);
  if (cert.size != p.size() || cert.length != length_of(p) ||
      cert.join_irreducible_count != static_cast<int>(jirr.size()) ||
      cert.meet_irreducible_count != static_cast<int>(meet_irreducibles(p).size()))
    throw PosetError(PosetError::Kind::PreconditionUnverified,
                     "certificate does not match the poset");

  LabeledDigraph g;
  std::vector<int> vid(p.size(), -1);
  for (int j : jirr) {
    vid[j] = static_cast<int>(g.vertices.size());
    g.vertices.push_back(p.label(j));
  }
  for (int j : jirr) {
    for (int j2 : jirr) {
      if (j == j2) continue;
      const int star = p.lower_covers(j2).front();
      if (p.leq(j2, join_of(p, star, j))) g.edges.emplace_back(vid[j], vid[j2]);
    }
  }
  return g;
}

nlohmann::json LabeledDigraph::to_json() const {
  nlohmann::json e = nlohmann::json::array();
  for (auto [a, b] : edges) e.push_back({a, b});
  return nlohmann::json{{"vertices", vertices}, {"edges", e}};
}

// ---- isomorphism

namespace {

std::vector<std::vector<int>> refine_colors(const FinitePoset& p, const FinitePoset& q) {
  const int np = p.size(), nq = q.size();
  std::vector<int> cp(np), cq(nq);

  std::map<std::array<int, 4>, int> palette0;
  auto seed = [&](const FinitePoset& r, int i) {
    std::array<int, 4> key{static_cast<int>(r.lower_covers(i).size()),
                           static_cast<int>(r.upper_covers(i).size()), r.down_set(i).count(),
                           r.up_set(i).count()};
    return palette0.try_emplace(key, static_cast<int>(palette0.size())).first->second;
  };
  for (int i = 0; i < np; ++i) cp[i] = seed(p, i);
  for (int i = 0; i < nq; ++i) cq[i] = seed(q, i);

  for (int round = 0; round < np + 1; ++round) {
    std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> palette;
    auto next = [&](const FinitePoset& r, const std::vector<int>& col, int i) {
      std::vector<int> lo, hi;
      for (int v : r.lower_covers(i)) lo.push_back(col[v]);
      for (int v : r.upper_covers(i)) hi.push_back(col[v]);
      std::sort(lo.begin(), lo.end());
      std::sort(hi.begin(), hi.end());
      auto key = std::make_tuple(col[i], std::move(lo), std::move(hi));
      return palette.try_emplace(std::move(key), static_cast<int>(palette.size())).first->second;
    };
    std::vector<int> np_col(np), nq_col(nq);
    for (int i = 0; i < np; ++i) np_col[i] = next(p, cp, i);
    for (int i = 0; i < nq; ++i) nq_col[i] = next(q, cq, i);
    bool stable = np_col == cp && nq_col == cq;
    cp = std::move(np_col);
    cq = std::move(nq_col);
    if (stable) break;
  }
  return {cp, cq};
}

struct IsoSearch {
  const FinitePoset& p;
  const FinitePoset& q;
  std::vector<int> cp, cq;
  std::vector<std::vector<int>> q_by_color;
  std::vector<int> order, map_pq, map_qp;

  bool compatible(int u, int v) const {
    for (int lc : p.lower_covers(u)) {
      int w = map_pq[lc];
      if (w != -1 && !is_cover(q, w, v)) return false;
    }
    for (int uc : p.upper_covers(u)) {
      int w = map_pq[uc];
      if (w != -1 && !is_cover(q, v, w)) return false;
    }
    for (int lc : q.lower_covers(v)) {
      int w = map_qp[lc];
      if (w != -1 && !is_cover(p, w, u)) return false;
    }
    for (int uc : q.upper_covers(v)) {
      int w = map_qp[uc];
      if (w != -1 && !is_cover(p, u, w)) return false;
    }
    return true;
  }

  static bool is_cover(const FinitePoset& r, int a, int b) {
    const auto& ups = r.upper_covers(a);
    return std::find(ups.begin(), ups.end(), b) != ups.end();
  }

  bool run(size_t depth) {
    if (depth == order.size()) return true;
    const int u = order[depth];
    for (int v : q_by_color[cp[u]]) {
      if (map_qp[v] != -1 || cq[v] != cp[u]) continue;
      if (!compatible(u, v)) continue;
      map_pq[u] = v;
      map_qp[v] = u;
      if (run(depth + 1)) return true;
      map_pq[u] = -1;
      map_qp[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return std::nullopt;
  if (p.size() == 0) return std::vector<int>{};

  auto colors = refine_colors(p, q);
  IsoSearch s{p, q, std::move(colors[0]), std::move(colors[1]), {}, {}, {}, {}};

  int ncolors = 0;
  for (int c : s.cp) ncolors = std::max(ncolors, c + 1);
  for (int c : s.cq) ncolors = std::max(ncolors, c + 1);
  std::vector<int> hist_p(ncolors, 0), hist_q(ncolors, 0);
  for (int c : s.cp) ++hist_p[c];
  for (int c : s.cq) ++hist_q[c];
  if (hist_p != hist_q) return std::nullopt;

  s.q_by_color.assign(ncolors, {});
  for (int v = 0; v < q.size(); ++v) s.q_by_color[s.cq[v]].push_back(v);

  s.order.resize(p.size());
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](int a, int b) { return hist_p[s.cp[a]] < hist_p[s.cp[b]]; });

  s.map_pq.assign(p.size(), -1);
  s.map_qp.assign(q.size(), -1);
  if (!s.run(0)) return std::nullopt;

  for (auto [a, b] : p.covers())
    if (!IsoSearch::is_cover(q, s.map_pq[a], s.map_pq[b])) return std::nullopt;
  return s.map_pq;
}

// ---- small constructions

FinitePoset chain_poset(int k) {
  if (k < 0) throw std::invalid_argument("chain_poset: negative size");
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  return FinitePoset::from_leq(std::move(labels), [](int a, int b) { return a <= b; });
}

FinitePoset boolean_lattice(int k) {
  if (k < 0 || k > 16) throw std::invalid_argument("boolean_lattice: size out of range");
  std::vector<std::string> labels;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::string l(k, '0');
    for (int b = 0; b < k; ++b)
      if (mask >> b & 1) l[b] = '1';
    labels.push_back(k == 0 ? "()" : l);
  }
  return FinitePoset::from_leq(std::move(labels), [](int a, int b) { return (a & b) == a; });
}

FinitePoset product_poset(const FinitePoset& a, const FinitePoset& b) {
  std::vector<std::string> labels;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  const int nb = b.size();
  return FinitePoset::from_leq(std::move(labels), [&a, &b, nb](int x, int y) {
    return a.leq(x / nb, y / nb) && b.leq(x % nb, y % nb);
  });
}

FinitePoset disjoint_union(const FinitePoset& a, const FinitePoset& b) {
  std::vector<std::string> labels;
  for (int i = 0; i < a.size(); ++i) labels.push_back("0:" + a.label(i));
  for (int i = 0; i < b.size(); ++i) labels.push_back("1:" + b.label(i));
  const int na = a.size();
  return FinitePoset::from_leq(std::move(labels), [&a, &b, na](int x, int y) {
    if ((x < na) != (y < na)) return false;
    return x < na ? a.leq(x, y) : b.leq(x - na, y - na);
  });
}

// ---- rendering

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const FinitePoset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i) os << "  " << dot_quote(p.label(i)) << ";\n";
  for (auto [a, b] : p.covers())
    os << "  " << dot_quote(p.label(a)) << " -> " << dot_quote(p.label(b)) << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const FinitePoset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (auto [a, b] : p.covers()) covers.push_back({a, b});
  return nlohmann::json{{"elements", p.labels()}, {"covers", covers}};
}

std::string LabeledDigraph::to_dot() const {
  std::ostringstream os;
  os << "digraph galois {\n";
  for (const auto& v : vertices) os << "  " << dot_quote(v) << ";\n";
  for (auto [a, b] : edges)
    os << "  " << dot_quote(vertices[a]) << " -> " << dot_quote(vertices[b]) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace wordlat
