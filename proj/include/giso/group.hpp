#pragma once

#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "giso/bigint.hpp"
#include "giso/error.hpp"
#include "giso/perm.hpp"

namespace giso {

/// Stabilizer chain (BSGS): base points x_1,... with transversals C_i of
/// G_i/G_{i+1}, where G_i fixes x_1..x_i pointwise. Built with the
/// deterministic Schreier-Sims procedure. The base starts with the caller's
/// `base_hint` points (all of them, even redundant ones, so pointwise
/// stabilizers of the hint can be read off the chain tail) and is extended
/// by smallest moved point.
class StabilizerChain {
 public:
  struct Level {
    Point base_point;
    std::vector<Perm> gens;             // generators introduced at this level
    std::map<Point, Perm> transversal;  // image of base_point -> coset rep
  };

  StabilizerChain(int degree, const std::vector<Perm>& generators,
                  const std::vector<Point>& base_hint = {})
      : degree_(degree) {
    for (Point p : base_hint) {
      if (p < 0 || p >= degree) throw usage_error("StabilizerChain: hint point out of range");
      Level lev;
      lev.base_point = p;
      lev.transversal.emplace(p, Perm::identity(degree));
      levels_.push_back(std::move(lev));
    }
    for (const Perm& g : generators) {
      if (g.degree() != degree) throw usage_error("StabilizerChain: generator degree mismatch");
      insert_generator(g);
    }
    if (levels_.empty() && degree_ > 0) {
      // trivial group: no levels needed
    }
  }

  int degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }

  BigInt order() const {
    BigInt o = 1;
    for (const Level& lev : levels_) o *= static_cast<long>(lev.transversal.size());
    return o;
  }

  /// Sifts g; returns (level reached, residue). Member iff residue = id.
  std::pair<std::size_t, Perm> sift(const Perm& g) const {
    Perm r = g;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      if (r.is_identity()) return {i, r};
      Point t = r[levels_[i].base_point];
      auto it = levels_[i].transversal.find(t);
      if (it == levels_[i].transversal.end()) return {i, r};
      r = r * it->second.inverse();
    }
    return {levels_.size(), r};
  }

  bool contains(const Perm& g) const {
    if (g.degree() != degree_) throw usage_error("StabilizerChain: degree mismatch in membership test");
    return sift(g).second.is_identity();
  }

  /// Generators of the pointwise stabilizer of the first `prefix` base
  /// points (which must have been passed as base_hint).
  std::vector<Perm> tail_generators(std::size_t prefix) const {
    std::vector<Perm> out;
    for (std::size_t i = prefix; i < levels_.size(); ++i)
      for (const Perm& g : levels_[i].gens) out.push_back(g);
    return out;
  }

  /// All strong generators (union of transversal reps); at most degree^2
  /// many and they generate the group.
  std::vector<Perm> strong_generators() const {
    std::vector<Perm> out;
    for (const Level& lev : levels_)
      for (const auto& [pt, rep] : lev.transversal)
        if (!rep.is_identity()) out.push_back(rep);
    return out;
  }

  /// Enumerates all elements in deterministic order; throws if the order
  /// exceeds `limit`.
  std::vector<Perm> enumerate(const BigInt& limit) const {
    if (order() > limit) throw usage_error("StabilizerChain: enumeration over limit");
    std::vector<Perm> out{Perm::identity(degree_)};
    // elements are products u_{L-1} * ... * u_0 of transversal reps
    for (std::size_t i = levels_.size(); i-- > 0;) {
      std::vector<Perm> next;
      next.reserve(out.size() * levels_[i].transversal.size());
      for (const Perm& prefix : out)
        for (const auto& [pt, rep] : levels_[i].transversal)
          next.push_back(prefix * rep);
      out = std::move(next);
    }
    return out;
  }

 private:
  void insert_generator(const Perm& g) {
    auto [lev, r] = sift(g);
    if (r.is_identity()) return;
    if (lev == levels_.size()) new_level(first_moved(r));
    levels_[lev].gens.push_back(r);
    for (std::size_t j = lev + 1; j-- > 0;) update(j);
  }

  Point first_moved(const Perm& g) const {
    for (Point p = 0; p < degree_; ++p)
      if (g[p] != p) return p;
    throw usage_error("StabilizerChain: identity has no moved point");
  }

  void new_level(Point base) {
    Level lev;
    lev.base_point = base;
    lev.transversal.emplace(base, Perm::identity(degree_));
    levels_.push_back(std::move(lev));
  }

  std::vector<Perm> gens_from(std::size_t i) const {
    std::vector<Perm> out;
    for (std::size_t j = i; j < levels_.size(); ++j)
      for (const Perm& g : levels_[j].gens) out.push_back(g);
    return out;
  }

  void rebuild_transversal(std::size_t i) {
    Level& lev = levels_[i];
    std::vector<Perm> gens = gens_from(i);
    lev.transversal.clear();
    lev.transversal.emplace(lev.base_point, Perm::identity(degree_));
    std::vector<Point> queue{lev.base_point};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Point p = queue[qi];
      const Perm rep = lev.transversal.at(p);
      for (const Perm& s : gens) {
        Point q = s[p];
        if (!lev.transversal.count(q)) {
          lev.transversal.emplace(q, rep * s);
          queue.push_back(q);
        }
      }
    }
  }

  /// Restores closure at level i: all Schreier generators of the level must
  /// sift to the identity through the deeper levels.
  void update(std::size_t i) {
    while (true) {
      rebuild_transversal(i);
      std::vector<Perm> gens = gens_from(i);
      bool added = false;
      for (const auto& [pt, u] : levels_[i].transversal) {
        for (const Perm& s : gens) {
          const Perm& v = levels_[i].transversal.at(s[pt]);
          Perm schreier = u * s * v.inverse();
          if (schreier.is_identity()) continue;
          Perm r = schreier;
          std::size_t lev = i + 1;
          for (; lev < levels_.size(); ++lev) {
            if (r.is_identity()) break;
            Point t = r[levels_[lev].base_point];
            auto it = levels_[lev].transversal.find(t);
            if (it == levels_[lev].transversal.end()) break;
            r = r * it->second.inverse();
          }
          if (r.is_identity()) continue;
          if (lev == levels_.size()) new_level(first_moved(r));
          levels_[lev].gens.push_back(r);
          for (std::size_t j = lev; j > i; --j) update(j);
          added = true;
          break;
        }
        if (added) break;
      }
      if (!added) return;
    }
  }

  int degree_;
  std::vector<Level> levels_;
};

/// Permutation group on {0,...,degree-1}, held as a generator set with a
/// lazily built stabilizer chain. Values are immutable after construction.
class PermGroup {
 public:
  explicit PermGroup(int degree) : degree_(degree), state_(std::make_shared<State>()) {}

  PermGroup(int degree, std::vector<Perm> generators)
      : degree_(degree), state_(std::make_shared<State>()) {
    std::set<Perm> uniq;
    for (Perm& g : generators) {
      if (g.degree() != degree) throw usage_error("PermGroup: generator degree mismatch");
      if (g.is_identity()) continue;
      if (uniq.insert(g).second) gens_.push_back(std::move(g));
    }
    // generator normalization: refine oversized sets to <= degree^2 strong
    // generators via Schreier-Sims
    if (degree > 0 && gens_.size() > 2 * static_cast<std::size_t>(degree) * degree) {
      StabilizerChain c(degree_, gens_);
      gens_ = c.strong_generators();
      std::set<Perm> uniq2(gens_.begin(), gens_.end());
      gens_.assign(uniq2.begin(), uniq2.end());
    }
  }

  static PermGroup trivial(int degree) { return PermGroup(degree); }

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  bool is_trivial() const { return gens_.empty(); }

  const StabilizerChain& chain() const {
    std::call_once(state_->once, [this] {
      state_->chain = std::make_unique<StabilizerChain>(degree_, gens_);
    });
    return *state_->chain;
  }

  BigInt order() const { return chain().order(); }

  bool contains(const Perm& g) const {
    if (g.degree() != degree_) throw usage_error("PermGroup: degree mismatch in membership test");
    if (g.is_identity()) return true;
    return chain().contains(g);
  }

  std::vector<Perm> enumerate(const BigInt& limit) const { return chain().enumerate(limit); }

 private:
  struct State {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };
  int degree_ = 0;
  std::vector<Perm> gens_;
  std::shared_ptr<State> state_;
};

/// Builds a stabilizer chain whose base starts with the given points.
inline StabilizerChain stabilizer_chain(const PermGroup& g, const std::vector<Point>& base_prefix = {}) {
  return StabilizerChain(g.degree(), g.generators(), base_prefix);
}

/// {g in G | p^g = p for all p in points}.
inline PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<Point>& points) {
  for (Point p : points)
    if (p < 0 || p >= g.degree()) throw usage_error("pointwise_stabilizer: point out of range");
  StabilizerChain c(g.degree(), g.generators(), points);
  return PermGroup(g.degree(), c.tail_generators(points.size()));
}

/// Setwise stabilizer is not needed in general; single-point stabilizer is.
inline PermGroup point_stabilizer(const PermGroup& g, Point p) {
  return pointwise_stabilizer(g, {p});
}

/// Some element of G mapping a to b, if any.
inline std::optional<Perm> transporter_rep(const PermGroup& g, Point a, Point b) {
  StabilizerChain c(g.degree(), g.generators(), {a});
  const auto& tr = c.levels()[0].transversal;
  auto it = tr.find(b);
  if (it == tr.end()) return std::nullopt;
  return it->second;
}

/// Describes a subgroup H <= G given by a membership predicate, together
/// with right coset representatives (G is the union of H*rep). Throws
/// index_bound_exceeded if [G:H] > index_bound.
template <typename MemberTest>
std::pair<PermGroup, std::vector<Perm>> subgroup_with_cosets(const PermGroup& g,
                                                             MemberTest member,
                                                             const BigInt& index_bound) {
  std::vector<Perm> reps{Perm::identity(g.degree())};
  std::set<Perm> h_gens;
  std::size_t head = 0;
  while (head < reps.size()) {
    Perm r = reps[head++];
    for (const Perm& s : g.generators()) {
      Perm c = r * s;
      bool placed = false;
      for (const Perm& q : reps) {
        Perm h = c * q.inverse();
        if (member(h)) {
          if (!h.is_identity()) h_gens.insert(std::move(h));
          placed = true;
          break;
        }
      }
      if (!placed) {
        if (BigInt(static_cast<long>(reps.size())) >= index_bound)
          throw index_bound_exceeded("subgroup_with_cosets: index bound exceeded");
        reps.push_back(std::move(c));
      }
    }
  }
  return {PermGroup(g.degree(), std::vector<Perm>(h_gens.begin(), h_gens.end())), reps};
}

enum class GiantType { symmetric, alternating, neither };

/// Classifies G as Sym(domain), Alt(domain) or neither by exact order
/// comparison against n! and n!/2.
inline GiantType giant_type(const PermGroup& g) {
  if (g.degree() < 1) throw usage_error("giant_type: degree must be >= 1");
  BigInt full = factorial(g.degree());
  BigInt o = g.order();
  if (o == full) return GiantType::symmetric;
  if (g.degree() >= 2 && 2 * o == full) return GiantType::alternating;
  return GiantType::neither;
}

/// True when G contains Alt(domain); a subgroup of Sym_n of order >= n!/2
/// is Alt_n or Sym_n since Alt_n is the unique index-2 subgroup.
inline bool contains_alternating(const PermGroup& g) {
  if (g.degree() <= 2) return true;
  return 2 * g.order() >= factorial(g.degree());
}

/// Generators of Sym_n in its canonical action: an n-cycle and a
/// transposition.
inline std::vector<Perm> symmetric_generators(int n) {
  std::vector<Perm> out;
  if (n >= 2) {
    std::vector<Point> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = i;
    out.push_back(perm_from_cycles(n, {cyc}));
    out.push_back(perm_from_cycles(n, {{0, 1}}));
  }
  return out;
}

/// Generators of Alt_n: (2 3 ... n-1),(0 1 2) for odd n and
/// (0 1)(2 3 ... n-1),(0 1 2) for even n.
inline std::vector<Perm> alternating_generators(int n) {
  std::vector<Perm> out;
  if (n < 3) return out;
  if (n == 3) {
    out.push_back(perm_from_cycles(n, {{0, 1, 2}}));
    return out;
  }
  std::vector<Point> tail;
  for (int i = 2; i < n; ++i) tail.push_back(i);
  if (n % 2 == 1)
    out.push_back(perm_from_cycles(n, {tail}));
  else
    out.push_back(perm_from_cycles(n, {{0, 1}, tail}));
  out.push_back(perm_from_cycles(n, {{0, 1, 2}}));
  return out;
}

inline PermGroup symmetric_group(int n) { return PermGroup(n, symmetric_generators(n)); }
inline PermGroup alternating_group(int n) { return PermGroup(n, alternating_generators(n)); }

/// Derived subgroup (normal closure of the commutators of the generators).
inline PermGroup derived_subgroup(const PermGroup& g) {
  std::set<Perm> gens;
  for (const Perm& a : g.generators())
    for (const Perm& b : g.generators()) {
      Perm c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) gens.insert(c);
    }
  PermGroup d(g.degree(), std::vector<Perm>(gens.begin(), gens.end()));
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Perm& x : std::vector<Perm>(gens.begin(), gens.end())) {
      for (const Perm& s : g.generators()) {
        Perm c = s.inverse() * x * s;
        if (!d.contains(c)) {
          gens.insert(c);
          d = PermGroup(g.degree(), std::vector<Perm>(gens.begin(), gens.end()));
          grew = true;
        }
      }
    }
  }
  return d;
}

inline bool is_subgroup_of(const PermGroup& h, const PermGroup& g) {
  for (const Perm& x : h.generators())
    if (!g.contains(x)) return false;
  return true;
}

inline bool group_equal(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && is_subgroup_of(a, b);
}

}  // namespace giso
