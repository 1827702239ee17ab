#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "giso/hom.hpp"

namespace giso {

struct OrbitPartition {
  std::vector<std::vector<Point>> classes;  // sorted, ordered by minimal element
};

struct BlockSystem {
  std::vector<std::vector<Point>> blocks;  // sorted, ordered by minimal element
};

namespace detail {

/// Orbits of <gens> on the given point set (connected components of the
/// generator-image graph), each sorted, ordered by minimal element.
inline std::vector<std::vector<Point>> orbits_on(const std::vector<Perm>& gens,
                                                 const std::vector<Point>& pts) {
  std::set<Point> left(pts.begin(), pts.end());
  std::vector<std::vector<Point>> out;
  while (!left.empty()) {
    Point start = *left.begin();
    std::vector<Point> orbit{start};
    left.erase(start);
    std::set<Point> seen{start};
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const Perm& s : gens) {
        Point q = s[orbit[i]];
        if (seen.insert(q).second) {
          orbit.push_back(q);
          left.erase(q);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

/// Connected component of a in the graph whose edges are the orbit of
/// {a,b} under the induced action on unordered pairs. The component is the
/// smallest block containing a and b.
inline std::vector<Point> smallest_block_on(const std::vector<Perm>& gens,
                                            const std::vector<Point>& pts, Point a, Point b) {
  std::set<std::pair<Point, Point>> edges;
  std::vector<std::pair<Point, Point>> queue;
  auto norm = [](Point x, Point y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
  edges.insert(norm(a, b));
  queue.push_back(norm(a, b));
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Perm& s : gens) {
      auto e = norm(s[queue[i].first], s[queue[i].second]);
      if (edges.insert(e).second) queue.push_back(e);
    }
  std::map<Point, std::vector<Point>> adj;
  for (const auto& [x, y] : edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::set<Point> comp{a};
  std::vector<Point> bfs{a};
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (Point q : adj[bfs[i]])
      if (comp.insert(q).second) bfs.push_back(q);
  std::vector<Point> out(comp.begin(), comp.end());
  return out;
}

/// Minimal block system of a transitive action on pts, or nullopt when the
/// action is primitive. Seed scan: a = min point, b ascending, first
/// non-trivial block wins; then coarsen until the induced action is
/// primitive.
inline std::optional<std::vector<std::vector<Point>>> minimal_blocks_on(
    const std::vector<Perm>& gens, const std::vector<Point>& pts) {
  if (pts.size() <= 2) return std::nullopt;  // no non-trivial block possible
  Point a = pts[0];
  std::vector<Point> seed;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Point> c = smallest_block_on(gens, pts, a, pts[i]);
    if (c.size() < pts.size()) {
      seed = std::move(c);
      break;
    }
  }
  if (seed.empty()) return std::nullopt;  // primitive

  // the system of blocks is the orbit of the seed block under set images
  std::set<std::vector<Point>> blocks{seed};
  std::vector<std::vector<Point>> queue{seed};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Perm& s : gens) {
      std::vector<Point> img;
      img.reserve(queue[i].size());
      for (Point p : queue[i]) img.push_back(s[p]);
      std::sort(img.begin(), img.end());
      if (blocks.insert(img).second) queue.push_back(img);
    }
  std::vector<std::vector<Point>> system(blocks.begin(), blocks.end());
  std::sort(system.begin(), system.end(),
            [](const auto& x, const auto& y) { return x[0] < y[0]; });

  // coarsen: recurse on the induced action over the block indices
  std::map<Point, int> block_of;
  for (std::size_t i = 0; i < system.size(); ++i)
    for (Point p : system[i]) block_of[p] = static_cast<int>(i);
  std::vector<Perm> induced;
  for (const Perm& s : gens) {
    std::vector<Point> img(system.size());
    for (std::size_t i = 0; i < system.size(); ++i) img[i] = block_of.at(s[system[i][0]]);
    induced.push_back(Perm(std::move(img)));
  }
  std::vector<Point> idx(system.size());
  for (std::size_t i = 0; i < system.size(); ++i) idx[i] = static_cast<Point>(i);
  auto coarser = minimal_blocks_on(induced, idx);
  if (!coarser) return system;
  std::vector<std::vector<Point>> merged;
  for (const auto& group : *coarser) {
    std::vector<Point> blk;
    for (Point bi : group)
      for (Point p : system[bi]) blk.push_back(p);
    std::sort(blk.begin(), blk.end());
    merged.push_back(std::move(blk));
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& x, const auto& y) { return x[0] < y[0]; });
  return merged;
}

}  // namespace detail

inline OrbitPartition orbits(const PermGroup& g) {
  std::vector<Point> pts(g.degree());
  for (int i = 0; i < g.degree(); ++i) pts[i] = i;
  return OrbitPartition{detail::orbits_on(g.generators(), pts)};
}

inline bool is_transitive(const PermGroup& g) {
  return orbits(g).classes.size() == 1;
}

inline std::vector<Point> smallest_block(const PermGroup& g, Point a, Point b) {
  if (!is_transitive(g)) throw usage_error("smallest_block: group must be transitive");
  if (a == b) throw usage_error("smallest_block: points must differ");
  std::vector<Point> pts(g.degree());
  for (int i = 0; i < g.degree(); ++i) pts[i] = i;
  return detail::smallest_block_on(g.generators(), pts, a, b);
}

inline bool is_primitive(const PermGroup& g) {
  if (!is_transitive(g)) throw usage_error("is_primitive: group must be transitive");
  std::vector<Point> pts(g.degree());
  for (int i = 0; i < g.degree(); ++i) pts[i] = i;
  for (int b = 1; b < g.degree(); ++b)
    if (detail::smallest_block_on(g.generators(), pts, 0, b).size() < pts.size()) return false;
  return true;
}

/// Minimal block system (induced action primitive) or nullopt when g is
/// already primitive. The result is convention-dependent but deterministic.
inline std::optional<BlockSystem> minimal_block_system(const PermGroup& g) {
  if (!is_transitive(g)) throw usage_error("minimal_block_system: group must be transitive");
  std::vector<Point> pts(g.degree());
  for (int i = 0; i < g.degree(); ++i) pts[i] = i;
  auto sys = detail::minimal_blocks_on(g.generators(), pts);
  if (!sys) return std::nullopt;
  return BlockSystem{*sys};
}

/// Induced action on an invariant partition, as a tracked hom onto
/// Sym(blocks); its kernel is the block stabilizer.
inline TrackedHom block_action(const PermGroup& g, const std::vector<std::vector<Point>>& blocks) {
  std::vector<Point> block_of(g.degree(), -1);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (Point p : blocks[i]) block_of[p] = static_cast<Point>(i);
  std::vector<std::pair<Perm, Perm>> pairs;
  for (const Perm& s : g.generators()) {
    std::vector<Point> img(blocks.size(), -1);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      int target = block_of[s[blocks[i][0]]];
      // every point of the block must land in the same target block
      for (Point p : blocks[i])
        if (block_of[s[p]] != target)
          throw usage_error("block_action: partition is not invariant");
      img[i] = target;
    }
    pairs.emplace_back(s, Perm(std::move(img)));
  }
  return TrackedHom(g.degree(), static_cast<int>(blocks.size()), std::move(pairs));
}

inline TrackedHom block_action(const PermGroup& g, const BlockSystem& system) {
  return block_action(g, system.blocks);
}

}  // namespace giso
