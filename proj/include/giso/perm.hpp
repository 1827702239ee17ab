#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "giso/error.hpp"

namespace giso {

using Point = int;

/// Permutation of {0,...,n-1}, stored as the image table.
///
/// Composition is left-to-right: (a * b) maps p to b[a[p]], matching the
/// superscript action p^(ab) = (p^a)^b used throughout.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
  }
  explicit Perm(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (Point p : images_) {
      if (p < 0 || p >= static_cast<Point>(images_.size()) || seen[p])
        throw usage_error("Perm: image table is not a bijection");
      seen[p] = 1;
    }
  }

  static Perm identity(int degree) { return Perm(degree); }

  int degree() const { return static_cast<int>(images_.size()); }

  Point operator[](Point p) const { return images_[p]; }

  bool is_identity() const {
    for (Point p = 0; p < degree(); ++p)
      if (images_[p] != p) return false;
    return true;
  }

  Perm operator*(const Perm& other) const {
    if (degree() != other.degree())
      throw usage_error("Perm: degree mismatch in composition");
    std::vector<Point> r(images_.size());
    for (Point p = 0; p < degree(); ++p) r[p] = other.images_[images_[p]];
    return Perm(Raw{}, std::move(r));
  }

  Perm inverse() const {
    std::vector<Point> r(images_.size());
    for (Point p = 0; p < degree(); ++p) r[images_[p]] = p;
    return Perm(Raw{}, std::move(r));
  }

  bool is_even() const {
    // parity from cycle structure
    std::vector<char> seen(images_.size(), 0);
    int transpositions = 0;
    for (Point p = 0; p < degree(); ++p) {
      if (seen[p]) continue;
      int len = 0;
      for (Point q = p; !seen[q]; q = images_[q]) {
        seen[q] = 1;
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 0;
  }

  bool operator==(const Perm& other) const { return images_ == other.images_; }
  bool operator!=(const Perm& other) const { return images_ != other.images_; }
  bool operator<(const Perm& other) const { return images_ < other.images_; }

  const std::vector<Point>& images() const { return images_; }

 private:
  struct Raw {};
  Perm(Raw, std::vector<Point> images) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Builds a permutation from a list of cycles, e.g. {{0,1,2,3},{4,5}}.
inline Perm perm_from_cycles(int degree,
                             const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point from = cyc[i];
      Point to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw usage_error("perm_from_cycles: point out of range");
      if (img[from] != from)
        throw usage_error("perm_from_cycles: cycles are not disjoint");
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

/// Serializes in disjoint-cycle notation: "(0 1 2 3)(4 5)", identity "()".
/// Cycles start at their minimal element and are ordered by it.
inline std::string to_cycle_string(const Perm& g) {
  std::ostringstream out;
  std::vector<char> seen(g.degree(), 0);
  bool any = false;
  for (Point p = 0; p < g.degree(); ++p) {
    if (seen[p] || g[p] == p) {
      seen[p] = 1;
      continue;
    }
    any = true;
    out << '(' << p;
    seen[p] = 1;
    for (Point q = g[p]; q != p; q = g[q]) {
      out << ' ' << q;
      seen[q] = 1;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

/// Parses disjoint-cycle notation on a domain of the given size.
inline Perm parse_perm(const std::string& text, int degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw parse_error("parse_perm: expected '('");
    ++i;
    std::vector<Point> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("parse_perm: expected point index");
      Point p = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        p = p * 10 + (text[i] - '0');
        ++i;
      }
      cyc.push_back(p);
      skip_ws();
    }
    if (i >= text.size()) throw parse_error("parse_perm: unterminated cycle");
    ++i;  // ')'
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return perm_from_cycles(degree, cycles);
}

}  // namespace giso
