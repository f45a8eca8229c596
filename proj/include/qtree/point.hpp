#pragma once

// Points of the quadratic tree Q(D).
//
// A point is the unique chain of local quadratic transforms leading to it from
// the root D, recorded as a sequence of direction labels. The residue field is
// assumed infinite, so every first neighborhood Q1(p) is an infinite set; the
// calculus never enumerates it and only ever excludes finitely many directions.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qtree/error.hpp"

namespace qtree {

/// Names a point of the first neighborhood of some point. The two reserved
/// tokens "X" and "Y" are the coordinate directions; anything else is an
/// opaque non-coordinate direction.
class Direction {
 public:
  Direction() = default;
  explicit Direction(std::string token) : token_(std::move(token)) {}

  static Direction x() { return Direction("X"); }
  static Direction y() { return Direction("Y"); }

  const std::string& token() const noexcept { return token_; }
  bool is_x() const noexcept { return token_ == "X"; }
  bool is_y() const noexcept { return token_ == "Y"; }
  bool is_coordinate() const noexcept { return is_x() || is_y(); }

  friend bool operator==(const Direction&, const Direction&) = default;

  // X < Y < every other token (alphabetical).
  friend std::strong_ordering operator<=>(const Direction& a, const Direction& b)
  {
    const int ra = a.rank(), rb = b.rank();
    if (ra != rb) return ra <=> rb;
    return a.token_.compare(b.token_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Direction& d)
  {
    return os << d.token_;
  }

 private:
  int rank() const noexcept { return is_x() ? 0 : is_y() ? 1 : 2; }

  std::string token_;
};

using DirectionSet = std::set<Direction>;
using PathView = std::span<const Direction>;

/// Canonical order on paths: by level, then lexicographically by direction.
inline std::strong_ordering compare_paths(PathView a, PathView b) noexcept
{
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Direction> path) : path_(std::move(path)) {}
  Point(std::initializer_list<Direction> path) : path_(path) {}

  static Point root() { return Point(); }

  const std::vector<Direction>& path() const noexcept { return path_; }
  PathView view() const noexcept { return path_; }
  std::size_t level() const noexcept { return path_.size(); }
  bool is_root() const noexcept { return path_.empty(); }

  /// Last direction label; the point must not be the root.
  const Direction& last() const
  {
    if (is_root()) throw Error(Errc::RootHasNoParent, "the root has no incoming direction");
    return path_.back();
  }

  Point child(Direction d) const
  {
    auto p = path_;
    p.push_back(std::move(d));
    return Point(std::move(p));
  }

  /// True when every label is X or Y.
  bool is_toric() const noexcept
  {
    return std::all_of(path_.begin(), path_.end(),
                       [](const Direction& d) { return d.is_coordinate(); });
  }

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) noexcept
  {
    return compare_paths(a.view(), b.view());
  }

  friend std::ostream& operator<<(std::ostream& os, const Point& p)
  {
    os << '[';
    for (std::size_t i = 0; i < p.path_.size(); ++i) os << (i ? "," : "") << p.path_[i];
    return os << ']';
  }

 private:
  std::vector<Direction> path_;
};

/// Transparent comparator so that containers keyed by Point can be probed with
/// a path view (e.g. the parent of a point) without allocating.
struct PointLess {
  using is_transparent = void;
  static PathView v(const Point& p) noexcept { return p.view(); }
  static PathView v(PathView p) noexcept { return p; }
  template <class A, class B>
  bool operator()(const A& a, const B& b) const noexcept
  {
    return compare_paths(v(a), v(b)) < 0;
  }
};

using PointSet = std::set<Point, PointLess>;

/// The order valuation ord_p of the regular local ring at a point.
struct OrderValuation {
  Point center;

  friend bool operator==(const OrderValuation&, const OrderValuation&) = default;
  friend auto operator<=>(const OrderValuation&, const OrderValuation&) = default;
};

inline Point parent(const Point& p)
{
  if (p.is_root()) throw Error(Errc::RootHasNoParent, "the root has no parent");
  return Point(std::vector<Direction>(p.path().begin(), p.path().end() - 1));
}

inline PathView parent_view(const Point& p)
{
  if (p.is_root()) throw Error(Errc::RootHasNoParent, "the root has no parent");
  return p.view().first(p.level() - 1);
}

/// [root, ..., p], the unique chain of points from the root to p.
inline std::vector<Point> chain(const Point& p)
{
  std::vector<Point> out;
  out.reserve(p.level() + 1);
  for (std::size_t k = 0; k <= p.level(); ++k) {
    out.emplace_back(std::vector<Direction>(p.path().begin(), p.path().begin() + k));
  }
  return out;
}

inline bool is_prefix(PathView a, PathView b) noexcept
{
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

/// a <= b in Q(D): a is contained in b, i.e. a lies on the chain of b.
inline bool leq(const Point& a, const Point& b) noexcept
{
  return is_prefix(a.view(), b.view());
}

inline bool comparable(const Point& a, const Point& b) noexcept
{
  return leq(a, b) || leq(b, a);
}

/// Greatest common lower bound (longest common prefix).
inline Point meet(const Point& a, const Point& b)
{
  const auto n = std::min(a.level(), b.level());
  std::size_t k = 0;
  while (k < n && a.path()[k] == b.path()[k]) ++k;
  return Point(std::vector<Direction>(a.path().begin(), a.path().begin() + k));
}

template <class Range>
bool is_antichain(const Range& points)
{
  for (auto i = std::begin(points); i != std::end(points); ++i) {
    for (auto j = std::next(i); j != std::end(points); ++j) {
      if (*i == *j || comparable(*i, *j)) return false;
    }
  }
  return true;
}

/// Maximal elements under leq.
template <class Range>
PointSet maximal_elements(const Range& points)
{
  PointSet out;
  for (const Point& p : points) {
    const bool dominated = std::any_of(std::begin(points), std::end(points), [&](const Point& q) {
      return q != p && leq(p, q);
    });
    if (!dominated) out.insert(p);
  }
  return out;
}

namespace literals {

/// Parses compact paths like "XY" or "X,t1" (empty string is the root).
inline Point path_of(std::string_view s)
{
  std::vector<Direction> out;
  if (s.find(',') == std::string_view::npos) {
    for (char c : s) out.emplace_back(std::string(1, c));
  } else {
    std::size_t start = 0;
    while (start <= s.size()) {
      auto end = s.find(',', start);
      if (end == std::string_view::npos) end = s.size();
      out.emplace_back(std::string(s.substr(start, end - start)));
      start = end + 1;
    }
  }
  return Point(std::move(out));
}

}  // namespace literals

}  // namespace qtree
