#pragma once

#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "qtree/point.hpp"

namespace qtree {

/// A finite union of singletons {p} and cofinite first-neighborhood sets
/// Q1(b) \ E (E finite). Always held in canonical form:
///  - at most one cofinite atom per base,
///  - no singleton whose parent carries a cofinite atom (it is absorbed by
///    dropping its label from that atom's excluded set).
class SymbolicPointSet {
 public:
  using CofiniteMap = std::map<Point, DirectionSet, PointLess>;

  SymbolicPointSet() = default;

  SymbolicPointSet(PointSet singles, CofiniteMap cofinite)
      : singles_(std::move(singles)), cofinite_(std::move(cofinite))
  {
    canonicalize();
  }

  static SymbolicPointSet single(Point p)
  {
    PointSet s;
    s.insert(std::move(p));
    return SymbolicPointSet(std::move(s), {});
  }

  /// Q1(base) minus the listed directions.
  static SymbolicPointSet first_neighborhood_minus(Point base, DirectionSet excluded = {})
  {
    CofiniteMap m;
    m.emplace(std::move(base), std::move(excluded));
    return SymbolicPointSet({}, std::move(m));
  }

  template <class Range>
  static SymbolicPointSet finite(const Range& points)
  {
    PointSet s(std::begin(points), std::end(points));
    return SymbolicPointSet(std::move(s), {});
  }

  const PointSet& singles() const noexcept { return singles_; }
  const CofiniteMap& cofinite() const noexcept { return cofinite_; }

  bool empty() const noexcept { return singles_.empty() && cofinite_.empty(); }
  bool is_finite() const noexcept { return cofinite_.empty(); }

  bool contains(const Point& q) const
  {
    if (singles_.count(q)) return true;
    if (q.is_root()) return false;
    auto it = cofinite_.find(parent_view(q));
    return it != cofinite_.end() && !it->second.count(q.last());
  }

  friend bool operator==(const SymbolicPointSet&, const SymbolicPointSet&) = default;

  friend SymbolicPointSet set_union(const SymbolicPointSet& a, const SymbolicPointSet& b)
  {
    PointSet singles = a.singles_;
    singles.insert(b.singles_.begin(), b.singles_.end());
    CofiniteMap cof = a.cofinite_;
    for (const auto& [base, excl] : b.cofinite_) {
      auto [it, inserted] = cof.emplace(base, excl);
      if (!inserted) {
        // (Q1 \ E1) u (Q1 \ E2) = Q1 \ (E1 n E2)
        DirectionSet both;
        for (const auto& d : it->second) {
          if (excl.count(d)) both.insert(d);
        }
        it->second = std::move(both);
      }
    }
    return SymbolicPointSet(std::move(singles), std::move(cof));
  }

  template <class Range>
  friend SymbolicPointSet set_minus_finite(const SymbolicPointSet& s, const Range& removed)
  {
    PointSet singles = s.singles_;
    CofiniteMap cof = s.cofinite_;
    for (const Point& q : removed) {
      singles.erase(q);
      if (q.is_root()) continue;
      if (auto it = cof.find(parent_view(q)); it != cof.end()) it->second.insert(q.last());
    }
    return SymbolicPointSet(std::move(singles), std::move(cof));
  }

  /// Subset test; exact because both sides are canonical (a cofinite atom can
  /// only be covered by a cofinite atom on the same base).
  friend bool is_subset(const SymbolicPointSet& a, const SymbolicPointSet& b)
  {
    for (const auto& p : a.singles_) {
      if (!b.contains(p)) return false;
    }
    for (const auto& [base, excl] : a.cofinite_) {
      auto it = b.cofinite_.find(base);
      if (it == b.cofinite_.end()) return false;
      for (const auto& d : it->second) {
        if (!excl.count(d)) return false;
      }
    }
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const SymbolicPointSet& s)
  {
    bool first = true;
    auto sep = [&]() -> std::ostream& { return os << (std::exchange(first, false) ? "" : " u "); };
    for (const auto& p : s.singles_) sep() << '{' << p << '}';
    for (const auto& [base, excl] : s.cofinite_) {
      sep() << "Q1(" << base << ')';
      if (!excl.empty()) {
        os << " \\ {";
        bool f = true;
        for (const auto& d : excl) os << (std::exchange(f, false) ? "" : ",") << d;
        os << '}';
      }
    }
    if (first) os << "{}";
    return os;
  }

 private:
  void canonicalize()
  {
    for (auto it = singles_.begin(); it != singles_.end();) {
      if (it->is_root()) {
        ++it;
        continue;
      }
      auto atom = cofinite_.find(parent_view(*it));
      if (atom == cofinite_.end()) {
        ++it;
        continue;
      }
      atom->second.erase(it->last());
      it = singles_.erase(it);
    }
  }

  PointSet singles_;
  CofiniteMap cofinite_;
};

/// Members of s not strictly above another member. A cofinite atom Q1(b) \ E
/// is dropped wholesale when a member lies on chain(b), since every point of
/// the atom then has that member as an ancestor.
inline SymbolicPointSet minimal_points(const SymbolicPointSet& s)
{
  auto has_member_below = [&](const Point& p, bool strictly) {
    const auto n = p.level();
    for (std::size_t k = 0; k < n + (strictly ? 0 : 1); ++k) {
      Point anc(std::vector<Direction>(p.path().begin(), p.path().begin() + k));
      if (s.contains(anc)) return true;
    }
    return false;
  };

  PointSet singles;
  for (const auto& p : s.singles()) {
    if (!has_member_below(p, /*strictly=*/true)) singles.insert(p);
  }
  SymbolicPointSet::CofiniteMap cof;
  for (const auto& [base, excl] : s.cofinite()) {
    if (!has_member_below(base, /*strictly=*/false)) cof.emplace(base, excl);
  }
  return SymbolicPointSet(std::move(singles), std::move(cof));
}

inline bool is_antichain(const SymbolicPointSet& s)
{
  return minimal_points(s) == s;
}

}  // namespace qtree
