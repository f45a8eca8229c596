#pragma once

// Complete m_D-primary ideals of D through their Zariski factorization.
//
// A complete m_D-primary ideal is a unique product of simple complete ideals,
// and simple complete ideals correspond one-to-one with points of Q(D) via
// their single Rees valuation. An ideal is therefore a multiset of points.
// Generators never appear at this level; see monomial.hpp for a concrete
// realisation over k[x,y].

#include <map>
#include <ostream>
#include <set>
#include <utility>

#include "qtree/error.hpp"
#include "qtree/point.hpp"

namespace qtree {

/// The simple complete ideal whose Rees valuation is ord_point.
struct SimpleIdeal {
  Point point;
  friend bool operator==(const SimpleIdeal&, const SimpleIdeal&) = default;
  friend auto operator<=>(const SimpleIdeal&, const SimpleIdeal&) = default;
};

/// Finite, rooted, downward-closed set of points.
class BasePointSet {
 public:
  /// The set {root}.
  BasePointSet() { points_.insert(Point::root()); }

  explicit BasePointSet(PointSet points) : points_(std::move(points))
  {
    if (!points_.count(Point::root())) {
      throw Error(Errc::InvalidBaseSet, "base-point set must contain the root");
    }
    for (const auto& p : points_) {
      if (!p.is_root() && !points_.count(parent_view(p))) {
        throw Error(Errc::InvalidBaseSet, "base-point set is not closed under parents");
      }
    }
  }

  /// Downward closure of an arbitrary finite set, always including the root.
  template <class Range>
  static BasePointSet closure_of(const Range& points)
  {
    BasePointSet out;
    for (const Point& p : points) {
      const PathView path = p.view();
      for (std::size_t k = path.size(); k > 0 && !out.points_.count(path.first(k)); --k) {
        out.points_.emplace(std::vector<Direction>(path.begin(), path.begin() + k));
      }
    }
    return out;
  }

  const PointSet& points() const noexcept { return points_; }
  bool contains(const Point& p) const { return points_.count(p) != 0; }
  bool contains(PathView p) const { return points_.count(p) != 0; }
  std::size_t size() const noexcept { return points_.size(); }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  PointSet terminal() const { return maximal_elements(points_); }

  friend bool operator==(const BasePointSet&, const BasePointSet&) = default;

 private:
  PointSet points_;
};

/// Multiset of simple factors. The empty multiset is the unit ideal; it is
/// accepted by multiply() and rejected everywhere else.
class CompleteIdeal {
 public:
  using Factors = std::map<Point, unsigned, PointLess>;

  CompleteIdeal() = default;

  explicit CompleteIdeal(Factors factors) : factors_(std::move(factors))
  {
    std::erase_if(factors_, [](const auto& kv) { return kv.second == 0; });
  }

  static CompleteIdeal unit() { return {}; }

  static CompleteIdeal simple(Point p, unsigned mult = 1)
  {
    Factors f;
    f.emplace(std::move(p), mult);
    return CompleteIdeal(std::move(f));
  }

  /// Each listed point with multiplicity 1 (repeats add up).
  template <class Range>
  static CompleteIdeal from_points(const Range& points)
  {
    Factors f;
    for (const Point& p : points) ++f[p];
    return CompleteIdeal(std::move(f));
  }

  const Factors& factors() const noexcept { return factors_; }
  bool is_unit() const noexcept { return factors_.empty(); }

  PointSet support() const
  {
    PointSet out;
    for (const auto& kv : factors_) out.insert(kv.first);
    return out;
  }

  friend bool operator==(const CompleteIdeal&, const CompleteIdeal&) = default;

  friend std::ostream& operator<<(std::ostream& os, const CompleteIdeal& j)
  {
    if (j.is_unit()) return os << "(1)";
    bool first = true;
    for (const auto& [p, m] : j.factors_) {
      os << (std::exchange(first, false) ? "" : " * ") << "S" << p;
      if (m > 1) os << '^' << m;
    }
    return os;
  }

 private:
  Factors factors_;
};

namespace detail {
inline void require_proper(const CompleteIdeal& j)
{
  if (j.is_unit()) throw Error(Errc::UnitIdeal, "operation requires an m_D-primary ideal, got the unit ideal");
}
}  // namespace detail

/// Product of complete ideals: multiset union of the factors.
inline CompleteIdeal multiply(const CompleteIdeal& a, const CompleteIdeal& b)
{
  auto f = a.factors();
  for (const auto& [p, m] : b.factors()) f[p] += m;
  return CompleteIdeal(std::move(f));
}

/// The union of the chains of the distinct factor points.
inline BasePointSet base_points(const CompleteIdeal& j)
{
  detail::require_proper(j);
  return BasePointSet::closure_of(j.support());
}

inline PointSet terminal_base_points(const CompleteIdeal& j)
{
  return base_points(j).terminal();
}

inline std::set<OrderValuation> rees_valuations(const CompleteIdeal& j)
{
  detail::require_proper(j);
  std::set<OrderValuation> out;
  for (const auto& kv : j.factors()) out.insert(OrderValuation{kv.first});
  return out;
}

/// The distinct factor points are exactly the base points.
inline bool is_saturated(const CompleteIdeal& j)
{
  return base_points(j).points() == j.support();
}

/// Product over all base points, each taken once. Multiplicity 1 is the
/// canonical saturated representative; the blowup ignores multiplicities.
inline CompleteIdeal saturate(const CompleteIdeal& j)
{
  return CompleteIdeal::from_points(base_points(j).points());
}

}  // namespace qtree
