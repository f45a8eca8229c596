#pragma once

// Nonsingular projective models over D.
//
// A nonsingular model Proj D[Jt] (J saturated) is determined by its finite
// set of base points; its closed points are the first-neighborhood points of
// base points that are not themselves base points. Chart and scheme data are
// not modelled.

#include <utility>
#include <vector>

#include "qtree/complete_ideal.hpp"
#include "qtree/symbolic_set.hpp"

namespace qtree {

class NonsingularModel {
 public:
  /// The blowup of m_D.
  NonsingularModel() = default;
  explicit NonsingularModel(BasePointSet base) : base_(std::move(base)) {}

  const BasePointSet& base() const noexcept { return base_; }
  PointSet terminal() const { return base_.terminal(); }

  friend bool operator==(const NonsingularModel&, const NonsingularModel&) = default;

 private:
  BasePointSet base_;
};

inline NonsingularModel model_from_ideal(const CompleteIdeal& j)
{
  if (!is_saturated(j)) {
    throw Error(Errc::NotSaturated, "Proj D[Jt] is singular; desingularize (saturate) first");
  }
  return NonsingularModel(base_points(j));
}

inline NonsingularModel minimal_desingularization(const CompleteIdeal& j)
{
  return model_from_ideal(saturate(j));
}

/// Union over base points a of Q1(a) minus the directions leading to other
/// base points.
inline SymbolicPointSet closed_points(const NonsingularModel& m)
{
  SymbolicPointSet::CofiniteMap atoms;
  for (const auto& a : m.base()) atoms.emplace(a, DirectionSet{});
  for (const auto& a : m.base()) {
    if (!a.is_root()) atoms.find(parent_view(a))->second.insert(a.last());
  }
  return SymbolicPointSet({}, std::move(atoms));
}

inline bool contains_point(const NonsingularModel& m, const Point& q)
{
  return !q.is_root() && m.base().contains(parent_view(q)) && !m.base().contains(q);
}

/// Base-set containment; then every closed point of m dominates a unique
/// closed point of n.
inline bool dominates(const NonsingularModel& m, const NonsingularModel& n)
{
  for (const auto& p : n.base()) {
    if (!m.base().contains(p)) return false;
  }
  return true;
}

inline NonsingularModel join(const NonsingularModel& m, const NonsingularModel& n)
{
  PointSet all = m.base().points();
  all.insert(n.base().begin(), n.base().end());
  return NonsingularModel(BasePointSet(std::move(all)));
}

/// The canonical saturated ideal: multiplicity 1 at every base point.
inline CompleteIdeal ideal_for_model(const NonsingularModel& m)
{
  return CompleteIdeal::from_points(m.base().points());
}

namespace detail {
template <class Range>
void require_nonroot_antichain(const Range& s)
{
  for (const Point& p : s) {
    if (p.is_root()) throw Error(Errc::RootNotAllowed, "the root cannot be a closed point of a model");
  }
  if (!is_antichain(s)) throw Error(Errc::NotAntichain, "points must be pairwise incomparable");
}
}  // namespace detail

/// The least nonsingular model having every point of s as a closed point:
/// base = union of chain(parent(a)) over a in s.
template <class Range>
NonsingularModel minimal_model_containing(const Range& s)
{
  if (std::begin(s) == std::end(s)) throw Error(Errc::EmptyInput, "need at least one point");
  detail::require_nonroot_antichain(s);
  std::vector<Point> parents;
  for (const Point& p : s) parents.push_back(parent(p));
  return NonsingularModel(BasePointSet::closure_of(parents));
}

inline NonsingularModel minimal_model_containing(std::initializer_list<Point> s)
{
  return minimal_model_containing(std::vector<Point>(s));
}

/// Points of Q(D) minimal with respect to being incomparable to every point
/// of s: the closed points of the minimal containing model, minus s.
template <class Range>
SymbolicPointSet minimal_incomparable_set(const Range& s)
{
  // Vacuous case: everything is incomparable to the empty set.
  if (std::begin(s) == std::end(s)) return SymbolicPointSet::single(Point::root());
  return set_minus_finite(closed_points(minimal_model_containing(s)), s);
}

inline SymbolicPointSet minimal_incomparable_set(std::initializer_list<Point> s)
{
  return minimal_incomparable_set(std::vector<Point>(s));
}

}  // namespace qtree
