#pragma once

// Rings O_U = intersection of the points of U, for U a set of closed points
// of a nonsingular model. Rings are never materialised; a descriptor is the
// ring, and verdicts are three-valued: YES/NO only where a known result settles
// the case, UNKNOWN otherwise.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qtree/model.hpp"
#include "qtree/symbolic_set.hpp"

namespace qtree {

enum class Verdict { Yes, No, Unknown };

constexpr std::string_view to_string(Verdict v) noexcept
{
  switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

struct Judgement {
  Verdict verdict = Verdict::Unknown;
  std::string citation;
  friend bool operator==(const Judgement&, const Judgement&) = default;
};

struct Classification {
  bool noetherian = true;
  std::string noetherian_citation;
  /// nullopt means infinitely many maximal ideals.
  std::optional<std::size_t> maximal_ideal_count;
  std::string count_citation;
  Judgement irredundant;
  Judgement essential;
  /// Set when O_U is itself a point of Q(D).
  std::optional<Point> ring_identity;
  /// Only reported for the ordinary double point instance.
  std::optional<std::string> singularity;
};

struct IntersectionDescriptor {
  NonsingularModel model;
  SymbolicPointSet subset;
  bool henselian = false;
};

namespace cite {
inline constexpr std::string_view noetherian =
    "an intersection of closed points of a nonsingular projective model over D is a Noetherian "
    "normal domain whose maximal ideals have height 2";
inline constexpr std::string_view finite_antichain =
    "a finite set of n pairwise incomparable points intersects to a regular domain with exactly n "
    "maximal ideals, localizing to the points (irredundant and essential)";
inline constexpr std::string_view cofinite_count =
    "each closed point in a cofinite first-neighborhood family is a localization at a distinct maximal ideal";
inline constexpr std::string_view full_neighborhood =
    "the whole first neighborhood Q1(a) intersects to a, and that representation is irredundant";
inline constexpr std::string_view proper_neighborhood =
    "a proper subset of Q1(a) gives a regular Noetherian ring with an irredundant essential representation";
inline constexpr std::string_view henselian =
    "over a Henselian D every set of pairwise incomparable points is an irredundant representation";
inline constexpr std::string_view comparable =
    "a member that contains another member can be dropped without changing the intersection";
inline constexpr std::string_view not_localization =
    "a member properly dominating a local ring of the intersection is not one of its localizations";
inline constexpr std::string_view local_ring =
    "the intersection is a single local ring of Q(D); no other member is a localization of it";
inline constexpr std::string_view complete =
    "the full closed-point set of a normal projective model over D intersects to D";
inline constexpr std::string_view henselian_proper =
    "over a Henselian D a proper sub-antichain of a complete set intersects to a strictly larger ring";
inline constexpr std::string_view blowup_proper =
    "a proper subset of Q1(D) intersects to a ring flat over a regular affine chart, strictly larger than D";
inline constexpr std::string_view double_point =
    "A u {b} with A = Q1(D) minus one coordinate point and b the opposite-direction point above it "
    "is an irredundant representation of the ordinary double point D[y^2/x] localized at (x, y, y^2/x)";
inline constexpr std::string_view unsettled = "no available result settles this case";
}  // namespace cite

namespace detail {

/// Replaces every full first neighborhood Q1(a) by the single point a (their
/// intersections agree) and drops non-minimal members, until stable. The
/// result represents the same ring.
inline SymbolicPointSet reduce_intersection(SymbolicPointSet s)
{
  for (;;) {
    s = minimal_points(s);
    auto full = std::find_if(s.cofinite().begin(), s.cofinite().end(),
                             [](const auto& kv) { return kv.second.empty(); });
    if (full == s.cofinite().end()) return s;
    PointSet singles = s.singles();
    singles.insert(full->first);
    auto cof = s.cofinite();
    cof.erase(full->first);
    s = SymbolicPointSet(std::move(singles), std::move(cof));
  }
}

/// Q1(D) minus one coordinate point, plus the point one step further in the
/// opposite coordinate direction.
inline bool is_double_point_instance(const SymbolicPointSet& s)
{
  for (auto [a, b] : {std::pair{Direction::y(), Direction::x()}, std::pair{Direction::x(), Direction::y()}}) {
    auto expected = set_union(SymbolicPointSet::first_neighborhood_minus(Point::root(), {a}),
                              SymbolicPointSet::single(Point{a, b}));
    if (s == expected) return true;
  }
  return false;
}

}  // namespace detail

inline void validate(const IntersectionDescriptor& d)
{
  if (!is_subset(d.subset, closed_points(d.model))) {
    throw Error(Errc::InvalidDescriptor, "subset contains points that are not closed points of the model");
  }
}

inline SymbolicPointSet minimal_points(const IntersectionDescriptor& d)
{
  validate(d);
  return minimal_points(d.subset);
}

/// Classifies O_U for an arbitrary symbolic set U.
inline Classification classify(const SymbolicPointSet& u, bool henselian)
{
  Classification c;
  c.noetherian_citation = std::string(cite::noetherian);

  const bool antichain = is_antichain(u);
  const bool single_atom = u.singles().empty() && u.cofinite().size() == 1;
  const SymbolicPointSet reduced = detail::reduce_intersection(u);
  if (reduced.is_finite() && reduced.singles().size() == 1) c.ring_identity = *reduced.singles().begin();

  if (detail::is_double_point_instance(u)) {
    c.maximal_ideal_count = 1;
    c.count_citation = std::string(cite::double_point);
    c.irredundant = {Verdict::Yes, std::string(cite::double_point)};
    c.essential = {Verdict::No, std::string(cite::not_localization)};
    c.singularity = "ordinary double point";
    return c;
  }

  if (reduced.is_finite()) {
    c.maximal_ideal_count = reduced.singles().size();
    c.count_citation = std::string(u.is_finite() || !c.ring_identity ? cite::finite_antichain : cite::local_ring);
  } else {
    c.count_citation = std::string(cite::cofinite_count);
  }

  if (!antichain) {
    c.irredundant = {Verdict::No, std::string(cite::comparable)};
  } else if (u.is_finite()) {
    c.irredundant = {Verdict::Yes, std::string(cite::finite_antichain)};
  } else if (single_atom) {
    const bool full = u.cofinite().begin()->second.empty();
    c.irredundant = {Verdict::Yes, std::string(full ? cite::full_neighborhood : cite::proper_neighborhood)};
  } else if (henselian) {
    c.irredundant = {Verdict::Yes, std::string(cite::henselian)};
  } else {
    c.irredundant = {Verdict::Unknown, std::string(cite::unsettled)};
  }

  if (u.is_finite()) {
    c.essential = antichain ? Judgement{Verdict::Yes, std::string(cite::finite_antichain)}
                            : Judgement{Verdict::No, std::string(cite::not_localization)};
  } else if (single_atom && !u.cofinite().begin()->second.empty()) {
    c.essential = {Verdict::Yes, std::string(cite::proper_neighborhood)};
  } else if (c.ring_identity) {
    // O_U is a local ring a; members other than a are not localizations.
    c.essential = {Verdict::No, std::string(single_atom ? cite::full_neighborhood : cite::local_ring)};
  } else {
    c.essential = {Verdict::Unknown, std::string(cite::unsettled)};
  }
  return c;
}

inline Classification classify(const IntersectionDescriptor& d)
{
  validate(d);
  return classify(d.subset, d.henselian);
}

/// Whether O_U = D.
inline Judgement is_complete_representation(const IntersectionDescriptor& d)
{
  validate(d);
  const auto all = closed_points(d.model);
  if (d.subset == all) return {Verdict::Yes, std::string(cite::complete)};
  const auto reduced = detail::reduce_intersection(d.subset);
  if (reduced == SymbolicPointSet::single(Point::root())) return {Verdict::Yes, std::string(cite::full_neighborhood)};
  if (d.henselian) return {Verdict::No, std::string(cite::henselian_proper)};
  if (d.model.base().size() == 1) return {Verdict::No, std::string(cite::blowup_proper)};
  return {Verdict::Unknown, std::string(cite::unsettled)};
}

}  // namespace qtree
