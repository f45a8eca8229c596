#pragma once

// qtree/1 JSON encodings. Output is always canonical (points in canonical
// order, symbolic sets canonicalized), so identical values serialize to
// identical bytes. Unknown keys are ignored on input, which lets every output
// document be fed back as input.

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qtree/complete_ideal.hpp"
#include "qtree/intersection.hpp"
#include "qtree/model.hpp"
#include "qtree/monomial.hpp"
#include "qtree/symbolic_set.hpp"

namespace qtree::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "qtree/1";

namespace detail {

[[noreturn]] inline void fail(const std::string& what) { throw Error(Errc::ParseError, what); }

inline const Json& field(const Json& j, const char* key)
{
  if (!j.is_object()) fail(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

inline const Json& array_field(const Json& j, const char* key)
{
  const Json& a = field(j, key);
  if (!a.is_array()) fail(std::string("\"") + key + "\" must be an array");
  return a;
}

inline std::int64_t to_int(const Json& j, const char* what)
{
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace detail

// -- tree core ----------------------------------------------------------------

inline Json to_json(const Point& p)
{
  Json path = Json::array();
  for (const auto& d : p.path()) path.push_back(d.token());
  return Json{{"path", std::move(path)}};
}

inline Point point_from_json(const Json& j)
{
  std::vector<Direction> path;
  for (const auto& t : detail::array_field(j, "path")) {
    if (!t.is_string() || t.get<std::string>().empty()) detail::fail("direction labels must be nonempty strings");
    path.emplace_back(t.get<std::string>());
  }
  return Point(std::move(path));
}

template <class Range>
Json points_to_json(const Range& points)
{
  Json out = Json::array();
  for (const Point& p : points) out.push_back(to_json(p));
  return out;
}

inline std::vector<Point> points_from_json(const Json& arr)
{
  if (!arr.is_array()) detail::fail("expected an array of points");
  std::vector<Point> out;
  for (const auto& p : arr) out.push_back(point_from_json(p));
  return out;
}

inline Json to_json(const SymbolicPointSet& s)
{
  Json cof = Json::array();
  for (const auto& [base, excl] : s.cofinite()) {
    Json e = Json::array();
    for (const auto& d : excl) e.push_back(d.token());
    cof.push_back(Json{{"base", to_json(base)}, {"excluded", std::move(e)}});
  }
  return Json{{"singles", points_to_json(s.singles())}, {"cofinite", std::move(cof)}};
}

inline SymbolicPointSet symbolic_set_from_json(const Json& j)
{
  PointSet singles;
  if (j.contains("singles")) {
    for (auto& p : points_from_json(j["singles"])) singles.insert(std::move(p));
  }
  SymbolicPointSet out(std::move(singles), {});
  if (j.contains("cofinite")) {
    if (!j["cofinite"].is_array()) detail::fail("\"cofinite\" must be an array");
    for (const auto& atom : j["cofinite"]) {
      DirectionSet excl;
      for (const auto& t : detail::array_field(atom, "excluded")) {
        if (!t.is_string() || t.get<std::string>().empty()) detail::fail("direction labels must be nonempty strings");
        excl.emplace(t.get<std::string>());
      }
      out = set_union(out, SymbolicPointSet::first_neighborhood_minus(point_from_json(detail::field(atom, "base")),
                                                                      std::move(excl)));
    }
  }
  return out;
}

// -- complete ideals, models ----------------------------------------------------

inline Json to_json(const CompleteIdeal& i)
{
  Json f = Json::array();
  for (const auto& [p, m] : i.factors()) f.push_back(Json{{"point", to_json(p)}, {"mult", m}});
  return Json{{"factors", std::move(f)}};
}

inline CompleteIdeal complete_ideal_from_json(const Json& j)
{
  CompleteIdeal::Factors f;
  for (const auto& e : detail::array_field(j, "factors")) {
    const auto mult = e.contains("mult") ? detail::to_int(e["mult"], "mult") : 1;
    if (mult < 1) detail::fail("factor multiplicities must be positive");
    f[point_from_json(detail::field(e, "point"))] += static_cast<unsigned>(mult);
  }
  return CompleteIdeal(std::move(f));
}

inline Json to_json(const BasePointSet& b) { return points_to_json(b.points()); }

inline Json to_json(const NonsingularModel& m) { return Json{{"base", to_json(m.base())}}; }

inline NonsingularModel model_from_json(const Json& j)
{
  PointSet pts;
  for (auto& p : points_from_json(detail::field(j, "base"))) pts.insert(std::move(p));
  return NonsingularModel(BasePointSet(std::move(pts)));
}

// -- intersections ------------------------------------------------------------

inline Json to_json(const IntersectionDescriptor& d)
{
  return Json{{"model", to_json(d.model)}, {"subset", to_json(d.subset)}, {"henselian", d.henselian}};
}

inline IntersectionDescriptor descriptor_from_json(const Json& j)
{
  IntersectionDescriptor d;
  d.model = model_from_json(detail::field(j, "model"));
  d.subset = symbolic_set_from_json(detail::field(j, "subset"));
  if (j.contains("henselian")) {
    if (!j["henselian"].is_boolean()) detail::fail("\"henselian\" must be a boolean");
    d.henselian = j["henselian"].get<bool>();
  }
  return d;
}

inline Json to_json(const Judgement& v) { return std::string(to_string(v.verdict)); }

inline Json to_json(const Classification& c)
{
  Json out;
  out["noetherian"] = c.noetherian;
  out["noetherianCitation"] = c.noetherian_citation;
  if (c.maximal_ideal_count) {
    out["maximalIdealCount"] = *c.maximal_ideal_count;
  } else {
    out["maximalIdealCount"] = "INFINITE";
  }
  out["maximalIdealCountCitation"] = c.count_citation;
  out["irredundant"] = to_string(c.irredundant.verdict);
  out["irredundantCitation"] = c.irredundant.citation;
  out["essential"] = to_string(c.essential.verdict);
  out["essentialCitation"] = c.essential.citation;
  out["ringIdentity"] = c.ring_identity ? to_json(*c.ring_identity) : Json(nullptr);
  out["singularity"] = c.singularity ? Json(*c.singularity) : Json(nullptr);
  return out;
}

// -- monomial backend -----------------------------------------------------------

inline Json to_json(const monomial::Exponent& e) { return Json::array({e.a, e.b}); }

inline Json to_json(const monomial::MonomialIdeal& i)
{
  Json g = Json::array();
  for (const auto& e : i.generators()) g.push_back(to_json(e));
  return Json{{"gens", std::move(g)}};
}

/// Accepts {"gens": [[a,b], ...]} or {"ideal": "x^2, x y, y^3"}.
inline monomial::MonomialIdeal monomial_ideal_from_json(const Json& j)
{
  if (j.is_object() && j.contains("ideal")) {
    if (!j["ideal"].is_string()) detail::fail("\"ideal\" must be a string");
    return monomial::parse_ideal(j["ideal"].get<std::string>());
  }
  std::vector<monomial::Exponent> gens;
  for (const auto& e : detail::array_field(j, "gens")) {
    if (!e.is_array() || e.size() != 2) detail::fail("generators are [a, b] pairs");
    gens.push_back({detail::to_int(e[0], "exponent"), detail::to_int(e[1], "exponent")});
  }
  return monomial::MonomialIdeal(std::move(gens));
}

inline Json to_json(const monomial::MonomialValuation& v) { return Json{{"p", v.p()}, {"q", v.q()}}; }

inline monomial::MonomialValuation valuation_from_json(const Json& j)
{
  return monomial::MonomialValuation(detail::to_int(detail::field(j, "p"), "p"),
                                     detail::to_int(detail::field(j, "q"), "q"));
}

inline Json to_json(const monomial::NewtonRegion& r)
{
  Json v = Json::array();
  for (const auto& e : r.vertices) v.push_back(to_json(e));
  Json edges = Json::array();
  for (const auto& e : r.edges) {
    edges.push_back(Json{{"from", to_json(e.from)},
                         {"to", to_json(e.to)},
                         {"normal", Json::array({e.normal.p(), e.normal.q()})},
                         {"length", e.length}});
  }
  return Json{{"vertices", std::move(v)}, {"edges", std::move(edges)}};
}

/// Parses text into a JSON value, mapping syntax errors to ParseError.
inline Json parse(const std::string& text)
{
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    detail::fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace qtree::io
