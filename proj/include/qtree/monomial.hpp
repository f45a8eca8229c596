#pragma once

// Monomial ideals of k[x,y] localized at (x,y): a concrete model of the
// complete-ideal calculus.
//
// Everything here works on exponent pairs only, so the coefficient field and
// its characteristic play no role. Only the two coordinate quadratic
// transforms are implemented; a transform in a non-coordinate direction
// destroys monomiality. That loses nothing: every Rees valuation of a monomial
// ideal is a monomial valuation (one per Newton polygon edge), so every base
// point of a complete monomial ideal is reached through X/Y directions.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtree/complete_ideal.hpp"
#include "qtree/error.hpp"
#include "qtree/point.hpp"

namespace qtree::monomial {

/// Exponent (a,b) of the monomial x^a y^b.
struct Exponent {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend Exponent operator+(Exponent l, Exponent r) { return {l.a + r.a, l.b + r.b}; }

  bool divides(const Exponent& o) const noexcept { return a <= o.a && b <= o.b; }
};

/// A monomial ideal held as its minimal generating set, sorted by increasing
/// a (and therefore strictly decreasing b). No generators is the zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  explicit MonomialIdeal(std::vector<Exponent> gens) : gens_(minimize(std::move(gens))) {}
  MonomialIdeal(std::initializer_list<Exponent> gens) : MonomialIdeal(std::vector<Exponent>(gens)) {}

  static MonomialIdeal unit() { return MonomialIdeal({Exponent{0, 0}}); }
  static MonomialIdeal maximal() { return MonomialIdeal({Exponent{1, 0}, Exponent{0, 1}}); }

  const std::vector<Exponent>& generators() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return !gens_.empty() && gens_.front() == Exponent{0, 0}; }

  /// Contains a pure power of x and a pure power of y.
  bool is_m_primary() const noexcept
  {
    return !gens_.empty() && gens_.front().a == 0 && gens_.back().b == 0;
  }

  bool contains(const Exponent& e) const noexcept
  {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return g.divides(e); });
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  static std::vector<Exponent> minimize(std::vector<Exponent> gens)
  {
    for (const auto& g : gens) {
      if (g.a < 0 || g.b < 0) throw Error(Errc::ParseError, "negative exponent in monomial ideal");
    }
    std::sort(gens.begin(), gens.end());
    std::vector<Exponent> out;
    for (const auto& g : gens) {
      // Sorted by a then b: g is redundant iff some kept generator has b <= g.b.
      if (out.empty() || g.b < out.back().b) out.push_back(g);
    }
    return out;
  }

  std::vector<Exponent> gens_;
};

inline MonomialIdeal product(const MonomialIdeal& i, const MonomialIdeal& j)
{
  std::vector<Exponent> out;
  out.reserve(i.generators().size() * j.generators().size());
  for (const auto& g : i.generators()) {
    for (const auto& h : j.generators()) out.push_back(g + h);
  }
  return MonomialIdeal(std::move(out));
}

inline MonomialIdeal power(const MonomialIdeal& i, unsigned k)
{
  MonomialIdeal out = MonomialIdeal::unit();
  for (unsigned n = 0; n < k; ++n) out = product(out, i);
  return out;
}

/// The monomial valuation v(x^a y^b) = p*a + q*b, p and q coprime positive.
class MonomialValuation {
 public:
  MonomialValuation(std::int64_t p, std::int64_t q) : p_(p), q_(q)
  {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1) {
      throw Error(Errc::NotCoprime, "monomial valuation weights must be coprime positive integers, got (" +
                                        std::to_string(p) + "," + std::to_string(q) + ")");
    }
  }

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }

  std::int64_t value(const Exponent& e) const noexcept { return p_ * e.a + q_ * e.b; }

  /// Value of a polynomial with the given support. A monomial valuation
  /// takes the minimum over the monomials present, so sums like x + y have
  /// v(x + y) = min(v(x), v(y)) with no cancellation possible.
  std::int64_t value(std::initializer_list<Exponent> support) const
  {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& e : support) best = std::min(best, value(e));
    return best;
  }

  std::int64_t value(const MonomialIdeal& i) const
  {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& e : i.generators()) best = std::min(best, value(e));
    return best;
  }

  friend bool operator==(const MonomialValuation&, const MonomialValuation&) = default;
  friend auto operator<=>(const MonomialValuation&, const MonomialValuation&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

inline std::ostream& operator<<(std::ostream& os, const MonomialValuation& v)
{
  return os << '(' << v.p() << ',' << v.q() << ')';
}

struct Edge {
  Exponent from;
  Exponent to;
  MonomialValuation normal;
  std::int64_t length;  ///< lattice length
};

/// Boundary of conv(generators) + R^2_{>=0}: the lower-left hull vertices by
/// increasing a, and the compact edges between them.
struct NewtonRegion {
  std::vector<Exponent> vertices;
  std::vector<Edge> edges;

  friend bool operator==(const NewtonRegion& l, const NewtonRegion& r) { return l.vertices == r.vertices; }
};

namespace detail {

inline void require_m_primary(const MonomialIdeal& i)
{
  if (!i.is_m_primary()) throw Error(Errc::NotMPrimary, "monomial ideal is not (x,y)-primary");
}

inline std::int64_t cross(const Exponent& o, const Exponent& u, const Exponent& w) noexcept
{
  return (u.a - o.a) * (w.b - o.b) - (u.b - o.b) * (w.a - o.a);
}

inline NewtonRegion region_from_vertices(std::vector<Exponent> hull)
{
  NewtonRegion r;
  r.vertices = std::move(hull);
  for (std::size_t k = 0; k + 1 < r.vertices.size(); ++k) {
    const auto& u = r.vertices[k];
    const auto& w = r.vertices[k + 1];
    const std::int64_t dx = w.a - u.a, dy = u.b - w.b;
    const std::int64_t g = std::gcd(dx, dy);
    r.edges.push_back(Edge{u, w, MonomialValuation(dy / g, dx / g), g});
  }
  return r;
}

}  // namespace detail

inline NewtonRegion newton_region(const MonomialIdeal& i)
{
  detail::require_m_primary(i);
  std::vector<Exponent> hull;
  for (const auto& g : i.generators()) {
    while (hull.size() >= 2 && detail::cross(hull[hull.size() - 2], hull.back(), g) <= 0) hull.pop_back();
    hull.push_back(g);
  }
  return detail::region_from_vertices(std::move(hull));
}

namespace detail {

/// One compact edge as a (run, drop) step along the boundary.
struct Step {
  std::int64_t dx, dy;
};

/// Region whose boundary walks the given steps from (0, height), steepest
/// first. Collinear steps merge into one edge.
inline NewtonRegion region_from_steps(std::vector<Step> steps, std::int64_t height)
{
  std::stable_sort(steps.begin(), steps.end(),
                   [](const Step& s, const Step& t) { return s.dy * t.dx > t.dy * s.dx; });
  std::vector<Exponent> hull{Exponent{0, height}};
  for (const auto& s : steps) {
    Exponent next{hull.back().a + s.dx, hull.back().b - s.dy};
    if (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), next) == 0) {
      hull.back() = next;
    } else {
      hull.push_back(next);
    }
  }
  return region_from_vertices(std::move(hull));
}

}  // namespace detail

/// Minkowski sum of two Newton regions: concatenate edges sorted by slope.
inline NewtonRegion minkowski_sum(const NewtonRegion& l, const NewtonRegion& r)
{
  std::vector<detail::Step> steps;
  for (const auto* reg : {&l, &r}) {
    for (const auto& e : reg->edges) steps.push_back({e.to.a - e.from.a, e.from.b - e.to.b});
  }
  return detail::region_from_steps(std::move(steps), l.vertices.front().b + r.vertices.front().b);
}

/// Smallest b with (a, b) in the region, for 0 <= a <= last vertex's a.
inline std::int64_t lower_boundary(const NewtonRegion& r, std::int64_t a)
{
  if (a >= r.vertices.back().a) return 0;
  for (const auto& e : r.edges) {
    if (a <= e.to.a) {
      const std::int64_t run = e.to.a - e.from.a, drop = e.from.b - e.to.b;
      return e.from.b - (drop * (a - e.from.a)) / run;  // ceil of the line value
    }
  }
  return r.vertices.front().b;
}

/// Lattice points of a region, as a minimal generating set.
inline MonomialIdeal lattice_points(const NewtonRegion& r)
{
  std::vector<Exponent> gens;
  std::int64_t prev = std::numeric_limits<std::int64_t>::max();
  std::size_t k = 0;
  for (std::int64_t a = 0; a <= r.vertices.back().a; ++a) {
    while (k < r.edges.size() && a > r.edges[k].to.a) ++k;
    std::int64_t b = 0;
    if (k < r.edges.size()) {
      const auto& e = r.edges[k];
      const std::int64_t run = e.to.a - e.from.a, drop = e.from.b - e.to.b;
      b = e.from.b - (drop * (a - e.from.a)) / run;
    }
    if (b < prev) gens.push_back({a, b});
    prev = b;
  }
  return MonomialIdeal(std::move(gens));
}

inline MonomialIdeal integral_closure(const MonomialIdeal& i)
{
  detail::require_m_primary(i);
  if (i.is_unit()) return i;
  return lattice_points(newton_region(i));
}

inline bool is_complete(const MonomialIdeal& i) { return integral_closure(i) == i; }

/// ord_D: the largest n with I inside (x,y)^n.
inline std::int64_t order_of(const MonomialIdeal& i)
{
  detail::require_m_primary(i);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& g : i.generators()) best = std::min(best, g.a + g.b);
  return best;
}

namespace detail {
inline MonomialIdeal transform_complete(const MonomialIdeal& i, const Direction& dir)
{
  const std::int64_t ord = order_of(i);
  std::vector<Exponent> out;
  out.reserve(i.generators().size());
  for (const auto& g : i.generators()) {
    out.push_back(dir.is_x() ? Exponent{g.a + g.b - ord, g.b} : Exponent{g.a, g.a + g.b - ord});
  }
  return integral_closure(MonomialIdeal(std::move(out)));
}
}  // namespace detail

/// Transform of a complete ideal at the X or Y point of the first
/// neighborhood: extend, then divide out the order power of the exceptional
/// parameter. May return the unit ideal.
inline MonomialIdeal quadratic_transform(const MonomialIdeal& i, const Direction& dir)
{
  detail::require_m_primary(i);
  if (!dir.is_coordinate()) {
    throw Error(Errc::NonToricPoint, "monomial transforms exist only in the X and Y directions, got " + dir.token());
  }
  if (!is_complete(i)) throw Error(Errc::NotComplete, "quadratic transform expects a complete ideal");
  return detail::transform_complete(i, dir);
}

namespace detail {
inline void collect_base_points(const MonomialIdeal& i, const Point& here, PointSet& out)
{
  out.insert(here);
  for (const auto& dir : {Direction::x(), Direction::y()}) {
    auto t = transform_complete(i, dir);
    if (!t.is_unit()) collect_base_points(t, here.child(dir), out);
  }
}
}  // namespace detail

/// Points where the successive transforms stay proper, found by recursing
/// through the X and Y children. Finite because base-point sets are.
inline BasePointSet base_points_monomial(const MonomialIdeal& i)
{
  detail::require_m_primary(i);
  if (i.is_unit()) throw Error(Errc::UnitIdeal, "the unit ideal has no base points");
  PointSet out;
  detail::collect_base_points(integral_closure(i), Point::root(), out);
  return BasePointSet(std::move(out));
}

/// Euclidean subtraction: X when q > p (q -= p), Y otherwise (p -= q).
inline Point point_for_valuation(const MonomialValuation& v)
{
  std::int64_t p = v.p(), q = v.q();
  std::vector<Direction> path;
  while (p != 1 || q != 1) {
    if (q > p) {
      path.push_back(Direction::x());
      q -= p;
    } else {
      path.push_back(Direction::y());
      p -= q;
    }
  }
  return Point(std::move(path));
}

inline MonomialValuation valuation_for_point(const Point& pt)
{
  std::int64_t p = 1, q = 1;
  for (auto it = pt.path().rbegin(); it != pt.path().rend(); ++it) {
    if (it->is_x()) {
      q += p;
    } else if (it->is_y()) {
      p += q;
    } else {
      throw Error(Errc::NonToricPoint, "point uses non-coordinate direction " + it->token());
    }
  }
  return MonomialValuation(p, q);
}

/// x^a y^b in the regular parameters of a toric point, as a Laurent
/// exponent. The point contains the monomial iff both entries are >= 0.
inline Exponent local_exponents(const Point& pt, Exponent e)
{
  for (const auto& d : pt.path()) {
    if (d.is_x()) {
      e = {e.a + e.b, e.b};  // y = x * y'
    } else if (d.is_y()) {
      e = {e.a, e.a + e.b};  // x = x' * y
    } else {
      throw Error(Errc::NonToricPoint, "point uses non-coordinate direction " + d.token());
    }
  }
  return e;
}

/// The simple complete ideal of v: lattice points with p*a + q*b >= p*q,
/// i.e. the closure of (x^q, y^p).
inline MonomialIdeal simple_ideal(const MonomialValuation& v)
{
  return integral_closure(MonomialIdeal({Exponent{v.q(), 0}, Exponent{0, v.p()}}));
}

/// Zariski factorization: one simple factor per Newton edge, with the edge's
/// lattice length as multiplicity.
inline CompleteIdeal factorize(const MonomialIdeal& i)
{
  detail::require_m_primary(i);
  if (!is_complete(i)) throw Error(Errc::NotComplete, "factorization expects a complete ideal");
  CompleteIdeal::Factors f;
  if (i.is_unit()) return CompleteIdeal(std::move(f));
  for (const auto& e : newton_region(i).edges) {
    f[point_for_valuation(e.normal)] += static_cast<unsigned>(e.length);
  }
  return CompleteIdeal(std::move(f));
}

/// The product of the simple factors, read off the Minkowski sum of their
/// Newton regions (a product of complete ideals is complete).
inline MonomialIdeal generators_for_ideal(const CompleteIdeal& j)
{
  for (const auto& [p, m] : j.factors()) {
    if (!p.is_toric()) throw Error(Errc::NonToricPoint, "factor point has non-coordinate directions");
  }
  if (j.is_unit()) return MonomialIdeal::unit();
  std::vector<detail::Step> steps;
  std::int64_t height = 0;
  for (const auto& [p, m] : j.factors()) {
    const auto v = valuation_for_point(p);
    steps.push_back({v.q() * m, v.p() * m});
    height += v.p() * m;
  }
  return lattice_points(detail::region_from_steps(std::move(steps), height));
}

// -- text format ------------------------------------------------------------

inline std::string term_to_text(const Exponent& e)
{
  if (e.a == 0 && e.b == 0) return "1";
  std::string s;
  if (e.a > 0) s += e.a == 1 ? std::string("x") : "x^" + std::to_string(e.a);
  if (e.b > 0) {
    if (!s.empty()) s += ' ';
    s += e.b == 1 ? std::string("y") : "y^" + std::to_string(e.b);
  }
  return s;
}

/// "x^4, x^2 y, x y^2, y^4": generators by decreasing power of x.
inline std::string to_text(const MonomialIdeal& i)
{
  if (i.is_zero()) return "0";
  std::string out;
  for (auto it = i.generators().rbegin(); it != i.generators().rend(); ++it) {
    if (!out.empty()) out += ", ";
    out += term_to_text(*it);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const MonomialIdeal& i) { return os << '(' << to_text(i) << ')'; }

inline MonomialIdeal parse_ideal(std::string_view text)
{
  auto fail = [&](const std::string& why) -> Error {
    return Error(Errc::ParseError, "cannot parse monomial ideal \"" + std::string(text) + "\": " + why);
  };
  std::vector<Exponent> gens;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*')) ++pos;
  };
  auto read_int = [&]() -> std::int64_t {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw fail("expected an exponent");
    return std::stoll(std::string(text.substr(start, pos - start)));
  };
  if (text.find_first_not_of(" \t\r\n()") == std::string_view::npos) throw fail("empty input");
  while (true) {
    skip_space();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      skip_space();
    }
    Exponent e;
    bool any = false;
    while (pos < text.size() && text[pos] != ',' && text[pos] != ')') {
      const char c = text[pos];
      if (c == 'x' || c == 'y') {
        ++pos;
        std::int64_t k = 1;
        skip_space();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_space();
          k = read_int();
        }
        (c == 'x' ? e.a : e.b) += k;
        any = true;
      } else if (c == '1') {
        ++pos;
        any = true;
      } else {
        throw fail(std::string("unexpected character '") + c + "'");
      }
      skip_space();
    }
    if (!any) throw fail("empty term");
    gens.push_back(e);
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_space();
      if (pos != text.size()) throw fail("trailing characters");
      break;
    }
    if (pos >= text.size()) break;
    ++pos;  // ','
  }
  return MonomialIdeal(std::move(gens));
}

}  // namespace qtree::monomial
