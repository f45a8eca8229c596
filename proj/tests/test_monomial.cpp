#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "qtree/monomial.hpp"
#include "qtree/testing/truncated_tree.hpp"
#include "support/oracles.hpp"

namespace qtree::monomial {
namespace {

using literals::path_of;

const Point R = Point::root();
const Point X = path_of("X"), Y = path_of("Y");
const Direction dX = Direction::x(), dY = Direction::y();

MonomialIdeal I(std::string_view s) { return parse_ideal(s); }

template <class F>
void expect_errc(F&& f, Errc code)
{
  try {
    f();
    FAIL() << "expected " << error_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code);
  }
}

TEST(Monomial, Minimization)
{
  const MonomialIdeal i({{2, 0}, {3, 1}, {0, 2}, {1, 1}, {1, 2}});
  EXPECT_EQ(i.generators(), (std::vector<Exponent>{{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_TRUE(i.is_m_primary());
  EXPECT_FALSE(I("x^2, x y").is_m_primary());
  EXPECT_TRUE(i.contains({5, 0}));
  EXPECT_FALSE(i.contains({0, 1}));
  expect_errc([] { MonomialIdeal({{-1, 2}}); }, Errc::ParseError);
}

TEST(Monomial, IntegralClosureExamples)
{
  EXPECT_EQ(integral_closure(I("x^2, y^2")), I("x^2, x y, y^2"));
  EXPECT_EQ(integral_closure(I("x, y")), I("x, y"));
  EXPECT_EQ(integral_closure(I("x^4, y^4")), I("x^4, x^3 y, x^2 y^2, x y^3, y^4"));
  EXPECT_TRUE(is_complete(I("x^2, x y, y^3")));
  EXPECT_FALSE(is_complete(I("x^2, y^2")));
  expect_errc([] { integral_closure(I("x y")); }, Errc::NotMPrimary);
}

TEST(Monomial, OrderOf)
{
  EXPECT_EQ(order_of(I("x, y")), 1);
  EXPECT_EQ(order_of(I("x^2, x y, y^3")), 2);
  EXPECT_EQ(order_of(I("x^4, x^2 y, x y^2, y^4")), 3);
}

TEST(Monomial, QuadraticTransform)
{
  EXPECT_TRUE(quadratic_transform(I("x, y"), dX).is_unit());
  EXPECT_EQ(quadratic_transform(I("x, y^2"), dY), MonomialIdeal::maximal());
  EXPECT_TRUE(quadratic_transform(I("x, y^2"), dX).is_unit());
  expect_errc([] { quadratic_transform(I("x, y"), Direction("t1")); }, Errc::NonToricPoint);
  expect_errc([] { quadratic_transform(I("x^2, y^2"), dX); }, Errc::NotComplete);
  expect_errc([] { quadratic_transform(I("x^2"), dX); }, Errc::NotMPrimary);
}

TEST(Monomial, BasePoints)
{
  EXPECT_EQ(base_points_monomial(I("x, y")).points(), PointSet{R});
  EXPECT_EQ(base_points_monomial(I("x, y^2")).points(), (PointSet{R, Y}));
  EXPECT_EQ(base_points_monomial(I("x^4, x^2 y, x y^2, y^4")).points(), (PointSet{R, X, Y}));
  expect_errc([] { base_points_monomial(MonomialIdeal::unit()); }, Errc::UnitIdeal);
}

TEST(Monomial, Factorize)
{
  EXPECT_EQ(factorize(I("x^2, x y, y^3")), CompleteIdeal::from_points(std::vector<Point>{R, Y}));
  EXPECT_EQ(factorize(I("x^4, x^2 y, x y^2, y^4")), CompleteIdeal::from_points(std::vector<Point>{R, X, Y}));
  EXPECT_EQ(factorize(I("x^2, x y, y^2")), CompleteIdeal::simple(R, 2));
  EXPECT_TRUE(factorize(MonomialIdeal::unit()).is_unit());
  expect_errc([] { factorize(I("x^2, y^2")); }, Errc::NotComplete);
}

TEST(Monomial, EuclidCorrespondence)
{
  EXPECT_EQ(point_for_valuation(MonomialValuation(1, 1)), R);
  EXPECT_EQ(point_for_valuation(MonomialValuation(1, 2)), X);
  EXPECT_EQ(point_for_valuation(MonomialValuation(2, 1)), Y);
  EXPECT_EQ(point_for_valuation(MonomialValuation(2, 3)), path_of("XY"));
  EXPECT_EQ(valuation_for_point(R), MonomialValuation(1, 1));
  EXPECT_EQ(valuation_for_point(Y), MonomialValuation(2, 1));
  EXPECT_EQ(valuation_for_point(path_of("XY")), MonomialValuation(2, 3));
  expect_errc([] { MonomialValuation(2, 4); }, Errc::NotCoprime);
  expect_errc([] { valuation_for_point(path_of("X,t1")); }, Errc::NonToricPoint);
}

TEST(Monomial, SimpleIdeals)
{
  EXPECT_EQ(simple_ideal(MonomialValuation(1, 1)), MonomialIdeal::maximal());
  EXPECT_EQ(simple_ideal(MonomialValuation(1, 2)), I("x^2, y"));
  EXPECT_EQ(simple_ideal(MonomialValuation(2, 1)), I("x, y^2"));
}

TEST(Monomial, GeneratorsForIdeal)
{
  EXPECT_EQ(generators_for_ideal(CompleteIdeal::simple(R)), MonomialIdeal::maximal());
  EXPECT_EQ(to_text(generators_for_ideal(saturate(CompleteIdeal::simple(Y)))), "x^2, x y, y^3");
  EXPECT_EQ(to_text(generators_for_ideal(CompleteIdeal::from_points(std::vector<Point>{R, X, Y}))),
            "x^4, x^2 y, x y^2, y^4");
  EXPECT_TRUE(generators_for_ideal(CompleteIdeal::unit()).is_unit());
  expect_errc([] { generators_for_ideal(CompleteIdeal::simple(path_of("Y,t1"))); }, Errc::NonToricPoint);
}

TEST(Monomial, TextRoundTrip)
{
  EXPECT_EQ(I("(x^4, x^2*y, x*y^2, y^4)"), I("x^4, x^2 y, x y^2, y^4"));
  EXPECT_EQ(to_text(I("y^3, x y, x^2")), "x^2, x y, y^3");
  EXPECT_EQ(to_text(I("1")), "1");
  EXPECT_TRUE(I("1").is_unit());
  for (const char* bad : {"", "x^", "z", "x, , y", "x^-1"}) {
    expect_errc([&] { parse_ideal(bad); }, Errc::ParseError);
  }
}

TEST(Monomial, NewtonRegionEdges)
{
  const auto r = newton_region(I("x^4, x^2 y, x y^2, y^4"));
  EXPECT_EQ(r.vertices, (std::vector<Exponent>{{0, 4}, {1, 2}, {2, 1}, {4, 0}}));
  ASSERT_EQ(r.edges.size(), 3u);
  EXPECT_EQ(r.edges[0].normal, MonomialValuation(2, 1));
  EXPECT_EQ(r.edges[1].normal, MonomialValuation(1, 1));
  EXPECT_EQ(r.edges[2].normal, MonomialValuation(1, 2));
  for (const auto& e : r.edges) EXPECT_EQ(e.length, 1);
}

// The twelve value relations behind A = D[J/(x^2 y + x y^2)] lying in D* and
// D**, for J = (x^4, x^2 y, x y^2, y^4) and the monomial valuations
// V = ord_D, V_alpha, V_beta. A relation
// "f V = g V" is v(f) = v(g); "f V inside g V" is v(f) >= v(g). The value of
// x + y is min(v(x), v(y)), exact here since these valuations are monomial.
TEST(Monomial, ThreePointChartValueRelations)
{
  struct Rel {
    std::vector<std::vector<Exponent>> lhs, rhs;  // products of polynomials, each a support list
    bool equal;
  };
  const std::vector<Exponent> x{{1, 0}}, y{{0, 1}}, x3{{3, 0}}, y3{{0, 3}}, x_plus_y{{1, 0}, {0, 1}};
  auto value = [](const MonomialValuation& v, const std::vector<std::vector<Exponent>>& factors) {
    std::int64_t s = 0;
    for (const auto& f : factors) {
      std::int64_t m = v.value(f.front());
      for (const auto& e : f) m = std::min(m, v.value(e));
      s += m;
    }
    return s;
  };
  const MonomialValuation V = valuation_for_point(R), Va = valuation_for_point(X), Vb = valuation_for_point(Y);
  EXPECT_EQ(V, MonomialValuation(1, 1));
  EXPECT_EQ(Va, MonomialValuation(1, 2));
  EXPECT_EQ(Vb, MonomialValuation(2, 1));
  const std::vector<std::pair<MonomialValuation, std::vector<Rel>>> table{
      {V, {{{x3}, {y, x_plus_y}, false}, {{y3}, {x, x_plus_y}, false}, {{x}, {x_plus_y}, true}, {{y}, {x_plus_y}, true}}},
      {Va, {{{x3}, {y, x_plus_y}, true}, {{y3}, {x, x_plus_y}, false}, {{x}, {x_plus_y}, true}, {{y}, {x_plus_y}, false}}},
      {Vb, {{{x3}, {y, x_plus_y}, false}, {{y3}, {x, x_plus_y}, true}, {{x}, {x_plus_y}, false}, {{y}, {x_plus_y}, true}}},
  };
  int checked = 0;
  for (const auto& [v, rels] : table) {
    for (const auto& r : rels) {
      const auto l = value(v, r.lhs), g = value(v, r.rhs);
      if (r.equal) {
        EXPECT_EQ(l, g) << v;
      } else {
        EXPECT_GE(l, g) << v;
      }
      ++checked;
    }
  }
  EXPECT_EQ(checked, 12);
}

TEST(MonomialProperty, ClosureAgreesWithPowerOracle)
{
  std::mt19937_64 rng(oracle::seed());
  for (int trial = 0; trial < 1000; ++trial) {
    const auto gens = oracle::random_m_primary(rng);
    const MonomialIdeal i(gens);
    const auto c = integral_closure(i);
    ASSERT_EQ(c, MonomialIdeal(oracle::closure_by_powers(gens, oracle::kMaxExponent, oracle::kSufficientPower))) << i;
    ASSERT_EQ(integral_closure(c), c);
    for (const auto& g : i.generators()) ASSERT_TRUE(c.contains(g));
  }
}

// The stated k <= 6 envelope is too small for exponents up to 8.
TEST(MonomialProperty, PowerBoundSixMissesLengthSevenEdges)
{
  const std::vector<Exponent> gens{{7, 0}, {0, 7}};
  const auto six = MonomialIdeal(oracle::closure_by_powers(gens, 7, 6));
  const auto seven = MonomialIdeal(oracle::closure_by_powers(gens, 7, 7));
  EXPECT_FALSE(six.contains({6, 1}));
  EXPECT_TRUE(seven.contains({6, 1}));
  EXPECT_EQ(seven, integral_closure(MonomialIdeal(gens)));
}

TEST(MonomialProperty, ProductsAndMinkowskiSums)
{
  std::mt19937_64 rng(oracle::seed() + 2);
  for (int trial = 0; trial < 1000; ++trial) {
    const MonomialIdeal i(oracle::random_m_primary(rng)), j(oracle::random_m_primary(rng));
    const auto ij = product(i, j);
    ASSERT_EQ(integral_closure(product(integral_closure(i), integral_closure(j))), integral_closure(ij));
    ASSERT_EQ(newton_region(integral_closure(ij)), minkowski_sum(newton_region(i), newton_region(j)));
  }
}

TEST(MonomialProperty, FactorizationRoundTrips)
{
  std::mt19937_64 rng(oracle::seed() + 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto c = integral_closure(MonomialIdeal(oracle::random_m_primary(rng)));
    if (c.is_unit()) continue;
    const auto f = factorize(c);
    ASSERT_EQ(generators_for_ideal(f), c);
    // Rees valuations are the edge normals, one per edge
    const auto r = newton_region(c);
    std::set<OrderValuation> normals;
    for (const auto& e : r.edges) normals.insert(OrderValuation{point_for_valuation(e.normal)});
    ASSERT_EQ(normals, rees_valuations(f));
    ASSERT_EQ(normals.size(), r.edges.size());
  }
  const std::vector<Direction> toric{dX, dY};
  for (int trial = 0; trial < 300; ++trial) {
    CompleteIdeal::Factors fs;
    for (int k = 1 + static_cast<int>(rng() % 3); k > 0; --k) {
      fs[oracle::random_point(rng, 3, toric)] += 1 + static_cast<unsigned>(rng() % 2);
    }
    const CompleteIdeal j(fs);
    ASSERT_EQ(factorize(generators_for_ideal(j)), j) << j;
  }
}

TEST(MonomialProperty, BasePointsAgreeWithCombinatorialLayer)
{
  testing::TruncatedTree tree(3, {dX, dY});
  for (const auto& mask : tree.downward_closed_sets(tree.size(), {dX, dY})) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < tree.size(); ++i) {
      if (mask[i]) pts.push_back(tree.points()[i]);
    }
    const auto j = CompleteIdeal::from_points(pts);
    const auto gens = generators_for_ideal(j);
    ASSERT_EQ(base_points_monomial(gens), base_points(j)) << j;
    ASSERT_EQ(factorize(gens), j);
  }
}

TEST(MonomialProperty, TransformsFollowSimplePoint)
{
  testing::TruncatedTree tree(4, {dX, dY});
  for (const auto& a : tree.points()) {
    MonomialIdeal cur = simple_ideal(valuation_for_point(a));
    for (const auto& d : a.path()) {
      ASSERT_FALSE(cur.is_unit());
      cur = quadratic_transform(cur, d);
    }
    ASSERT_EQ(cur, MonomialIdeal::maximal()) << a;
    ASSERT_TRUE(quadratic_transform(cur, dX).is_unit());
    ASSERT_TRUE(quadratic_transform(cur, dY).is_unit());
  }
}

TEST(MonomialProperty, EuclidRoundTrip)
{
  for (std::int64_t p = 1; p < 30; ++p) {
    for (std::int64_t q = 1; p + q <= 30; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const MonomialValuation v(p, q);
      const Point pt = point_for_valuation(v);
      ASSERT_TRUE(pt.is_toric());
      ASSERT_EQ(valuation_for_point(pt), v);
      // level is the sum of the continued-fraction partial quotients, minus one
      std::int64_t a = p, b = q, quotients = 0;
      while (b != 0) {
        quotients += a / b;
        a %= b;
        std::swap(a, b);
      }
      ASSERT_EQ(static_cast<std::int64_t>(pt.level()), quotients - 1);
    }
  }
}

}  // namespace
}  // namespace qtree::monomial
