#include <doctest.h>

#include "dualis/dualcurve.hpp"
#include "dualis/error.hpp"
#include "oracles.hpp"

using namespace dualis;

namespace {

RationalParamCurve curve(const std::string& x, const std::string& y) {
  return {RatFunc::parse(x), RatFunc::parse(y)};
}

// Affine points of y^2 = x^3 + 17 with group-law sums, as projective points (x : y : 1).
using Point = std::pair<Rational, Rational>;

Point add(const Point& p, const Point& q) {
  Rational lambda = p == q ? Rational(3 * p.first * p.first / (2 * p.second))
                           : Rational((q.second - p.second) / (q.first - p.first));
  Rational x = lambda * lambda - p.first - q.first;
  return {x, lambda * (p.first - x) - p.second};
}

}  // namespace

TEST_CASE("parabola dual golden value") {
  RationalParamCurve d = dual_parametric(curve("t", "t^2"));
  CHECK(d.x == RatFunc::parse("(2)/(t)"));
  CHECK(d.y == RatFunc::parse("(-1)/(t^2)"));
}

TEST_CASE("dual of the unit circle lies on the unit circle") {
  RationalParamCurve d = dual_parametric(curve("(1 - t^2)/(1 + t^2)", "(2*t)/(1 + t^2)"));
  CHECK(d.x * d.x + d.y * d.y == RatFunc::parse("1"));
}

TEST_CASE("biduality on non-linear rational curves") {
  const std::vector<std::pair<std::string, std::string>> curves{
      {"t", "t^2"},
      {"t^2", "t^3"},
      {"(1 - t^2)/(1 + t^2)", "(2*t)/(1 + t^2)"},
      {"t^2 - 1", "t^3 - t"},
      {"t", "(1)/(t)"},
      {"t^3", "t^4 + t"},
      {"(t^2 + 1)/(t - 3)", "t^2 - 2*t"},
  };
  for (const auto& [x, y] : curves) {
    RationalParamCurve c = curve(x, y);
    CAPTURE(x);
    CAPTURE(y);
    CHECK(dual_parametric(dual_parametric(c)) == c);
  }
}

TEST_CASE("lines dualize to points or degenerate") {
  // y = 2x + 1 is the line -2x + y = 1, i.e. the dual point (-2, 1).
  RationalParamCurve p = dual_parametric(curve("t", "2*t + 1"));
  CHECK(p.x == RatFunc::parse("-2"));
  CHECK(p.y == RatFunc::parse("1"));
  CHECK_THROWS_AS(dual_parametric(curve("t", "2*t")), DomainError);
  CHECK_THROWS_AS(dual_parametric(curve("3", "5")), DomainError);
}

TEST_CASE("dual conic golden cases") {
  CHECK(dual_conic(RatMatrix::identity(3)) == RatMatrix::identity(3));
  RatMatrix d = parse_matrix("1,0,0;0,1,0;0,0,-1");
  CHECK(dual_conic(d) == d);
  CHECK_THROWS_AS(dual_conic(parse_matrix("1,0,0;0,1,0;0,0,0")), DomainError);
  CHECK_THROWS_AS(dual_conic(parse_matrix("1,2,0;0,1,0;0,0,1")), DomainError);
}

TEST_CASE("dual conic is symmetric and an involution up to scalar") {
  oracle::Rng rng(21);
  int tested = 0;
  while (tested < 50) {
    RatMatrix a(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) a(i, j) = a(j, i) = oracle::random_rational(rng);
    if (oracle::leibniz_det(a) == 0) continue;
    ++tested;
    RatMatrix d = dual_conic(a);
    CHECK(d.transpose() == d);
    CHECK(dual_conic(d) == normalize_projective(a));
    // The dual of a conic x^T A x = 0 is p^T A^{-1} p = 0.
    CHECK(normalize_projective(dualis::inverse(a)) == d);
  }
}

TEST_CASE("Schläfli sextic of the Fermat cubic") {
  MultiPoly f = MultiPoly::parse("x^3 + y^3 + z^3");
  MultiPoly dual = dual_cubic_schlafli(f);
  CHECK(dual.total_degree() == 6);
  CHECK(dual.is_homogeneous());
  CHECK(dual.evaluate({1, 1, 0}) == 0);
  // Raw output is quartic in the coefficients of f.
  MultiPoly raw = dual_cubic_schlafli(f, false), raw3 = dual_cubic_schlafli(f.scaled(3), false);
  CHECK(raw3 == raw.scaled(81));
}

TEST_CASE("Schläfli sextic vanishes on tangent lines of a smooth cubic") {
  MultiPoly f = MultiPoly::parse("y^2*z - x^3 - 17*z^3");
  MultiPoly dual = dual_cubic_schlafli(f);
  CHECK(dual.total_degree() == 6);
  std::vector<Point> base{{-2, 3}, {-1, 4}, {2, 5}, {4, 9}, {8, 23}, {43, 282}, {52, 375}};
  std::vector<Point> pts;
  for (const auto& p : base) {
    pts.push_back(p);
    pts.push_back({p.first, -p.second});
  }
  for (std::size_t i = 0; i + 1 < base.size(); ++i) pts.push_back(add(base[i], base[i + 1]));
  pts.push_back(add(base[0], base[0]));
  REQUIRE(pts.size() >= 20);
  for (const auto& [x, y] : pts) {
    // The dual coordinates p0, p1, p2 follow f's variable order, here y, z, x.
    std::vector<Rational> point(3);
    point[f.variable_index("x")] = x;
    point[f.variable_index("y")] = y;
    point[f.variable_index("z")] = 1;
    REQUIRE(f.evaluate(point) == 0);
    std::vector<Rational> gradient;
    for (std::size_t v = 0; v < 3; ++v) gradient.push_back(f.derivative(v).evaluate(point));
    CHECK(dual.evaluate(gradient) == 0);
  }
}

TEST_CASE("Plücker golden values") {
  CHECK(plucker_solve(3, 0, 0) == PluckerData{3, 6, 1, 0, 0, 0, 9});
  CHECK(plucker_solve(4, 0, 0) == PluckerData{4, 12, 3, 0, 0, 28, 24});
  CHECK(plucker_solve(2, 0, 0) == PluckerData{2, 2, 0, 0, 0, 0, 0});
}

TEST_CASE("Plücker solutions are consistent and pair with their duals") {
  for (long d = 2; d <= 9; ++d)
    for (long delta = 0; delta <= 3; ++delta)
      for (long kappa = 0; kappa <= 3; ++kappa) {
        if (delta + kappa > (d - 1) * (d - 2) / 2) continue;
        PluckerData p = plucker_solve(d, delta, kappa);
        CHECK(plucker_consistent(p));
        PluckerData q = plucker_dual(p);
        CHECK(plucker_consistent(q));
        CHECK(q.f == p.kappa);
        CHECK(q.b == p.delta);
        CHECK(q.d == p.d_star);
        CHECK(plucker_dual(q) == p);
      }
}

TEST_CASE("discriminant multiplicity along a degenerate curve") {
  CHECK(plane_dual_multiplicity(2, 1, 0) == 2);
  CHECK(plane_dual_multiplicity(3, 0, 1) == 1);
  CHECK(plane_dual_multiplicity(5, 0, 0) == 0);
}
