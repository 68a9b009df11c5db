#pragma once

#include <string>
#include <string_view>

#include "dualis/matrix.hpp"
#include "dualis/multipoly.hpp"

namespace dualis {

// Univariate rational function num/den in a single named parameter, kept reduced:
// gcd(num, den) = 1 and den is monic. Zero is stored as 0/1.
class RatFunc {
 public:
  RatFunc(MultiPoly num, MultiPoly den, const std::string& param);
  static RatFunc polynomial(const MultiPoly& p, const std::string& param);

  // Accepts `poly` or `(poly)/(poly)`.
  static RatFunc parse(std::string_view text, const std::string& param = "t");

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const std::string& param() const { return param_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc derivative() const;
  std::string to_string() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;

 private:
  MultiPoly num_, den_;
  std::string param_;
};

struct RationalParamCurve {
  RatFunc x, y;
};

bool operator==(const RationalParamCurve& a, const RationalParamCurve& b);

// (p, q) = (-y'/(x'y - xy'), x'/(x'y - xy')).
RationalParamCurve dual_parametric(const RationalParamCurve& c);

// Adjugate of a nonsingular symmetric 3x3 matrix, scaled so its first nonzero entry is 1.
RatMatrix dual_conic(const RatMatrix& a);

// Scales a matrix or polynomial so the first nonzero entry (row-major, resp. grlex-leading
// coefficient) equals 1.
RatMatrix normalize_projective(const RatMatrix& m);
MultiPoly normalize_projective(const MultiPoly& p);

// Schläfli's sextic for a ternary cubic f: V(p, x) is the bordered Hessian of f in x, F(p) the
// bordered Hessian of V in x. The result is in variables p0, p1, p2 (renamed with trailing
// underscores if f already uses those names). When `normalize` is false the raw determinant is
// returned, which is quartic in the coefficients of f.
MultiPoly dual_cubic_schlafli(const MultiPoly& f, bool normalize = true);

struct PluckerData {
  long d = 0, d_star = 0, g = 0, kappa = 0, delta = 0, b = 0, f = 0;
  friend bool operator==(const PluckerData&, const PluckerData&) = default;
};

// True iff all four Plücker relations hold.
bool plucker_consistent(const PluckerData& p);

PluckerData plucker_solve(long d, long delta, long kappa);

// Dual data: degree and class swap, nodes and bitangents swap, cusps and flexes swap.
PluckerData plucker_dual(const PluckerData& p);

long plane_dual_multiplicity(long d, long d_prime, long mu);

}  // namespace dualis
