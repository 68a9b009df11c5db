#include "dualis/dualcurve.hpp"

#include <algorithm>

#include "dualis/error.hpp"

namespace dualis {

namespace {

MultiPoly in_param(const MultiPoly& p, const std::string& param) {
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && p.variables()[i] != param)
        throw DomainError("rational function uses variable '" + p.variables()[i] +
                          "' besides the parameter '" + param + "'");
  MultiPoly::TermMap t;
  for (const auto& [e, c] : p.terms()) {
    unsigned k = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (p.variables()[i] == param) k = e[i];
    t.emplace(Exponents{k}, c);
  }
  return MultiPoly({param}, std::move(t));
}

}  // namespace

RatFunc::RatFunc(MultiPoly num, MultiPoly den, const std::string& param) : param_(param) {
  MultiPoly n = in_param(num, param), d = in_param(den, param);
  if (d.is_zero()) throw DomainError("rational function with zero denominator");
  if (n.is_zero()) {
    num_ = MultiPoly({param});
    den_ = MultiPoly::constant({param}, 1);
    return;
  }
  MultiPoly g = univariate_gcd(n, d);
  n = exact_quotient(n, g);
  d = exact_quotient(d, g);
  Rational lc = d.leading_coefficient();
  num_ = n.scaled(1 / lc);
  den_ = d.scaled(1 / lc);
}

RatFunc RatFunc::polynomial(const MultiPoly& p, const std::string& param) {
  return RatFunc(p, MultiPoly::constant({param}, 1), param);
}

RatFunc RatFunc::parse(std::string_view text, const std::string& param) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == '/' && depth == 0) {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] == ' ') ++j;
      if (j < text.size() && text[j] == '(') {
        return RatFunc(MultiPoly::parse(text.substr(0, i), {param}),
                       MultiPoly::parse(text.substr(j), {param}), param);
      }
    }
  }
  return polynomial(MultiPoly::parse(text, {param}), param);
}

RatFunc RatFunc::derivative() const {
  MultiPoly n = num_.derivative(0) * den_ - num_ * den_.derivative(0);
  return RatFunc(n, den_ * den_, param_);
}

std::string RatFunc::to_string() const {
  if (den_ == MultiPoly::constant({param_}, 1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

void same_param(const RatFunc& a, const RatFunc& b) {
  if (a.param() != b.param()) throw DomainError("rational functions in different parameters");
}

}  // namespace

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  same_param(a, b);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, a.param_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  same_param(a, b);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_, a.param_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  same_param(a, b);
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_, a.param_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.param_ == b.param_ && a.num_ == b.num_ && a.den_ == b.den_;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, param_); }

bool operator==(const RationalParamCurve& a, const RationalParamCurve& b) {
  return a.x == b.x && a.y == b.y;
}

RationalParamCurve dual_parametric(const RationalParamCurve& c) {
  if (c.x.is_constant() && c.y.is_constant()) throw DomainError("curve is constant");
  RatFunc dx = c.x.derivative(), dy = c.y.derivative();
  RatFunc w = dx * c.y - c.x * dy;
  if (w.is_zero()) throw DomainError("degenerate (linear) curve");
  return {-dy / w, dx / w};
}

RatMatrix normalize_projective(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return m.scaled(1 / m(i, j));
  return m;
}

MultiPoly normalize_projective(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.leading_coefficient());
}

RatMatrix dual_conic(const RatMatrix& a) {
  if (a.rows() != 3 || a.cols() != 3) throw DomainError("conic matrix must be 3x3");
  if (!(a == a.transpose())) throw DomainError("conic matrix must be symmetric");
  if (determinant(a) == 0) throw DomainError("degenerate conic");
  RatMatrix adj(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t k = 0; k < 3; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      Rational minor = determinant(a.submatrix(rows, cols));
      adj(i, j) = ((i + j) % 2 == 0) ? minor : Rational(-minor);
    }
  return normalize_projective(adj);
}

namespace {

PolyMatrix bordered_hessian(const MultiPoly& f, const std::vector<std::size_t>& xs,
                            const std::vector<MultiPoly>& border) {
  const std::size_t n = xs.size();
  PolyMatrix m(n + 1, std::vector<MultiPoly>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly fi = f.derivative(xs[i]);
    for (std::size_t j = 0; j < n; ++j) m[i][j] = fi.derivative(xs[j]);
    m[i][n] = border[i];
    m[n][i] = border[i];
  }
  m[n][n] = MultiPoly(f.variables());
  return m;
}

}  // namespace

MultiPoly dual_cubic_schlafli(const MultiPoly& f0, bool normalize) {
  if (f0.num_variables() != 3) throw DomainError("Schläfli formula needs a ternary cubic");
  if (f0.total_degree() != 3 || !f0.is_homogeneous())
    throw DomainError("Schläfli formula needs a homogeneous cubic");
  std::vector<std::string> pnames{"p0", "p1", "p2"};
  for (auto& name : pnames)
    while (std::find(f0.variables().begin(), f0.variables().end(), name) != f0.variables().end())
      name += '_';
  auto vars = merged_variables(f0.variables(), pnames);
  MultiPoly f = f0.with_variables(vars);
  std::vector<std::size_t> xs{0, 1, 2};
  std::vector<MultiPoly> p;
  for (std::size_t i = 0; i < 3; ++i) p.push_back(MultiPoly::variable(vars, 3 + i));
  MultiPoly v = poly_determinant(bordered_hessian(f, xs, p));
  MultiPoly big_f = poly_determinant(bordered_hessian(v, xs, p)).with_variables(pnames);
  return normalize ? normalize_projective(big_f) : big_f;
}

bool plucker_consistent(const PluckerData& p) {
  auto twice_genus = [](long deg) { return (deg - 1) * (deg - 2); };
  return p.d_star == p.d * (p.d - 1) - 2 * p.delta - 3 * p.kappa &&
         p.d == p.d_star * (p.d_star - 1) - 2 * p.b - 3 * p.f &&
         2 * p.g == twice_genus(p.d) - 2 * p.delta - 2 * p.kappa &&
         2 * p.g == twice_genus(p.d_star) - 2 * p.b - 2 * p.f;
}

PluckerData plucker_solve(long d, long delta, long kappa) {
  require(d >= 2, "degree must be at least 2");
  require(delta >= 0 && kappa >= 0, "node and cusp counts must be nonnegative");
  PluckerData p;
  p.d = d;
  p.delta = delta;
  p.kappa = kappa;
  p.g = (d - 1) * (d - 2) / 2 - delta - kappa;
  p.d_star = d * (d - 1) - 2 * delta - 3 * kappa;
  // b + f = s and 2b + 3f = t determine b and f.
  long s = (p.d_star - 1) * (p.d_star - 2) / 2 - p.g;
  long t = p.d_star * (p.d_star - 1) - d;
  p.f = t - 2 * s;
  p.b = 3 * s - t;
  if (p.g < 0 || p.d_star < 2 || p.b < 0 || p.f < 0 || !plucker_consistent(p))
    throw DomainError("no generic curve with these invariants");
  return p;
}

PluckerData plucker_dual(const PluckerData& p) {
  PluckerData q;
  q.d = p.d_star;
  q.d_star = p.d;
  q.g = p.g;
  q.delta = p.b;
  q.b = p.delta;
  q.kappa = p.f;
  q.f = p.kappa;
  return q;
}

long plane_dual_multiplicity(long d, long d_prime, long mu) {
  require(d_prime >= 0 && d_prime <= d, "need 0 <= d' <= d");
  require(mu >= 0, "Milnor number must be nonnegative");
  return (3 * (d - 1) - d_prime) * d_prime + mu;
}

}  // namespace dualis
