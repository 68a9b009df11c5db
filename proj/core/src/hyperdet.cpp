#include "dualis/hyperdet.hpp"

#include <algorithm>
#include <numeric>

#include "dualis/error.hpp"
#include "dualis/series.hpp"

namespace dualis {

namespace {

std::vector<unsigned> ks(const std::vector<unsigned>& dims) {
  require(!dims.empty(), "format needs at least one factor");
  std::vector<unsigned> k;
  for (auto l : dims) {
    require(l >= 2, "every dimension must be at least 2");
    k.push_back(l - 1);
  }
  return k;
}

}  // namespace

bool hyperdet_exists(const std::vector<unsigned>& dims) {
  auto k = ks(dims);
  unsigned total = std::accumulate(k.begin(), k.end(), 0u);
  return std::all_of(k.begin(), k.end(), [&](unsigned kj) { return 2 * kj <= total; });
}

long segre_defect(const std::vector<unsigned>& dims) {
  auto k = ks(dims);
  long total = std::accumulate(k.begin(), k.end(), 0L);
  long best = 0;
  for (auto kj : k) best = std::max(best, 2 * static_cast<long>(kj) - total);
  return best;
}

Integer hyperdet_gf_coefficient(const std::vector<unsigned>& k) {
  const std::size_t r = k.size();
  require(r >= 1, "format needs at least one factor");
  unsigned cap = std::accumulate(k.begin(), k.end(), 0u);
  require(cap <= 64 && r <= 16, "instance too large");
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < r; ++i) vars.push_back("z" + std::to_string(i + 1));
  Exponents box(k.begin(), k.end());
  // Elementary symmetric polynomials e_0..e_r by expanding prod (1 + z_j T).
  std::vector<MultiPoly> e(r + 1, MultiPoly(vars));
  e[0] = MultiPoly::constant(vars, 1);
  for (std::size_t j = 0; j < r; ++j) {
    MultiPoly z = MultiPoly::variable(vars, j);
    for (std::size_t i = j + 1; i >= 1; --i) e[i] = e[i] + e[i - 1] * z;
  }
  MultiPoly u(vars);
  for (std::size_t i = 2; i <= r; ++i) u = u + e[i].scaled(static_cast<long>(i - 1));
  TruncSeries base(MultiPoly::constant(vars, 1) - u, cap, box);
  TruncSeries inv = series_mul_inverse(base * base);
  Rational c = inv.coefficient(box);
  require(c.get_den() == 1, "non-integral generating-function coefficient");
  return c.get_num();
}

HyperdetDegree hyperdet_degree_gf(const std::vector<unsigned>& dims) {
  HyperdetDegree out;
  out.exists = hyperdet_exists(dims);
  out.degree = out.exists ? hyperdet_gf_coefficient(ks(dims)) : Integer(0);
  return out;
}

Integer hyperdet_degree_boundary(const std::vector<unsigned>& k_rest) {
  require(!k_rest.empty(), "boundary format needs at least one trailing factor");
  unsigned s = 0;
  Integer den = 1;
  for (auto k : k_rest) {
    require(k >= 1, "every k_i must be at least 1");
    s += k;
    den *= factorial(k);
  }
  return factorial(s + 1) / den;
}

Integer hyperdet_degree_cubic(unsigned k) {
  require(k >= 1, "cubic format needs k >= 1");
  Integer total = 0;
  for (unsigned j = 0; 2 * j <= k; ++j) {
    Integer fj = factorial(j);
    Integer p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, k - 2 * j);
    total += factorial(j + k + 1) * p2 / (fj * fj * fj * factorial(k - 2 * j));
  }
  return total;
}

Integer hyperdet_degree_binary_cube(unsigned r) {
  require(r >= 2, "binary cube needs r >= 2");
  const std::vector<std::string> vars{"z"};
  MultiPoly exp_part(vars);
  for (unsigned j = 0; j <= r; ++j) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, j);
    Rational c = make_rational(p, factorial(j));
    if (j % 2 == 1) c = -c;
    exp_part = exp_part + MultiPoly::monomial(vars, {j}, c);
  }
  TruncSeries one_minus_z(MultiPoly::parse("1 - z", vars), r);
  TruncSeries series = TruncSeries(exp_part, r) * series_mul_inverse(one_minus_z * one_minus_z);
  Rational c = series.coefficient({r}) * factorial(r);
  require(c.get_den() == 1, "non-integral egf coefficient");
  return c.get_num();
}

}  // namespace dualis
