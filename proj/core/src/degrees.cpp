#include "dualis/degrees.hpp"

#include <functional>

#include "dualis/error.hpp"
#include "dualis/series.hpp"

namespace dualis {

std::vector<Integer> ranks(const ChernData& cd) {
  require(cd.e.size() == cd.n + 1, "Chern data needs n+1 entries");
  require(cd.e[0] >= 1, "Chern data needs e_0 >= 1");
  std::vector<Integer> delta(cd.n + 1, Integer(0));
  for (unsigned s = 0; s <= cd.n; ++s)
    for (unsigned i = s; i <= cd.n; ++i) delta[s] += binomial(i + 1, s + 1) * cd.e[cd.n - i];
  return delta;
}

DefectDegree defect_and_degree(const ChernData& cd) {
  auto delta = ranks(cd);
  for (unsigned s = 0; s < delta.size(); ++s)
    if (delta[s] != 0) return {s, delta[s]};
  throw DomainError("inconsistent Chern data");
}

ChernData chern_data_veronese(unsigned n, unsigned d) {
  require(n >= 1 && d >= 1, "Veronese needs n >= 1 and d >= 1");
  ChernData cd{n, {}};
  for (unsigned j = 0; j <= n; ++j) {
    Integer dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), d, n - j);
    Integer v = binomial(n + 1, j) * dp;
    cd.e.push_back(j % 2 == 0 ? v : Integer(-v));
  }
  return cd;
}

ChernData chern_data_complete_intersection(unsigned big_n, const std::vector<unsigned>& degs) {
  require(big_n >= 2, "complete intersection needs N >= 2");
  require(!degs.empty() && degs.size() < big_n, "complete intersection needs 1 <= k < N");
  Integer prod = 1;
  for (auto d : degs) {
    require(d >= 1, "degrees must be positive");
    prod *= d;
  }
  const unsigned n = big_n - static_cast<unsigned>(degs.size());
  const std::vector<std::string> h{"h"};
  MultiPoly one = MultiPoly::constant(h, 1), hv = MultiPoly::variable(h, 0);
  TruncSeries normal(one, n);
  for (auto d : degs) normal = normal * TruncSeries(one + hv.scaled(d), n);
  TruncSeries tangent = TruncSeries((one + hv).pow(big_n + 1), n) * series_mul_inverse(normal);
  ChernData cd{n, {}};
  for (unsigned j = 0; j <= n; ++j) {
    Rational c = tangent.coefficient({j});
    if (j % 2 == 1) c = -c;
    Rational v = c * prod;
    require(v.get_den() == 1, "non-integral Chern degree");
    cd.e.push_back(v.get_num());
  }
  return cd;
}

Integer degree_curve_dual(long g, long d) {
  require(g >= 0 && d >= 1, "curve needs g >= 0 and d >= 1");
  return Integer(2 * g - 2 + 2 * d);
}

ClassFormulaResult class_formula(unsigned n, const Integer& chi_x, const Integer& chi_xh,
                                 const Integer& chi_xhh) {
  require(n >= 1, "class formula needs n >= 1");
  Integer v = chi_x - 2 * chi_xh + chi_xhh;
  if (n % 2 == 1) v = -v;
  return {v, v <= 0};
}

Integer degree_plane_curve_reembedded(long d, long r) {
  require(d >= 1 && r >= 1 && !(d == 1 && r == 1), "needs d, r >= 1 and (d, r) != (1, 1)");
  return Integer(d) * (d + 2 * r - 3);
}

Integer degree_sl3_flag(long m1, long m2) {
  require(m1 >= 1 && m2 >= 1, "weights must be positive");
  Integer a(m1), b(m2);
  return 12 * (a * a * b + a * b * b) - 6 * (a * a + 4 * a * b + b * b) + 12 * (a + b) - 6;
}

MultiPoly degree_sl3_flag_poly() {
  return MultiPoly::parse("12*m1^2*m2 + 12*m1*m2^2 - 6*m1^2 - 24*m1*m2 - 6*m2^2 + 12*m1 + 12*m2 - 6",
                          {"m1", "m2"});
}

MultiPoly degree_sl3_flag_poly_shifted() {
  const std::vector<std::string> vars{"n1", "n2"};
  MultiPoly p = degree_sl3_flag_poly();
  MultiPoly s = p.substitute(0, MultiPoly::parse("n1 + 1", vars));
  s = s.substitute(1, MultiPoly::parse("n2 + 1", vars));
  return s.with_variables(vars);
}

Integer degree_sln_weight_a(long n, long a) {
  require(n >= 3 && a >= 2, "needs n >= 3 and a >= 2");
  Integer an1, an_1;
  mpz_ui_pow_ui(an1.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(n + 1));
  mpz_ui_pow_ui(an_1.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(n - 1));
  Integer nn(n);
  Integer num = (nn * nn - nn) * an1 - (nn * nn + nn) * an_1 - 2 * nn * (n % 2 == 0 ? 1 : -1);
  Integer den = Integer(a + 1) * (a + 1);
  if (num % den != 0) throw DomainError("formula precondition violated");
  return num / den;
}

long hyperplane_section_defect(long def_x, long d) {
  require(def_x >= 0 && d >= 1, "needs def X >= 0 and d >= 1");
  return d == 1 ? std::max(0L, def_x - 1) : 0;
}

Integer resultant_degree(const std::vector<long>& degs) {
  require(degs.size() >= 2, "resultant needs at least two polynomials");
  Integer total = 0;
  for (std::size_t j = 0; j < degs.size(); ++j) {
    Integer p = 1;
    for (std::size_t i = 0; i < degs.size(); ++i) {
      require(degs[i] >= 1, "degrees must be positive");
      if (i != j) p *= degs[i];
    }
    total += p;
  }
  return total;
}

int hessian_dual_dimension(const MultiPoly& f, unsigned ambient) {
  require(f.is_homogeneous() && f.total_degree() >= 2, "needs a homogeneous form of degree >= 2");
  require(ambient + 1 <= 5, "instance too large: at most 5 variables");
  require(f.num_variables() <= ambient + 1, "more variables than the ambient space allows");
  std::vector<std::string> vars = f.variables();
  for (unsigned k = 0; vars.size() < ambient + 1; ++k) {
    std::string name = "x_pad" + std::to_string(k);
    vars.push_back(name);
  }
  MultiPoly g = f.with_variables(vars);
  const std::size_t n = vars.size();
  PolyMatrix h(n, std::vector<MultiPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = g.derivative(i).derivative(j);
  std::vector<std::size_t> rows, cols;
  // Returns true if some m x m minor is not divisible by f.
  std::function<bool(std::size_t, std::size_t)> pick_cols;
  std::function<bool(std::size_t, std::size_t, std::size_t)> pick_rows;
  pick_rows = [&](std::size_t start, std::size_t left, std::size_t m) -> bool {
    if (left == 0) {
      cols.clear();
      return pick_cols(0, m);
    }
    for (std::size_t i = start; i + left <= n; ++i) {
      rows.push_back(i);
      bool found = pick_rows(i + 1, left - 1, m);
      rows.pop_back();
      if (found) return true;
    }
    return false;
  };
  pick_cols = [&](std::size_t start, std::size_t left) -> bool {
    if (left == 0) {
      PolyMatrix sub(rows.size(), std::vector<MultiPoly>(cols.size()));
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub[i][j] = h[rows[i]][cols[j]];
      return !poly_divides(g, poly_determinant(sub));
    }
    for (std::size_t j = start; j + left <= n; ++j) {
      cols.push_back(j);
      bool found = pick_cols(j + 1, left - 1);
      cols.pop_back();
      if (found) return true;
    }
    return false;
  };
  for (std::size_t m = n; m >= 1; --m)
    if (pick_rows(0, m, m)) return static_cast<int>(m) - 2;
  throw DomainError("input degenerate");
}

}  // namespace dualis
