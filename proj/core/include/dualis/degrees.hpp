#pragma once

#include <vector>

#include "dualis/multipoly.hpp"
#include "dualis/rational.hpp"

namespace dualis {

// e_j = degree of c_j(T*X) against H^{n-j}, for an n-dimensional polarized variety.
struct ChernData {
  unsigned n = 0;
  std::vector<Integer> e;
};

// delta_s = sum_{i=s}^{n} C(i+1, s+1) e_{n-i}.
std::vector<Integer> ranks(const ChernData& cd);

struct DefectDegree {
  unsigned defect = 0;
  Integer degree;
};

// The defect is the first s with delta_s != 0 and the degree of the dual is that delta_s.
DefectDegree defect_and_degree(const ChernData& cd);

ChernData chern_data_veronese(unsigned n, unsigned d);
ChernData chern_data_complete_intersection(unsigned big_n, const std::vector<unsigned>& degs);

Integer degree_curve_dual(long g, long d);

struct ClassFormulaResult {
  Integer value;
  bool dual_not_hypersurface = false;  // set when value <= 0
};

ClassFormulaResult class_formula(unsigned n, const Integer& chi_x, const Integer& chi_xh,
                                 const Integer& chi_xhh);

Integer degree_plane_curve_reembedded(long d, long r);
Integer degree_sl3_flag(long m1, long m2);

// The same quantity as a polynomial in m1, m2, and re-expanded in n_i = m_i - 1.
MultiPoly degree_sl3_flag_poly();
MultiPoly degree_sl3_flag_poly_shifted();

Integer degree_sln_weight_a(long n, long a);
long hyperplane_section_defect(long def_x, long d);
Integer resultant_degree(const std::vector<long>& degs);

// m - 2 where m is the largest size of a Hessian minor not divisible by f.
int hessian_dual_dimension(const MultiPoly& f, unsigned ambient);

}  // namespace dualis
