#pragma once

#include <vector>

#include "dualis/rational.hpp"

namespace dualis {

// Format l_1 x ... x l_r with every l_i >= 2; k_i = l_i - 1.
bool hyperdet_exists(const std::vector<unsigned>& dims);

// max(0, max_j(2 k_j - sum k)).
long segre_defect(const std::vector<unsigned>& dims);

struct HyperdetDegree {
  Integer degree;       // 0 outside the existence cone, where Det = 1 by convention
  bool exists = false;
};

// Coefficient of z^k in (1 - sum_{i>=2} (i-1) e_i(z))^{-2}.
HyperdetDegree hyperdet_degree_gf(const std::vector<unsigned>& dims);

// Raw generating-function coefficient, without consulting the existence test.
Integer hyperdet_gf_coefficient(const std::vector<unsigned>& k);

// Boundary format with k_1 = k_2 + ... + k_r: (k_2 + ... + k_r + 1)! / (k_2! ... k_r!).
Integer hyperdet_degree_boundary(const std::vector<unsigned>& k_rest);

// Cubic format (k+1)^3.
Integer hyperdet_degree_cubic(unsigned k);

// Format 2^r: r! [z^r] e^{-2z} / (1-z)^2.
Integer hyperdet_degree_binary_cube(unsigned r);

}  // namespace dualis
