#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualis/rational.hpp"

namespace dualis {

enum class FormKind { symmetric, skew };
enum class MatrixKind { general, symmetric, skew };

std::string to_string(FormKind k);
std::string to_string(MatrixKind k);

// Does a generic form of degree d on C^n have a k-dimensional isotropic subspace?
// Skew queries need k >= d.
bool isotropic_exists(unsigned n, unsigned k, unsigned d, FormKind kind);

// Number of (k+1)-dimensional subalgebras of a generic k-ary anticommutative algebra on C^n,
// summed over Young pairs mu <= lambda in a (k+1) x (n-k-1) box. Requires 1 <= k <= n-2.
Integer count_subalgebras(unsigned n, unsigned k);

// The determinant |1/(i - j + lambda_j - mu_i)!| appearing in each summand.
Rational subalgebra_aitken_determinant(const std::vector<unsigned>& lambda,
                                       const std::vector<unsigned>& mu);

Integer d_discriminant_degree(unsigned n);
Integer count_1dim_subalgebras_commutative(unsigned n);

// Bounds on dimensions of linear spaces of m x n (or m x m symmetric / skew) matrices.
// Constant-rank dimensions are vector-space dimensions; the projective maximum for symmetric
// even rank is reported separately.
struct ConstantRankBounds {
  MatrixKind kind = MatrixKind::general;
  unsigned r = 0, m = 0, n = 0;
  // Upper bound for spaces whose nonzero members all have rank >= r.
  std::optional<Integer> rank_bounded_below_max;
  std::optional<Integer> constant_rank_lower;
  std::optional<Integer> constant_rank_upper;
  std::optional<Integer> constant_rank_upper_projective;
  std::optional<Integer> constant_rank_exact;  // odd rank, symmetric or skew
};

ConstantRankBounds constant_rank_bounds(unsigned r, unsigned m, unsigned n, MatrixKind kind);

}  // namespace dualis
