#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dualis/matrix.hpp"
#include "dualis/rootsystem.hpp"

namespace dualis {

// Indices (Bourbaki, 1-based) of the simple roots not in the Levi of P.
using Removed = std::vector<unsigned>;

// Coefficients over fundamental weights, keyed by Bourbaki index.
using WeightCoeffs = std::map<unsigned, long>;

unsigned long dim_flag(const RootSystem& rs, const Removed& removed);

// Sum of the positive roots not supported on the Levi of P.
RVec rho_flag(const RootSystem& rs, const Removed& removed);

// max over removed i of <rho_{G/P}, alpha_i^vee> / <lambda, alpha_i^vee>.
Rational nef_value(const RootSystem& rs, const Removed& removed, const WeightCoeffs& lambda);

// Removed set minus the indices attaining the maximum.
Removed nef_morphism_target(const RootSystem& rs, const Removed& removed, const WeightCoeffs& lambda);

struct FlagTableRow {
  unsigned i = 0;
  unsigned long dim = 0;
  Rational tau;
};

// One row per maximal parabolic P_i polarized by omega_i.
std::vector<FlagTableRow> flag_table(const RootSystem& rs);

struct FlagFactor {
  char kind = 'A';
  unsigned rank = 1;
  Removed removed;
  WeightCoeffs weight;
};

// Defect of one polarized G/P; the weight must be strictly positive exactly on `removed`.
long defect_simple(const FlagFactor& f);

// Defect of a product: max(0, max_i(def_i - sum_{j != i} dim_j)).
long defect_flag(const std::vector<FlagFactor>& factors);

struct AdjointDegrees {
  std::size_t deg_long = 0, deg_short = 0;
};

// Number of long and short roots (both signs); simply laced types report every root as long.
AdjointDegrees adjoint_discriminant_degrees(const RootSystem& rs);

Rational permanent(const RatMatrix& m);             // Ryser inclusion-exclusion
Rational permanent_by_permutations(const RatMatrix& m);
Rational permanent_sum(const RatMatrix& m, std::size_t s);  // over all s x s submatrices

// M_ij = (beta_i^vee, beta_j) / (beta_i^vee, rho) over the positive roots.
RatMatrix gb_pairing_matrix(const RootSystem& rs);

struct GbDegreeReport {
  bool applicable = false;     // false when the dual of G/B is not a hypersurface
  std::size_t num_positive = 0;
  Rational printed_sum;        // sum_s (s+1)! P_{N-s}
  Rational alternating_sum;    // sum_s (-1)^s (s+1)! P_{N-s}
  Rational degree;             // (-1)^N * alternating_sum
  std::string note;
};

GbDegreeReport degree_dual_gb(const RootSystem& rs);

}  // namespace dualis
