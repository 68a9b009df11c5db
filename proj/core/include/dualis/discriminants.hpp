#pragma once

#include <cstddef>
#include <vector>

#include "dualis/matrix.hpp"
#include "dualis/multipoly.hpp"

namespace dualis {

// f = sum_i a_i x^{d-i} y^i with a_0..a_d stored in order.
struct BinaryForm {
  std::vector<Rational> coeffs;
  unsigned degree() const { return coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size() - 1); }
  MultiPoly as_poly() const;  // variables x, y
};

// The (2d-2)x(2d-2) Sylvester matrix: d-1 shifted rows of df/dy, then d-1 shifted rows of
// df/dx, each listing coefficients of x^{d-1-k} y^k for k = 0..d-1.
RatMatrix discriminant_sylvester_matrix(const BinaryForm& form);

// Delta = ((-1)^{d-1} / d^{d-2}) * det of the matrix above.
Rational binary_discriminant(const BinaryForm& form);

// The same quantity as a polynomial in variables a0..ad.
MultiPoly binary_discriminant_symbolic(unsigned d);

// True iff df/dx and df/dy have a non-constant common factor.
bool discriminant_vanishes(const BinaryForm& form);

// Exact complex 0 -> Q^{B_0} -> ... -> Q^{B_r} -> 0 with D_i : Q^{B_i} -> Q^{B_{i+1}} stored as a
// B_{i+1} x B_i matrix. Slot i sits in degree start_degree + i.
struct BasedComplex {
  long start_degree = 0;
  std::vector<std::size_t> dims;
  std::vector<RatMatrix> maps;
};

// Throws "not a complex" or "complex not exact" when the invariants fail.
void validate_complex(const BasedComplex& c);

// I_0..I_r as sorted 0-based index sets; I_0 is empty and I_r is everything.
using AdmissibleCollection = std::vector<std::vector<std::size_t>>;

bool is_admissible(const BasedComplex& c, const AdmissibleCollection& coll);

// Right-to-left greedy choice: the columns of D_i outside I_i are the pivot columns of the
// rows of D_i indexed by I_{i+1}.
AdmissibleCollection greedy_admissible_collection(const BasedComplex& c);

std::vector<AdmissibleCollection> all_admissible_collections(const BasedComplex& c);

// prod_i (eps_i * Delta_i)^{(-1)^i}, raised to (-1)^start_degree, where Delta_i is the minor of
// D_i with rows I_{i+1} and columns B_i \ I_i, and eps_i is the sign of the permutation listing
// I_i before its complement. The sign makes the value independent of the collection.
Rational cayley_value(const BasedComplex& c, const AdmissibleCollection& coll);

Rational cayley_determinant(const BasedComplex& c);

// sum over slots of (-1)^{deg+1} * deg * B_i with deg the actual degree of the slot.
long cayley_scaling_exponent(const BasedComplex& c);

}  // namespace dualis
