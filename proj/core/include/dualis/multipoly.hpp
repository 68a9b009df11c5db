#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dualis/rational.hpp"

namespace dualis {

using Exponents = std::vector<unsigned>;

// Graded lexicographic order, largest first: higher total degree wins, ties broken
// lexicographically with earlier variables ranking higher.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

unsigned total_degree(const Exponents& e);

// Sparse multivariate polynomial over Q. Terms are keyed by exponent vectors whose
// length equals the number of variables; zero coefficients are never stored.
// Values are immutable; every operation returns a new polynomial.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);
  MultiPoly(std::vector<std::string> variables, TermMap terms);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly variable(std::vector<std::string> variables, std::size_t index);
  static MultiPoly variable(std::vector<std::string> variables, const std::string& name);
  static MultiPoly monomial(std::vector<std::string> variables, Exponents exps, const Rational& c);

  // Parses `3*x0^2*x1 - 1/2*x2^3`. Parentheses, unary minus, integer powers and division
  // by nonzero constants are accepted. Variables are ordered by first appearance unless
  // an explicit list is given, in which case unknown names are rejected.
  static MultiPoly parse(std::string_view text);
  static MultiPoly parse(std::string_view text, const std::vector<std::string>& variables);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t num_variables() const { return vars_.size(); }
  std::size_t variable_index(const std::string& name) const;  // throws if absent
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_homogeneous() const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(std::size_t var) const;
  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;
  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  // Re-embeds into a variable list that must contain every variable carrying a nonzero exponent.
  MultiPoly with_variables(const std::vector<std::string>& variables) const;

  MultiPoly operator-() const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned n) const;
  MultiPoly derivative(std::size_t var) const;
  MultiPoly derivative(const std::string& name) const { return derivative(variable_index(name)); }
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  MultiPoly truncated(unsigned cap) const;          // drops terms of total degree > cap
  MultiPoly homogeneous_part(unsigned degree) const;
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;  // index k holds coeff of var^k
  Rational evaluate(const std::vector<Rational>& point) const;

  std::string to_string() const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

// Aligns two polynomials to a common variable list: a's variables first, then b's new ones.
std::vector<std::string> merged_variables(const std::vector<std::string>& a,
                                          const std::vector<std::string>& b);

struct DivResult {
  MultiPoly quotient;
  MultiPoly remainder;
};

// Multivariate division by a single divisor in grlex order. For one divisor the remainder is
// zero exactly when g divides f.
DivResult poly_divmod(const MultiPoly& f, const MultiPoly& g);
bool poly_divides(const MultiPoly& g, const MultiPoly& f);  // does g divide f
MultiPoly exact_quotient(const MultiPoly& f, const MultiPoly& g);

// Monic gcd of two univariate polynomials in the same single variable.
MultiPoly univariate_gcd(const MultiPoly& f, const MultiPoly& g);

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

// Determinant by row-wise Laplace expansion memoized over column subsets.
MultiPoly poly_determinant(const PolyMatrix& m);

// Sylvester matrix of f and g in `var`, treating them as having the declared degrees.
PolyMatrix sylvester_matrix(const MultiPoly& f, const MultiPoly& g, std::size_t var,
                            unsigned deg_f, unsigned deg_g);

// Resultant in `var` with the polynomials' actual degrees in that variable.
MultiPoly poly_resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var);
MultiPoly poly_resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var,
                         unsigned deg_f, unsigned deg_g);

}  // namespace dualis
