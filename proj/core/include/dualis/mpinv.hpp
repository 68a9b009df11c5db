#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dualis/matrix.hpp"

namespace dualis {

struct GaussRational {
  Rational re, im;

  GaussRational conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }
  std::string to_string() const;  // "a", "bi", "a+bi" with rationals in p/q form
  static GaussRational parse(std::string_view text);

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b);
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

using GaussVector = std::vector<GaussRational>;

std::vector<GaussRational> parse_gauss_list(std::string_view text);

// A+ = C^T (C C^T)^{-1} (B^T B)^{-1} B^T for the full-rank factorization A = B C.
RatMatrix mp_matrix(const RatMatrix& a);

// True iff all four Penrose identities hold for (a, candidate).
bool penrose_identities(const RatMatrix& a, const RatMatrix& candidate);

enum class BilinearKind { symmetric, skew };

// The form on the dual space that inverts the induced nondegenerate form on Ann(Ker omega)
// and vanishes on Ker omega: U (U^T omega U)^{-1} U^T with U a basis of Ann(Ker omega).
RatMatrix mp_bilinear(const RatMatrix& omega, BilinearKind kind);

// (u, w) = u^T G w without conjugation.
GaussRational bilinear_product(const GaussVector& u, const GaussVector& w, const RatMatrix& gram);

// v^vee = 2v/(v,v) when (v,v) != 0, conj(v)/(conj(v),v) when (v,v) = 0 and v != 0, else 0.
GaussVector mp_vector(const GaussVector& v, const RatMatrix& gram);
GaussVector mp_vector(const GaussVector& v);  // standard product

}  // namespace dualis
