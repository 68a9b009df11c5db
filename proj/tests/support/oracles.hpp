#pragma once

// Independent reference implementations used to check the library. None of these call into the
// routines they are compared against.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "dualis/discriminants.hpp"
#include "dualis/matrix.hpp"
#include "dualis/rational.hpp"

namespace oracle {

using dualis::Integer;
using dualis::RatMatrix;
using dualis::Rational;

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int range = 5, int max_den = 3) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  return dualis::make_rational(num(rng), den(rng));
}

inline RatMatrix random_integer_matrix(Rng& rng, std::size_t r, std::size_t c, int range = 3) {
  std::uniform_int_distribution<int> dist(-range, range);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

inline RatMatrix random_rational_matrix(Rng& rng, std::size_t r, std::size_t c) {
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rational(rng);
  return m;
}

// Leibniz expansion over all permutations.
inline Rational leibniz_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    Rational term = 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, p[i]);
    total += inversions % 2 ? Rational(-term) : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Plain Gaussian elimination on a copy, counting pivots.
inline std::size_t elimination_rank(RatMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      Rational f = m(i, col) / m(rank, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

// Determinant by fraction-field Gaussian elimination with row swaps.
inline Rational elimination_det(RatMatrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      Rational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

// Random matrix of the given rank as a product of random r x k and k x c integer factors.
inline RatMatrix random_matrix_of_rank(Rng& rng, std::size_t r, std::size_t c, std::size_t k) {
  while (true) {
    RatMatrix m = random_integer_matrix(rng, r, k) * random_rational_matrix(rng, k, c);
    if (elimination_rank(m) == k) return m;
  }
}

inline RatMatrix random_invertible(Rng& rng, std::size_t n) {
  while (true) {
    RatMatrix g = random_integer_matrix(rng, n, n);
    if (elimination_rank(g) == n) return g;
  }
}

// Exact complex built from a split model: slot i is Q^{r_{i-1}} + Q^{r_i}, the differential maps
// the second summand identically onto the first summand of the next slot, and every slot is
// then twisted by a random invertible change of basis.
inline dualis::BasedComplex random_exact_complex(Rng& rng, std::size_t max_dim, std::size_t slots) {
  while (true) {
    std::vector<std::size_t> r(slots - 1);
    for (auto& x : r) x = 1 + rng() % max_dim;
    std::vector<std::size_t> dims(slots);
    bool fits = true;
    for (std::size_t i = 0; i < slots; ++i) {
      dims[i] = (i ? r[i - 1] : 0) + (i + 1 < slots ? r[i] : 0);
      fits = fits && dims[i] <= max_dim;
    }
    if (!fits) continue;
    std::vector<RatMatrix> g;
    for (auto d : dims) g.push_back(random_invertible(rng, d));
    dualis::BasedComplex c;
    c.start_degree = static_cast<long>(rng() % 5) - 2;
    c.dims = dims;
    for (std::size_t i = 0; i + 1 < slots; ++i) {
      RatMatrix s(dims[i + 1], dims[i]);
      const std::size_t off = i ? r[i - 1] : 0;
      for (std::size_t a = 0; a < r[i]; ++a) s(a, off + a) = 1;
      c.maps.push_back(g[i + 1] * s * dualis::inverse(g[i]));
    }
    return c;
  }
}

// Dense univariate polynomials, coefficient of t^k at index k, trailing zeros trimmed.
using UPoly = std::vector<Rational>;

inline UPoly trim(UPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline UPoly urem(UPoly a, const UPoly& b) {
  a = trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a = trim(a);
  }
  return a;
}

inline UPoly ugcd(UPoly a, UPoly b) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    UPoly r = urem(a, b);
    a = b;
    b = r;
  }
  return a;
}

// f = sum a_i x^{d-i} y^i has a repeated root on P^1 iff g(t) = f(1, t) = sum a_i t^i either
// drops degree by at least 2 (double root at (0:1)) or shares a factor with g'(t).
inline bool binary_form_has_repeated_root(const std::vector<Rational>& a) {
  if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; })) return true;
  UPoly g = trim(UPoly(a.begin(), a.end()));
  if (a.size() - g.size() >= 2) return true;
  if (g.size() <= 1) return false;
  UPoly dg;
  for (std::size_t k = 1; k < g.size(); ++k) dg.push_back(g[k] * static_cast<long>(k));
  return ugcd(g, dg).size() > 1;
}

// Discriminant route through the classical resultant Res_t(g, g') / lead(g) for the affine
// polynomial g(t) = f(t, 1), with the Sylvester determinant taken by plain elimination.
inline Rational classical_discriminant(const std::vector<Rational>& a) {
  UPoly g(a.rbegin(), a.rend());
  const std::size_t n = g.size() - 1;
  UPoly dg;
  for (std::size_t k = 1; k <= n; ++k) dg.push_back(g[k] * static_cast<long>(k));
  const std::size_t m = n - 1, size = n + m;
  RatMatrix s(size, size);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(r, r + k) = g[n - k];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(m + r, r + k) = dg[m - k];
  return elimination_det(s) / g[n];
}

inline dualis::Integer pow_int(long base, unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

// The printed E-series tables number the simple roots differently from Bourbaki. These maps send
// a printed label to the Bourbaki index set it denotes.
inline const std::map<unsigned, unsigned>& e8_printed_to_bourbaki() {
  static const std::map<unsigned, unsigned> m{{1, 8}, {2, 7}, {3, 6}, {4, 5},
                                              {5, 4}, {6, 3}, {7, 1}, {8, 2}};
  return m;
}

inline const std::map<unsigned, unsigned>& e7_printed_to_bourbaki() {
  static const std::map<unsigned, unsigned> m{{1, 7}, {2, 6}, {3, 5}, {4, 4}, {5, 3}, {6, 1}, {7, 2}};
  return m;
}

struct PrintedRow {
  std::vector<unsigned> bourbaki;  // indices sharing the printed row
  unsigned long dim;
  long tau;
};

// Printed E6 rows "1,5", "2,4", "3", "6" in Bourbaki indices.
inline std::vector<PrintedRow> e6_printed_rows() {
  return {{{1, 6}, 16, 12}, {{3, 5}, 25, 9}, {{4}, 29, 7}, {{2}, 21, 11}};
}

inline std::vector<PrintedRow> e7_printed_rows() {
  const unsigned long dims[] = {27, 42, 50, 53, 47, 33, 42};
  const long taus[] = {18, 13, 10, 8, 11, 17, 14};
  std::vector<PrintedRow> out;
  for (unsigned p = 1; p <= 7; ++p) out.push_back({{e7_printed_to_bourbaki().at(p)}, dims[p - 1], taus[p - 1]});
  return out;
}

inline std::vector<PrintedRow> e8_printed_rows() {
  const unsigned long dims[] = {57, 83, 97, 104, 106, 98, 78, 92};
  const long taus[] = {29, 19, 14, 11, 9, 13, 23, 17};
  std::vector<PrintedRow> out;
  for (unsigned p = 1; p <= 8; ++p) out.push_back({{e8_printed_to_bourbaki().at(p)}, dims[p - 1], taus[p - 1]});
  return out;
}

inline std::vector<PrintedRow> f4_printed_rows() {
  return {{{1}, 15, 8}, {{2}, 20, 5}, {{3}, 20, 7}, {{4}, 15, 11}};
}

inline std::vector<PrintedRow> g2_printed_rows() { return {{{1}, 5, 5}, {{2}, 5, 3}}; }

// Printed closed forms for the classical families at P_i with the weight omega_i.
inline PrintedRow classical_row(char kind, long l, long i) {
  const auto u = [](long v) { return static_cast<unsigned long>(v); };
  const unsigned ui = static_cast<unsigned>(i);
  switch (kind) {
    case 'A': return {{ui}, u(i * (l + 1 - i)), l + 1};
    case 'B':
      if (i < l) return {{ui}, u(i * (4 * l + 1 - 3 * i) / 2), 2 * l - i};
      return {{ui}, u(l * (l + 1) / 2), 2 * l};
    case 'C': return {{ui}, u(i * (4 * l + 1 - 3 * i) / 2), 2 * l - i + 1};
    default:
      if (i <= l - 2) return {{ui}, u(i * (4 * l - 1 - 3 * i) / 2), 2 * l - i - 1};
      return {{ui}, u(l * (l - 1) / 2), 2 * l - 2};
  }
}

}  // namespace oracle
