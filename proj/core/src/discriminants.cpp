#include "dualis/discriminants.hpp"

#include <algorithm>
#include <functional>

#include "dualis/error.hpp"

namespace dualis {

MultiPoly BinaryForm::as_poly() const {
  const std::vector<std::string> vars{"x", "y"};
  MultiPoly p(vars);
  const unsigned d = degree();
  for (unsigned i = 0; i <= d && i < coeffs.size(); ++i)
    p = p + MultiPoly::monomial(vars, {d - i, i}, coeffs[i]);
  return p;
}

namespace {

template <class Entry, class Matrix>
void fill_sylvester(Matrix& m, unsigned d, const std::function<Entry(unsigned)>& a) {
  // df/dy = sum_k (k+1) a_{k+1} x^{d-1-k} y^k; df/dx = sum_k (d-k) a_k x^{d-1-k} y^k.
  for (unsigned r = 0; r + 1 < d; ++r)
    for (unsigned k = 0; k < d; ++k) {
      m(r, r + k) = a(k + 1) * Rational(k + 1);
      m(d - 1 + r, r + k) = a(k) * Rational(d - k);
    }
}

Rational sylvester_scale(unsigned d) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), d, d - 2);
  Rational s = make_rational(Integer(1), p);
  return (d % 2 == 0) ? Rational(-s) : s;
}

}  // namespace

RatMatrix discriminant_sylvester_matrix(const BinaryForm& form) {
  const unsigned d = form.degree();
  require(d >= 2, "binary discriminant needs degree at least 2");
  RatMatrix m(2 * d - 2, 2 * d - 2);
  fill_sylvester<Rational>(m, d, [&](unsigned i) { return form.coeffs[i]; });
  return m;
}

Rational binary_discriminant(const BinaryForm& form) {
  const unsigned d = form.degree();
  require(d >= 2, "binary discriminant needs degree at least 2");
  return sylvester_scale(d) * determinant(discriminant_sylvester_matrix(form));
}

MultiPoly binary_discriminant_symbolic(unsigned d) {
  require(d >= 2, "binary discriminant needs degree at least 2");
  require(d <= 12, "instance too large: symbolic discriminant degree above 12");
  std::vector<std::string> vars;
  for (unsigned i = 0; i <= d; ++i) vars.push_back("a" + std::to_string(i));
  const std::size_t n = 2 * d - 2;
  PolyMatrix m(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
  struct View {
    PolyMatrix& m;
    MultiPoly& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
  } view{m};
  struct Sym {
    MultiPoly p;
    MultiPoly operator*(const Rational& c) const { return p.scaled(c); }
  };
  fill_sylvester<Sym>(view, d, [&](unsigned i) { return Sym{MultiPoly::variable(vars, i)}; });
  return poly_determinant(m).scaled(sylvester_scale(d));
}

bool discriminant_vanishes(const BinaryForm& form) {
  const unsigned d = form.degree();
  require(d >= 2, "binary discriminant needs degree at least 2");
  require(std::any_of(form.coeffs.begin(), form.coeffs.end(), [](const Rational& c) { return c != 0; }),
          "zero binary form");
  MultiPoly f = form.as_poly();
  MultiPoly fx = f.derivative(0), fy = f.derivative(1);
  if (fx.is_zero() || fy.is_zero()) return true;  // the other partial has degree d-1 >= 1
  // A common homogeneous factor is either a power of y or comes from the dehomogenized gcd.
  auto y_order = [](const MultiPoly& p) {
    unsigned ord = ~0u;
    for (const auto& [e, c] : p.terms()) ord = std::min(ord, e[1]);
    return ord;
  };
  if (std::min(y_order(fx), y_order(fy)) > 0) return true;
  const std::vector<std::string> t{"t"};
  auto dehom = [&](const MultiPoly& p) {
    MultiPoly::TermMap m;
    for (const auto& [e, c] : p.terms()) m.emplace(Exponents{e[0]}, c);
    return MultiPoly(t, std::move(m));
  };
  return univariate_gcd(dehom(fx), dehom(fy)).total_degree() > 0;
}

void validate_complex(const BasedComplex& c) {
  require(!c.dims.empty(), "complex needs at least one slot");
  require(c.maps.size() + 1 == c.dims.size(), "complex needs one map between consecutive slots");
  for (std::size_t i = 0; i < c.maps.size(); ++i)
    require(c.maps[i].rows() == c.dims[i + 1] && c.maps[i].cols() == c.dims[i],
            "map " + std::to_string(i) + " has the wrong shape");
  for (std::size_t i = 0; i + 1 < c.maps.size(); ++i)
    if (!(c.maps[i + 1] * c.maps[i]).is_zero()) throw DomainError("not a complex");
  std::vector<std::size_t> rk;
  for (const auto& m : c.maps) rk.push_back(rank(m));
  const std::size_t r = c.maps.size();
  for (std::size_t i = 0; i <= r; ++i) {
    std::size_t in = i == 0 ? 0 : rk[i - 1];
    std::size_t out = i == r ? 0 : rk[i];
    if (in + out != c.dims[i]) throw DomainError("complex not exact");
  }
}

namespace {

std::vector<std::size_t> complement(const std::vector<std::size_t>& s, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k)
    if (!std::binary_search(s.begin(), s.end(), k)) out.push_back(k);
  return out;
}

int shuffle_sign(const std::vector<std::size_t>& first, const std::vector<std::size_t>& rest) {
  std::size_t inversions = 0;
  for (auto a : first)
    for (auto b : rest)
      if (a > b) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<std::size_t> iota_set(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = k;
  return v;
}

}  // namespace

bool is_admissible(const BasedComplex& c, const AdmissibleCollection& coll) {
  const std::size_t r = c.maps.size();
  if (coll.size() != r + 1) return false;
  if (!coll[0].empty() || coll[r] != iota_set(c.dims[r])) return false;
  for (std::size_t i = 0; i < r; ++i) {
    auto cols = complement(coll[i], c.dims[i]);
    if (cols.size() != coll[i + 1].size()) return false;
    if (determinant(c.maps[i].submatrix(coll[i + 1], cols)) == 0) return false;
  }
  return true;
}

AdmissibleCollection greedy_admissible_collection(const BasedComplex& c) {
  validate_complex(c);
  const std::size_t r = c.maps.size();
  AdmissibleCollection coll(r + 1);
  coll[r] = iota_set(c.dims[r]);
  for (std::size_t i = r; i-- > 0;) {
    RatMatrix rows = c.maps[i].submatrix(coll[i + 1], iota_set(c.dims[i]));
    auto pivots = rref(rows).pivot_columns;
    if (pivots.size() != coll[i + 1].size()) throw DomainError("complex not exact");
    coll[i] = complement(pivots, c.dims[i]);
  }
  if (!coll[0].empty()) throw DomainError("complex not exact");
  return coll;
}

std::vector<AdmissibleCollection> all_admissible_collections(const BasedComplex& c) {
  validate_complex(c);
  const std::size_t r = c.maps.size();
  for (auto b : c.dims)
    if (b > 16) throw TooLargeError("instance too large: slot dimension above 16");
  std::vector<AdmissibleCollection> out;
  AdmissibleCollection coll(r + 1);
  coll[r] = iota_set(c.dims[r]);
  // Walk right to left: given I_{i+1}, try every column set of the right size for B_i \ I_i.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == 0) {
      out.push_back(coll);
      return;
    }
    --i;
    const std::size_t n = c.dims[i], want = coll[i + 1].size();
    if (want > n) return;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != want) continue;
      std::vector<std::size_t> cols;
      for (std::size_t k = 0; k < n; ++k)
        if ((mask >> k) & 1u) cols.push_back(k);
      if (determinant(c.maps[i].submatrix(coll[i + 1], cols)) == 0) continue;
      coll[i] = complement(cols, n);
      if (i == 0 && !coll[0].empty()) continue;
      rec(i);
    }
  };
  rec(r);
  return out;
}

Rational cayley_value(const BasedComplex& c, const AdmissibleCollection& coll) {
  if (!is_admissible(c, coll)) throw DomainError("collection is not admissible");
  Rational value = 1;
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    auto cols = complement(coll[i], c.dims[i]);
    Rational delta = determinant(c.maps[i].submatrix(coll[i + 1], cols));
    delta *= shuffle_sign(coll[i], cols);
    value = (i % 2 == 0) ? Rational(value * delta) : Rational(value / delta);
  }
  if (c.start_degree % 2 != 0) value = 1 / value;
  return value;
}

Rational cayley_determinant(const BasedComplex& c) {
  return cayley_value(c, greedy_admissible_collection(c));
}

long cayley_scaling_exponent(const BasedComplex& c) {
  validate_complex(c);
  long e = 0;
  for (std::size_t i = 0; i < c.dims.size(); ++i) {
    long deg = c.start_degree + static_cast<long>(i);
    long term = deg * static_cast<long>(c.dims[i]);
    e += ((deg + 1) % 2 == 0) ? term : -term;
  }
  return e;
}

}  // namespace dualis
