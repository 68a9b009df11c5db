#include "dualis/mpinv.hpp"

#include <cctype>

#include "dualis/error.hpp"

namespace dualis {

GaussRational operator/(const GaussRational& a, const GaussRational& b) {
  Rational n = b.re * b.re + b.im * b.im;
  if (n == 0) throw DomainError("division by zero");
  GaussRational p = a * b.conj();
  return {p.re / n, p.im / n};
}

std::string GaussRational::to_string() const {
  if (im == 0) return dualis::to_string(re);
  std::string imag = (im == 1) ? "i" : (im == -1) ? "-i" : dualis::to_string(im) + "i";
  if (re == 0) return imag;
  return dualis::to_string(re) + (im > 0 ? "+" : "") + imag;
}

GaussRational GaussRational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw DomainError("empty complex number");
  if (s.back() != 'i') return {parse_rational(s), 0};
  s.pop_back();
  // Split at the last sign that is not the leading one: "a+b", "a-b", "b", "-b", "".
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  auto imag_part = [](std::string t) -> Rational {
    if (t.empty() || t == "+") return 1;
    if (t == "-") return -1;
    return parse_rational(t);
  };
  if (split == std::string::npos) return {0, imag_part(s)};
  return {parse_rational(s.substr(0, split)), imag_part(s.substr(split))};
}

std::vector<GaussRational> parse_gauss_list(std::string_view text) {
  std::vector<GaussRational> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(',', start);
    out.push_back(GaussRational::parse(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

RatMatrix mp_matrix(const RatMatrix& a) {
  if (a.is_zero()) return RatMatrix(a.cols(), a.rows());
  Rref r = rref(a);
  const std::size_t k = r.pivot_columns.size();
  std::vector<std::size_t> all_rows(a.rows()), top(k);
  for (std::size_t i = 0; i < a.rows(); ++i) all_rows[i] = i;
  for (std::size_t i = 0; i < k; ++i) top[i] = i;
  std::vector<std::size_t> all_cols(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) all_cols[j] = j;
  RatMatrix b = a.submatrix(all_rows, r.pivot_columns);  // m x k, full column rank
  RatMatrix c = r.reduced.submatrix(top, all_cols);       // k x n, full row rank
  RatMatrix ct = c.transpose(), bt = b.transpose();
  return ct * inverse(c * ct) * inverse(bt * b) * bt;
}

bool penrose_identities(const RatMatrix& a, const RatMatrix& p) {
  if (p.rows() != a.cols() || p.cols() != a.rows()) return false;
  RatMatrix ap = a * p, pa = p * a;
  return ap * a == a && pa * p == p && ap.transpose() == ap && pa.transpose() == pa;
}

RatMatrix mp_bilinear(const RatMatrix& omega, BilinearKind kind) {
  require(omega.is_square(), "bilinear form needs a square matrix");
  RatMatrix t = omega.transpose();
  if (kind == BilinearKind::symmetric) require(t == omega, "form is not symmetric");
  else require(t == omega.scaled(-1), "form is not skew-symmetric");
  const std::size_t n = omega.rows();
  if (omega.is_zero()) return RatMatrix(n, n);
  // Ann(Ker omega) is the row space of omega; take its RREF rows as a basis.
  Rref r = rref(omega);
  const std::size_t k = r.pivot_columns.size();
  RatMatrix u(n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) u(i, j) = r.reduced(j, i);
  RatMatrix w = u.transpose() * omega * u;
  return u * inverse(w) * u.transpose();
}

GaussRational bilinear_product(const GaussVector& u, const GaussVector& w, const RatMatrix& gram) {
  require(gram.rows() == u.size() && gram.cols() == w.size(), "product dimension mismatch");
  GaussRational s{0, 0};
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      if (gram(i, j) != 0) s = s + u[i] * GaussRational{gram(i, j), 0} * w[j];
  return s;
}

GaussVector mp_vector(const GaussVector& v, const RatMatrix& gram) {
  GaussVector out(v.size(), GaussRational{0, 0});
  bool zero = true;
  for (const auto& x : v) zero = zero && x.is_zero();
  if (zero) return out;
  GaussRational vv = bilinear_product(v, v, gram);
  if (!vv.is_zero()) {
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = GaussRational{2, 0} * v[i] / vv;
    return out;
  }
  GaussVector vbar(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) vbar[i] = v[i].conj();
  GaussRational denom = bilinear_product(vbar, v, gram);
  if (denom.is_zero()) throw DomainError("conjugate-isotropic vector");
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = vbar[i] / denom;
  return out;
}

GaussVector mp_vector(const GaussVector& v) { return mp_vector(v, RatMatrix::identity(v.size())); }

}  // namespace dualis
