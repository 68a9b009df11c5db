#include "dualis/enumerative.hpp"

#include <algorithm>
#include <functional>

#include "dualis/error.hpp"
#include "dualis/matrix.hpp"

namespace dualis {

std::string to_string(FormKind k) { return k == FormKind::symmetric ? "sym" : "skew"; }

std::string to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::general: return "general";
    case MatrixKind::symmetric: return "sym";
    case MatrixKind::skew: return "skew";
  }
  return "general";
}

bool isotropic_exists(unsigned n, unsigned k, unsigned d, FormKind kind) {
  require(n >= 1 && k >= 1 && k <= n, "isotropic query needs 1 <= k <= n");
  require(d >= 1, "form degree must be positive");
  if (kind == FormKind::skew) require(k >= d, "skew query needs k >= d");
  if (d == 2) return n >= 2 * k;
  if (kind == FormKind::skew && n % 2 == 0 && d + 2 == n) return k <= n - 2;
  if (kind == FormKind::skew && d == 3 && n == 7) return k <= 4;
  Integer c = kind == FormKind::symmetric ? binomial(d + k - 1, d) : binomial(k, d);
  return Rational(n) >= make_rational(c, Integer(k)) + k;
}

Rational subalgebra_aitken_determinant(const std::vector<unsigned>& lambda,
                                       const std::vector<unsigned>& mu) {
  const std::size_t s = lambda.size();
  require(mu.size() == s, "partitions of different length");
  RatMatrix a(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      a(i, j) = inverse_factorial(static_cast<long>(i) - static_cast<long>(j) +
                                  static_cast<long>(lambda[j]) - static_cast<long>(mu[i]));
  return determinant(a);
}

Integer count_subalgebras(unsigned n, unsigned k) {
  require(k >= 1 && k + 2 <= n, "subalgebra count needs 1 <= k <= n-2");
  if (n > 16) throw TooLargeError("instance too large: n above 16");
  const unsigned rows = k + 1, width = n - k - 1;
  std::vector<std::vector<unsigned>> parts;
  std::vector<unsigned> cur(rows);
  std::function<void(unsigned, unsigned)> gen = [&](unsigned pos, unsigned hi) {
    if (pos == rows) {
      parts.push_back(cur);
      return;
    }
    for (unsigned v = 0; v <= hi; ++v) {
      cur[pos] = v;
      gen(pos + 1, v);
    }
  };
  gen(0, width);
  Rational total = 0;
  for (const auto& lambda : parts) {
    for (const auto& mu : parts) {
      bool inside = true;
      for (unsigned i = 0; i < rows && inside; ++i) inside = mu[i] <= lambda[i];
      if (!inside) continue;
      unsigned sl = 0, sm = 0;
      Rational ratio = 1;
      for (unsigned i = 0; i < rows; ++i) {
        sl += lambda[i];
        sm += mu[i];
        // (lambda_i + k + 1 - i)! / (mu_i + k + 1 - i)! with i counted from 1.
        ratio *= make_rational(factorial(lambda[i] + k - i), factorial(mu[i] + k - i));
      }
      Rational det = subalgebra_aitken_determinant(lambda, mu);
      if (det == 0) continue;
      Rational term = ratio * Rational(factorial(sl - sm)) * det * det;
      total += (sm % 2 == 0) ? term : Rational(-term);
    }
  }
  if (total.get_den() != 1) throw DomainError("non-integral subalgebra count");
  return total.get_num();
}

Integer d_discriminant_degree(unsigned n) {
  require(n >= 3, "degree formula needs n >= 3");
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, n);
  Integer nn(n);
  Integer num = (3 * nn * nn - 5 * nn) * p - 4 * nn * (n % 2 == 0 ? 1 : -1);
  if (num % 18 != 0) throw DomainError("non-integral discriminant degree");
  return num / 18;
}

Integer count_1dim_subalgebras_commutative(unsigned n) {
  require(n >= 1, "needs n >= 1");
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, n);
  return p - 1;
}

ConstantRankBounds constant_rank_bounds(unsigned r, unsigned m, unsigned n, MatrixKind kind) {
  require(r >= 1, "rank must be positive");
  ConstantRankBounds b;
  b.kind = kind;
  b.r = r;
  b.m = m;
  b.n = kind == MatrixKind::general ? n : m;
  if (kind == MatrixKind::general) {
    require(r <= std::min(m, n), "rank exceeds the matrix size");
    const unsigned lo = std::min(m, n), hi = std::max(m, n);
    b.rank_bounded_below_max = Integer(m - r) * (n - r);
    b.constant_rank_lower = Integer(hi - r + 1);
    if (r >= 2) b.constant_rank_upper = Integer(lo + hi - 2 * r + 1);
    return b;
  }
  require(r <= m, "rank exceeds the matrix size");
  if (kind == MatrixKind::symmetric) b.rank_bounded_below_max = binomial(m - r + 1, 2);
  else if (r % 2 == 0) b.rank_bounded_below_max = binomial(m - r, 2);
  if (r % 2 == 1) {
    b.constant_rank_exact = Integer(1);
    return b;
  }
  b.constant_rank_lower = Integer(m - r + 1);
  if (kind == MatrixKind::symmetric) {
    b.constant_rank_upper_projective = Integer(m - r);
    b.constant_rank_upper = Integer(m - r + 1);
  }
  return b;
}

}  // namespace dualis
