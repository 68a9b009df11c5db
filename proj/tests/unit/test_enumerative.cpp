#include <doctest.h>

#include "dualis/enumerative.hpp"
#include "dualis/error.hpp"
#include "oracles.hpp"

using namespace dualis;

namespace {

Integer binom(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Generic threshold from the Grassmannian bundle count, compared as k*n >= c + k^2 in integers.
bool generic_threshold(unsigned n, unsigned k, unsigned d, FormKind kind) {
  const Integer c = kind == FormKind::symmetric ? binom(d + k - 1, d) : binom(k, d);
  return Integer(k) * n >= c + Integer(k) * k;
}

}  // namespace

TEST_CASE("isotropic subspace examples") {
  CHECK(isotropic_exists(7, 4, 3, FormKind::skew));
  CHECK_FALSE(isotropic_exists(7, 5, 3, FormKind::skew));
  CHECK(isotropic_exists(4, 2, 3, FormKind::symmetric));
  CHECK_FALSE(isotropic_exists(3, 2, 3, FormKind::symmetric));
}

TEST_CASE("isotropic exceptions override the generic inequality") {
  // Quadrics: the generic inequality would accept k = 3 in C^5.
  CHECK(generic_threshold(5, 3, 2, FormKind::symmetric));
  CHECK_FALSE(isotropic_exists(5, 3, 2, FormKind::symmetric));
  CHECK(isotropic_exists(6, 3, 2, FormKind::symmetric));
  CHECK(generic_threshold(5, 3, 2, FormKind::skew));
  CHECK_FALSE(isotropic_exists(5, 3, 2, FormKind::skew));
  // Lambda^{n-2} with n even.
  CHECK(generic_threshold(6, 5, 4, FormKind::skew));
  CHECK_FALSE(isotropic_exists(6, 5, 4, FormKind::skew));
  CHECK(isotropic_exists(6, 4, 4, FormKind::skew));
  // Lambda^3 on C^7.
  CHECK(generic_threshold(7, 5, 3, FormKind::skew));
  CHECK_FALSE(isotropic_exists(7, 5, 3, FormKind::skew));
}

TEST_CASE("isotropic generic inequality at its boundary") {
  // Equality counts as existence.
  CHECK(isotropic_exists(4, 2, 3, FormKind::symmetric));   // C(4,3)/2 + 2 = 4
  CHECK(isotropic_exists(8, 3, 4, FormKind::symmetric));   // C(6,4)/3 + 3 = 8
  CHECK_FALSE(isotropic_exists(7, 3, 4, FormKind::symmetric));
  CHECK_FALSE(isotropic_exists(9, 6, 3, FormKind::skew));  // C(6,3)/6 + 6 = 28/3 > 9
  CHECK(isotropic_exists(10, 6, 3, FormKind::skew));
  CHECK(isotropic_exists(5, 4, 1, FormKind::symmetric));   // hyperplane
  CHECK_FALSE(isotropic_exists(5, 5, 1, FormKind::symmetric));
}

TEST_CASE("isotropic rejects invalid queries") {
  CHECK_THROWS_AS(isotropic_exists(5, 0, 3, FormKind::symmetric), DomainError);
  CHECK_THROWS_AS(isotropic_exists(5, 6, 3, FormKind::symmetric), DomainError);
  CHECK_THROWS_AS(isotropic_exists(5, 2, 0, FormKind::symmetric), DomainError);
  CHECK_THROWS_AS(isotropic_exists(5, 2, 3, FormKind::skew), DomainError);
}

TEST_CASE("isotropic existence is monotone") {
  for (FormKind kind : {FormKind::symmetric, FormKind::skew}) {
    for (unsigned d = 1; d <= 6; ++d) {
      for (unsigned n = 1; n <= 16; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
          if (kind == FormKind::skew && k < d) continue;
          if (!isotropic_exists(n, k, d, kind)) continue;
          INFO("n=" << n << " k=" << k << " d=" << d << " skew=" << (kind == FormKind::skew));
          if (k + 1 <= n + 1) CHECK(isotropic_exists(n + 1, k, d, kind));
          if (k > 1 && !(kind == FormKind::skew && k - 1 < d)) CHECK(isotropic_exists(n, k - 1, d, kind));
        }
      }
    }
  }
}

TEST_CASE("subalgebra counts of generic anticommutative algebras") {
  CHECK(count_subalgebras(4, 2) == 5);
  CHECK(count_subalgebras(5, 3) == 11);
  for (unsigned n = 3; n <= 8; ++n) {
    Integer expected = (oracle::pow_int(2, n) - (n % 2 == 0 ? 1 : -1)) / 3;
    CHECK(count_subalgebras(n, n - 2) == expected);
  }
  // k = 1: a generic endomorphism of C^n is diagonalizable with distinct eigenvalues, so its
  // 2-dimensional invariant subspaces are the C(n, 2) coordinate planes.
  for (unsigned n = 3; n <= 9; ++n) CHECK(count_subalgebras(n, 1) == binom(n, 2));
  CHECK_THROWS_AS(count_subalgebras(4, 3), DomainError);
  CHECK_THROWS_AS(count_subalgebras(4, 0), DomainError);
  CHECK_THROWS_AS(count_subalgebras(17, 2), TooLargeError);
}

TEST_CASE("the Aitken determinant is unitriangular on the diagonal pairs") {
  for (const std::vector<unsigned>& lambda :
       {std::vector<unsigned>{0, 0, 0}, {2, 1, 0}, {3, 3, 1}, {1, 1, 1}}) {
    CHECK(subalgebra_aitken_determinant(lambda, lambda) == 1);
  }
  // One row: the determinant is the single entry 1/(lambda - mu)!.
  CHECK(subalgebra_aitken_determinant({3}, {1}) == make_rational(1, 2));
  CHECK(subalgebra_aitken_determinant({1}, {3}) == 0);
}

TEST_CASE("D-discriminant degree") {
  CHECK(d_discriminant_degree(3) == 6);
  CHECK(d_discriminant_degree(4) == 24);
  for (unsigned n = 3; n <= 12; ++n) {
    const Integer n2 = Integer(n) * n;
    const Integer num = (3 * n2 - 5 * Integer(n)) * oracle::pow_int(2, n) -
                        4 * Integer(n) * (n % 2 == 0 ? 1 : -1);
    CHECK(num % 18 == 0);
    CHECK(d_discriminant_degree(n) == num / 18);
    CHECK(d_discriminant_degree(n) > 0);
  }
  CHECK_THROWS_AS(d_discriminant_degree(2), DomainError);
}

TEST_CASE("one-dimensional subalgebras of a generic commutative algebra") {
  CHECK(count_1dim_subalgebras_commutative(1) == 1);
  CHECK(count_1dim_subalgebras_commutative(2) == 3);
  CHECK(count_1dim_subalgebras_commutative(5) == 31);
  CHECK_THROWS_AS(count_1dim_subalgebras_commutative(0), DomainError);
}

TEST_CASE("constant-rank bound examples") {
  const auto g = constant_rank_bounds(2, 3, 3, MatrixKind::general);
  CHECK(g.rank_bounded_below_max == Integer(1));
  CHECK(g.constant_rank_upper == Integer(3));
  CHECK(g.constant_rank_lower == Integer(2));

  const auto s = constant_rank_bounds(2, 4, 4, MatrixKind::symmetric);
  CHECK(s.rank_bounded_below_max == Integer(3));
  CHECK(s.constant_rank_upper_projective == Integer(2));

  const auto so = constant_rank_bounds(3, 5, 5, MatrixKind::symmetric);
  CHECK(so.constant_rank_exact == Integer(1));
  const auto ko = constant_rank_bounds(3, 5, 5, MatrixKind::skew);
  CHECK(ko.constant_rank_exact == Integer(1));

  const auto k = constant_rank_bounds(2, 5, 5, MatrixKind::skew);
  CHECK(k.rank_bounded_below_max == Integer(3));

  CHECK_THROWS_AS(constant_rank_bounds(0, 3, 3, MatrixKind::general), DomainError);
  CHECK_THROWS_AS(constant_rank_bounds(4, 3, 5, MatrixKind::general), DomainError);
}

TEST_CASE("constant-rank lower bounds never exceed upper bounds") {
  for (MatrixKind kind : {MatrixKind::general, MatrixKind::symmetric, MatrixKind::skew}) {
    for (unsigned m = 1; m <= 10; ++m) {
      for (unsigned n = 1; n <= 10; ++n) {
        if (kind != MatrixKind::general && n != m) continue;
        for (unsigned r = 1; r <= std::min(m, n); ++r) {
          const auto b = constant_rank_bounds(r, m, n, kind);
          if (b.constant_rank_lower && b.constant_rank_upper) {
            INFO("r=" << r << " m=" << m << " n=" << n);
            CHECK(*b.constant_rank_lower <= *b.constant_rank_upper);
          }
        }
      }
    }
  }
}
