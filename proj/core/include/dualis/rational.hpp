#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dualis {

// gmpxx keeps every mpq_class canonical after arithmetic: gcd(p, q) = 1 and q > 0.
using Integer = mpz_class;
using Rational = mpq_class;

// p/q in canonical form; the two-argument mpq_class constructor does not reduce.
Rational make_rational(const Integer& p, const Integer& q);

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer factorial(unsigned n);
Integer binomial(long n, long k);  // zero outside 0 <= k <= n

// 1/N! with the convention 1/N! = 0 for N < 0.
Rational inverse_factorial(long n);

std::vector<Rational> parse_rational_list(std::string_view text, char separator = ',');

}  // namespace dualis
