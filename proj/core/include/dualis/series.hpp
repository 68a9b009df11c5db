#pragma once

#include <optional>
#include <vector>

#include "dualis/multipoly.hpp"

namespace dualis {

// Multivariate power series truncated at total degree `cap`, optionally also at a per-variable
// exponent box. Every stored term satisfies both bounds.
class TruncSeries {
 public:
  TruncSeries(MultiPoly body, unsigned cap, std::optional<Exponents> box = std::nullopt);

  const MultiPoly& body() const { return body_; }
  unsigned cap() const { return cap_; }
  const std::optional<Exponents>& box() const { return box_; }
  Rational coefficient(const Exponents& e) const { return body_.coefficient(e); }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries scaled(const Rational& c) const;

 private:
  MultiPoly body_;
  unsigned cap_;
  std::optional<Exponents> box_;
};

// Multiplicative inverse up to the truncation bounds; the constant term must be nonzero.
TruncSeries series_mul_inverse(const TruncSeries& s);

}  // namespace dualis
