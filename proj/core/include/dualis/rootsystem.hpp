#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dualis/rational.hpp"

namespace dualis {

using RVec = std::vector<Rational>;

Rational dot(const RVec& a, const RVec& b);

// Reduced irreducible root system in its standard Bourbaki ambient realization, paired by the
// ambient dot product. Simple roots and fundamental weights are numbered 1..rank in Bourbaki
// order; vectors are stored 0-based.
class RootSystem {
 public:
  RootSystem(char kind, unsigned rank);

  char kind() const { return kind_; }
  unsigned rank() const { return rank_; }
  std::string name() const { return std::string(1, kind_) + std::to_string(rank_); }

  const std::vector<RVec>& simple_roots() const { return simple_; }
  const std::vector<RVec>& positive_roots() const { return positive_; }
  // Coefficients of each positive root in the simple roots, parallel to positive_roots().
  const std::vector<std::vector<long>>& positive_coords() const { return coords_; }
  const std::vector<RVec>& fundamental_weights() const { return fundamental_; }

  // <lambda, alpha^vee> = 2 (lambda, alpha) / (alpha, alpha).
  static Rational coroot_pairing(const RVec& lambda, const RVec& alpha);

  // Ambient vector of sum_i c_i omega_i.
  RVec weight(const std::vector<Rational>& coeffs) const;
  RVec rho() const;

  bool is_long(const RVec& root) const;
  bool simply_laced() const;

  static std::size_t expected_positive_count(char kind, unsigned rank);

 private:
  char kind_;
  unsigned rank_;
  std::vector<RVec> simple_;
  std::vector<RVec> positive_;
  std::vector<std::vector<long>> coords_;
  std::vector<RVec> fundamental_;
  Rational max_norm_;
};

}  // namespace dualis
