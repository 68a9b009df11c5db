#include "dualis/rootsystem.hpp"

#include <algorithm>
#include <map>

#include "dualis/error.hpp"
#include "dualis/matrix.hpp"

namespace dualis {

Rational dot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw DomainError("vectors of different dimension");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

RVec unit(std::size_t dim, std::size_t i, const Rational& c = 1) {
  RVec v(dim, Rational(0));
  v[i] = c;
  return v;
}

RVec add(const RVec& a, const RVec& b, const Rational& scale = 1) {
  RVec v = a;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += scale * b[i];
  return v;
}

std::vector<RVec> bourbaki_simple_roots(char kind, unsigned n) {
  std::vector<RVec> s;
  auto chain = [&](std::size_t dim, unsigned count) {
    for (unsigned i = 0; i < count; ++i) s.push_back(add(unit(dim, i), unit(dim, i + 1), -1));
  };
  switch (kind) {
    case 'A':
      chain(n + 1, n);
      break;
    case 'B':
      chain(n, n - 1);
      s.push_back(unit(n, n - 1));
      break;
    case 'C':
      chain(n, n - 1);
      s.push_back(unit(n, n - 1, 2));
      break;
    case 'D':
      chain(n, n - 1);
      s.push_back(add(unit(n, n - 2), unit(n, n - 1)));
      break;
    case 'E': {
      const Rational h(1, 2);
      RVec a1(8, -h);
      a1[0] = h;
      a1[7] = h;
      s.push_back(a1);
      s.push_back(add(unit(8, 0), unit(8, 1)));
      for (unsigned k = 3; k <= n; ++k) {
        // alpha_3 = e2 - e1 and alpha_k = e_{k-1} - e_{k-2} for k >= 4.
        std::size_t hi = k == 3 ? 1 : k - 2, lo = k == 3 ? 0 : k - 3;
        s.push_back(add(unit(8, hi), unit(8, lo), -1));
      }
      break;
    }
    case 'F': {
      const Rational h(1, 2);
      s.push_back(add(unit(4, 1), unit(4, 2), -1));
      s.push_back(add(unit(4, 2), unit(4, 3), -1));
      s.push_back(unit(4, 3));
      s.push_back(RVec{h, -h, -h, -h});
      break;
    }
    case 'G':
      s.push_back(RVec{1, -1, 0});
      s.push_back(RVec{-2, 1, 1});
      break;
    default:
      throw DomainError(std::string("unknown root system type '") + kind + "'");
  }
  return s;
}

void check_admissible(char kind, unsigned n) {
  bool ok = false;
  switch (kind) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: break;
  }
  if (!ok) throw DomainError("inadmissible root system " + std::string(1, kind) + std::to_string(n));
  if (n > 64) throw TooLargeError("instance too large: rank above 64");
}

}  // namespace

Rational RootSystem::coroot_pairing(const RVec& lambda, const RVec& alpha) {
  return 2 * dot(lambda, alpha) / dot(alpha, alpha);
}

std::size_t RootSystem::expected_positive_count(char kind, unsigned n) {
  switch (kind) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
    default: return 0;
  }
}

RootSystem::RootSystem(char kind, unsigned rank) : kind_(kind), rank_(rank) {
  check_admissible(kind, rank);
  simple_ = bourbaki_simple_roots(kind, rank);
  const std::size_t n = rank;
  // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<std::vector<long>> cartan(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational c = coroot_pairing(simple_[i], simple_[j]);
      if (c.get_den() != 1) throw DomainError("non-integral Cartan entry");
      cartan[i][j] = c.get_num().get_si();
    }
  // Grow positive roots by height using alpha_i-strings: beta + alpha_i is a root iff
  // p - <beta, alpha_i^vee> > 0, where p counts how far beta - k alpha_i stays a root.
  std::map<std::vector<long>, bool> known;
  std::vector<std::vector<long>> layer;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> c(n, 0);
    c[i] = 1;
    layer.push_back(c);
    known[c] = true;
  }
  while (!layer.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& beta : layer) {
      coords_.push_back(beta);
      for (std::size_t i = 0; i < n; ++i) {
        long pairing = 0;
        for (std::size_t k = 0; k < n; ++k) pairing += beta[k] * cartan[k][i];
        long p = 0;
        std::vector<long> down = beta;
        while (true) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          std::vector<long> up = beta;
          ++up[i];
          if (!known.count(up)) {
            known[up] = true;
            next.push_back(up);
          }
        }
      }
    }
    layer = std::move(next);
  }
  for (const auto& c : coords_) {
    RVec v(simple_[0].size(), Rational(0));
    for (std::size_t k = 0; k < n; ++k) v = add(v, simple_[k], c[k]);
    positive_.push_back(v);
  }
  if (positive_.size() != expected_positive_count(kind, rank))
    throw DomainError("positive root count mismatch for " + name());
  // omega_i = sum_k C_{ik} alpha_k with C the inverse of the Cartan matrix.
  RatMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = cartan[i][j];
  RatMatrix inv = inverse(a);
  for (std::size_t i = 0; i < n; ++i) {
    RVec w(simple_[0].size(), Rational(0));
    for (std::size_t k = 0; k < n; ++k) w = add(w, simple_[k], inv(i, k));
    fundamental_.push_back(w);
  }
  max_norm_ = 0;
  for (const auto& r : simple_) max_norm_ = std::max(max_norm_, dot(r, r));
}

RVec RootSystem::weight(const std::vector<Rational>& coeffs) const {
  if (coeffs.size() != rank_) throw DomainError("weight needs one coefficient per simple root");
  RVec w(simple_[0].size(), Rational(0));
  for (std::size_t i = 0; i < rank_; ++i) w = add(w, fundamental_[i], coeffs[i]);
  return w;
}

RVec RootSystem::rho() const { return weight(std::vector<Rational>(rank_, Rational(1))); }

bool RootSystem::is_long(const RVec& root) const { return dot(root, root) == max_norm_; }

bool RootSystem::simply_laced() const { return kind_ == 'A' || kind_ == 'D' || kind_ == 'E'; }

}  // namespace dualis
