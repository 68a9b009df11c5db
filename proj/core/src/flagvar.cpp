#include "dualis/flagvar.hpp"

#include <algorithm>
#include <numeric>

#include "dualis/error.hpp"

namespace dualis {

namespace {

void check_removed(const RootSystem& rs, const Removed& removed) {
  require(!removed.empty(), "parabolic needs a nonempty removed set");
  for (auto i : removed) require(i >= 1 && i <= rs.rank(), "removed index out of range");
  Removed s = removed;
  std::sort(s.begin(), s.end());
  require(std::adjacent_find(s.begin(), s.end()) == s.end(), "removed indices must be distinct");
}

bool in_unipotent(const std::vector<long>& coords, const Removed& removed) {
  return std::any_of(removed.begin(), removed.end(), [&](unsigned i) { return coords[i - 1] > 0; });
}

std::vector<Rational> checked_weight(const RootSystem& rs, const Removed& removed,
                                     const WeightCoeffs& lambda) {
  std::vector<Rational> c(rs.rank(), Rational(0));
  for (const auto& [i, v] : lambda) {
    require(i >= 1 && i <= rs.rank(), "weight index out of range");
    require(v >= 0, "weight coefficients must be nonnegative");
    require(v == 0 || std::find(removed.begin(), removed.end(), i) != removed.end(),
            "weight supported outside the removed set");
    c[i - 1] = v;
  }
  for (auto i : removed) require(c[i - 1] > 0, "weight is not ample on G/P");
  return c;
}

std::vector<Rational> nef_ratios(const RootSystem& rs, const Removed& removed,
                                 const WeightCoeffs& lambda) {
  check_removed(rs, removed);
  auto c = checked_weight(rs, removed, lambda);
  RVec rho = rho_flag(rs, removed);
  std::vector<Rational> ratios;
  for (auto i : removed)
    ratios.push_back(RootSystem::coroot_pairing(rho, rs.simple_roots()[i - 1]) / c[i - 1]);
  return ratios;
}

}  // namespace

unsigned long dim_flag(const RootSystem& rs, const Removed& removed) {
  check_removed(rs, removed);
  unsigned long n = 0;
  for (const auto& c : rs.positive_coords())
    if (in_unipotent(c, removed)) ++n;
  return n;
}

RVec rho_flag(const RootSystem& rs, const Removed& removed) {
  check_removed(rs, removed);
  RVec s(rs.simple_roots()[0].size(), Rational(0));
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
    if (in_unipotent(rs.positive_coords()[k], removed))
      for (std::size_t a = 0; a < s.size(); ++a) s[a] += rs.positive_roots()[k][a];
  return s;
}

Rational nef_value(const RootSystem& rs, const Removed& removed, const WeightCoeffs& lambda) {
  auto r = nef_ratios(rs, removed, lambda);
  return *std::max_element(r.begin(), r.end());
}

Removed nef_morphism_target(const RootSystem& rs, const Removed& removed,
                            const WeightCoeffs& lambda) {
  auto r = nef_ratios(rs, removed, lambda);
  Rational tau = *std::max_element(r.begin(), r.end());
  Removed out;
  for (std::size_t k = 0; k < removed.size(); ++k)
    if (r[k] != tau) out.push_back(removed[k]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FlagTableRow> flag_table(const RootSystem& rs) {
  std::vector<FlagTableRow> rows;
  for (unsigned i = 1; i <= rs.rank(); ++i)
    rows.push_back({i, dim_flag(rs, {i}), nef_value(rs, {i}, {{i, 1}})});
  return rows;
}

namespace {

// Positive defects of maximal parabolics polarized by a fundamental weight.
long classified_defect(char kind, unsigned l, unsigned i) {
  switch (kind) {
    case 'A':
      if (i == 1 || i == l) return l;
      if (l >= 4 && l % 2 == 0 && (i == 2 || i == l - 1)) return 2;
      return 0;
    case 'B':
      if (l == 2 && i == 2) return 3;  // B2/P2 is C2/P1
      if (l == 4 && i == 4) return 4;
      return 0;
    case 'C':
      return i == 1 ? 2 * static_cast<long>(l) - 1 : 0;
    case 'D':
      return (l == 5 && (i == 4 || i == 5)) ? 4 : 0;
    default:
      return 0;
  }
}

}  // namespace

long defect_simple(const FlagFactor& f) {
  RootSystem rs(f.kind, f.rank);
  check_removed(rs, f.removed);
  checked_weight(rs, f.removed, f.weight);
  if (f.removed.size() > 1) return 0;
  const unsigned i = f.removed.front();
  if (f.weight.at(i) >= 2) return 0;
  return classified_defect(f.kind, f.rank, i);
}

long defect_flag(const std::vector<FlagFactor>& factors) {
  require(!factors.empty(), "defect needs at least one factor");
  std::vector<long> defs, dims;
  for (const auto& f : factors) {
    defs.push_back(defect_simple(f));
    dims.push_back(static_cast<long>(dim_flag(RootSystem(f.kind, f.rank), f.removed)));
  }
  long total = std::accumulate(dims.begin(), dims.end(), 0L);
  long best = 0;
  for (std::size_t k = 0; k < factors.size(); ++k)
    best = std::max(best, defs[k] - (total - dims[k]));
  return best;
}

AdjointDegrees adjoint_discriminant_degrees(const RootSystem& rs) {
  AdjointDegrees d;
  for (const auto& r : rs.positive_roots()) {
    if (rs.simply_laced() || rs.is_long(r)) d.deg_long += 2;
    else d.deg_short += 2;
  }
  return d;
}

Rational permanent(const RatMatrix& m) {
  require(m.is_square(), "permanent of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  require(n <= 24, "instance too large: permanent size above 24");
  Rational total = 0;
  std::vector<Rational> row_sums(n);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::fill(row_sums.begin(), row_sums.end(), Rational(0));
    for (std::size_t j = 0; j < n; ++j)
      if ((mask >> j) & 1u)
        for (std::size_t i = 0; i < n; ++i) row_sums[i] += m(i, j);
    Rational prod = 1;
    for (const auto& s : row_sums) prod *= s;
    if ((n - static_cast<std::size_t>(__builtin_popcount(mask))) % 2 == 1) prod = -prod;
    total += prod;
  }
  return total;
}

Rational permanent_by_permutations(const RatMatrix& m) {
  require(m.is_square(), "permanent of a non-square matrix");
  const std::size_t n = m.rows();
  require(n <= 10, "instance too large: permutation expansion above 10");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= m(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Rational permanent_sum(const RatMatrix& m, std::size_t s) {
  require(s <= m.rows() && s <= m.cols(), "submatrix size exceeds the matrix");
  if (s == 0) return 1;
  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  auto subsets = [&](std::size_t n, std::vector<std::vector<std::size_t>>& out) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != s) continue;
      std::vector<std::size_t> v;
      for (std::size_t k = 0; k < n; ++k)
        if ((mask >> k) & 1u) v.push_back(k);
      out.push_back(std::move(v));
    }
  };
  subsets(m.rows(), row_sets);
  subsets(m.cols(), col_sets);
  Rational total = 0;
  for (const auto& r : row_sets)
    for (const auto& c : col_sets) total += permanent(m.submatrix(r, c));
  return total;
}

RatMatrix gb_pairing_matrix(const RootSystem& rs) {
  const auto& pos = rs.positive_roots();
  const std::size_t n = pos.size();
  RVec rho = rs.rho();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational denom = RootSystem::coroot_pairing(rho, pos[i]);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = RootSystem::coroot_pairing(pos[j], pos[i]) / denom;
  }
  return m;
}

GbDegreeReport degree_dual_gb(const RootSystem& rs) {
  const std::size_t n = rs.positive_roots().size();
  if (n > 8) throw TooLargeError("instance too large: more than 8 positive roots");
  GbDegreeReport rep;
  rep.num_positive = n;
  RatMatrix m = gb_pairing_matrix(rs);
  for (std::size_t s = 0; s <= n; ++s) {
    Rational term = Rational(factorial(static_cast<unsigned>(s + 1))) * permanent_sum(m, n - s);
    rep.printed_sum += term;
    rep.alternating_sum += (s % 2 == 0) ? term : Rational(-term);
  }
  rep.degree = (n % 2 == 0) ? rep.alternating_sum : Rational(-rep.alternating_sum);
  rep.applicable = !(rs.kind() == 'A' && rs.rank() == 1);
  if (!rep.applicable)
    rep.note = "G/B is a line in its own span; the dual variety is empty";
  else
    rep.note = "degree = (-1)^N * alternating sum; the Kleiman formula pairs (s+1)! P_{N-s} with "
               "(-1)^{N-s} since the cotangent bundle has Chern roots -beta";
  return rep;
}

}  // namespace dualis
