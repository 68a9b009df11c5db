// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include <algorithm>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dualis/cli.hpp"
#include "dualis/degrees.hpp"
#include "dualis/discriminants.hpp"
#include "dualis/dualcurve.hpp"
#include "dualis/enumerative.hpp"
#include "dualis/flagvar.hpp"
#include "dualis/hyperdet.hpp"
#include "dualis/mpinv.hpp"
#include "dualis/multiseg.hpp"
#include "oracles.hpp"

using namespace dualis;

namespace {

// Collects failed sub-checks so a FAIL line can say what broke.
class Ledger {
 public:
  void check(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool passed() const { return failed_ == 0 && total_ > 0; }
  std::string summary() const {
    std::ostringstream s;
    s << total_ - failed_ << "/" << total_ << " checks";
    for (const auto& f : failures_) s << "; failed: " << f;
    return s.str();
  }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

void plucker(Ledger& l) {
  const PluckerData cubic = plucker_solve(3, 0, 0);
  l.check(cubic.g == 1 && cubic.d_star == 6 && cubic.b == 0 && cubic.f == 9, "smooth cubic");
  const PluckerData quartic = plucker_solve(4, 0, 0);
  l.check(quartic.g == 3 && quartic.d_star == 12 && quartic.b == 28 && quartic.f == 24,
          "smooth quartic");
}

void biduality(Ledger& l) {
  const std::vector<std::pair<std::string, std::string>> curves{
      {"t", "t^2"},
      {"t^2", "t^3"},
      {"(1 - t^2)/(1 + t^2)", "(2*t)/(1 + t^2)"},
      {"t^2 - 1", "t^3 - t"},
      {"t", "(1)/(t)"},
      {"t^3", "t^4 + t"},
      {"(t^2 + 1)/(t - 3)", "t^2 - 2*t"},
  };
  for (const auto& [x, y] : curves) {
    const RationalParamCurve c{RatFunc::parse(x), RatFunc::parse(y)};
    l.check(dual_parametric(dual_parametric(c)) == c, "(" + x + ", " + y + ")");
  }
}

void binary_discriminants(Ledger& l) {
  for (unsigned d = 2; d <= 8; ++d) {
    const MultiPoly p = binary_discriminant_symbolic(d);
    l.check(p.is_homogeneous() && p.total_degree() == static_cast<int>(2 * (d - 1)),
            "symbolic degree d=" + std::to_string(d));
  }
  for (unsigned d = 2; d <= 4; ++d) {
    std::vector<Rational> a(d + 1, Rational(-2));
    std::size_t mismatches = 0;
    while (true) {
      const bool zero = std::all_of(a.begin(), a.end(), [](const Rational& v) { return v == 0; });
      if (!zero && discriminant_vanishes(BinaryForm{a}) != oracle::binary_form_has_repeated_root(a))
        ++mismatches;
      std::size_t i = 0;
      while (i <= d && a[i] == 2) a[i++] = -2;
      if (i > d) break;
      a[i] += 1;
    }
    l.check(mismatches == 0, "gcd oracle grid d=" + std::to_string(d));
  }
}

long scaling_exponent_oracle(const BasedComplex& c) {
  long e = 0;
  for (std::size_t i = 0; i < c.dims.size(); ++i) {
    const long deg = c.start_degree + static_cast<long>(i);
    e += (deg % 2 == 0 ? -1 : 1) * deg * static_cast<long>(c.dims[i]);
  }
  return e;
}

void cayley(Ledger& l) {
  oracle::Rng rng(2024);
  for (int t = 0; t < 120; ++t) {
    const BasedComplex c = oracle::random_exact_complex(rng, 4, 2 + rng() % 3);
    const Rational v = cayley_determinant(c);
    const auto all = all_admissible_collections(c);
    bool same = !all.empty();
    for (const auto& coll : all) same = same && cayley_value(c, coll) == v;
    l.check(same, "independence on complex " + std::to_string(t));
    if (t >= 20) continue;
    const long e = scaling_exponent_oracle(c);
    for (int s = 0; s < 5; ++s) {
      Rational lambda = oracle::random_rational(rng);
      if (lambda == 0) lambda = 2;
      BasedComplex scaled = c;
      for (auto& m : scaled.maps) m = m.scaled(lambda);
      Rational expected = v;
      for (long k = 0; k < std::abs(e); ++k) expected = e > 0 ? Rational(expected * lambda) : Rational(expected / lambda);
      l.check(cayley_determinant(scaled) == expected, "scaling law");
    }
  }
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const RatMatrix d = oracle::random_invertible(rng, n);
    BasedComplex c;
    c.dims = {n, n};
    c.maps = {d};
    l.check(cayley_determinant(c) == oracle::leibniz_det(d), "two-term determinant");
  }
}

void degrees(Ledger& l) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned d = 2; d <= 5; ++d) {
      const DefectDegree dd = defect_and_degree(chern_data_veronese(n, d));
      l.check(dd.defect == 0 && dd.degree == Integer(n + 1) * oracle::pow_int(d - 1, n),
              "Veronese n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  }
  for (unsigned big_n = 2; big_n <= 5; ++big_n) {
    for (unsigned d = 2; d <= 5; ++d) {
      const DefectDegree dd = defect_and_degree(chern_data_complete_intersection(big_n, {d}));
      l.check(dd.defect == 0 && dd.degree == Integer(d) * oracle::pow_int(d - 1, big_n - 1),
              "hypersurface");
    }
  }
  const DefectDegree ci = defect_and_degree(chern_data_complete_intersection(3, {2, 2}));
  l.check(ci.defect == 0 && ci.degree == 8, "(2,2) complete intersection");
  l.check(degree_curve_dual(1, 4) == 8, "elliptic quartic class");
}

void hyperdeterminants(Ledger& l) {
  for (unsigned m = 1; m <= 5; ++m)
    l.check(hyperdet_degree_gf({m + 1, m + 1}).degree == m + 1, "square matrix");
  l.check(hyperdet_degree_gf({2, 2, 2}).degree == 4, "2x2x2");
  l.check(hyperdet_degree_gf({3, 3, 3}).degree == 36, "3x3x3");
  l.check(hyperdet_degree_binary_cube(2) == 2, "egf r=2");
  l.check(hyperdet_degree_binary_cube(3) == 4, "egf r=3");
  l.check(hyperdet_degree_binary_cube(4) == 24, "egf r=4");
  l.check(hyperdet_degree_boundary({1, 1}) == 6, "boundary (1,1)");

  // Every format with at least two factors and sum k <= 6.
  std::function<void(std::vector<unsigned>&, unsigned)> visit = [&](std::vector<unsigned>& k,
                                                                     unsigned budget) {
    if (k.size() >= 2) {
      std::vector<unsigned> dims;
      for (auto v : k) dims.push_back(v + 1);
      const HyperdetDegree gf = hyperdet_degree_gf(dims);
      std::vector<unsigned> sorted = k;
      std::sort(sorted.rbegin(), sorted.rend());
      unsigned rest = 0;
      for (std::size_t i = 1; i < sorted.size(); ++i) rest += sorted[i];
      if (sorted[0] == rest)
        l.check(hyperdet_degree_boundary({sorted.begin() + 1, sorted.end()}) == gf.degree, "gf vs boundary");
      if (k.size() == 3 && k[0] == k[1] && k[1] == k[2])
        l.check(hyperdet_degree_cubic(k[0]) == gf.degree, "gf vs cubic");
      if (std::all_of(k.begin(), k.end(), [](unsigned v) { return v == 1; }))
        l.check(hyperdet_degree_binary_cube(static_cast<unsigned>(k.size())) == gf.degree, "gf vs egf");
      l.check(gf.exists == (sorted[0] <= rest), "existence cone");
    }
    for (unsigned v = 1; v <= budget; ++v) {
      k.push_back(v);
      visit(k, budget - v);
      k.pop_back();
    }
  };
  std::vector<unsigned> k;
  visit(k, 6);
}

void multisegments(Ledger& l) {
  std::size_t cases = 0;
  for (unsigned r = 1; r <= 4; ++r) {
    for (const Multisegment& m : enumerate_multisegments(r, 4)) {
      ++cases;
      const Multisegment kz = zeta_kz(m);
      const std::string tag = "r=" + std::to_string(r) + " " + m.to_string();
      l.check(kz == zeta_mw(m), "kz vs mw " + tag);
      l.check(zeta_kz(kz) == m, "involution " + tag);
      l.check(weight(kz) == weight(m), "weight " + tag);
      l.check(from_ranks(segment_ranks(m)) == m, "rank round trip " + tag);
    }
  }
  l.check(cases > 1000, "case count");
}

std::vector<std::pair<char, unsigned>> all_types() {
  std::vector<std::pair<char, unsigned>> out;
  for (unsigned r = 2; r <= 8; ++r) {
    out.push_back({'A', r});
    out.push_back({'B', r});
    out.push_back({'C', r});
    if (r >= 4) out.push_back({'D', r});
  }
  out.push_back({'E', 6});
  out.push_back({'E', 7});
  out.push_back({'E', 8});
  out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

void flag_tables(Ledger& l) {
  for (const auto& [kind, rank] : all_types()) {
    const auto table = flag_table(RootSystem(kind, rank));
    std::vector<oracle::PrintedRow> printed;
    if (kind == 'E') printed = rank == 6 ? oracle::e6_printed_rows() : rank == 7 ? oracle::e7_printed_rows() : oracle::e8_printed_rows();
    else if (kind == 'F') printed = oracle::f4_printed_rows();
    else if (kind == 'G') printed = oracle::g2_printed_rows();
    else
      for (unsigned i = 1; i <= rank; ++i) printed.push_back(oracle::classical_row(kind, rank, i));
    std::set<unsigned> seen;
    for (const auto& row : printed) {
      for (unsigned b : row.bourbaki) {
        seen.insert(b);
        l.check(table.at(b - 1).dim == row.dim && table.at(b - 1).tau == Rational(row.tau),
                std::string(1, kind) + std::to_string(rank) + " P" + std::to_string(b));
      }
    }
    l.check(seen.size() == rank, std::string(1, kind) + std::to_string(rank) + " coverage");
  }
}

long classified_defect(char kind, unsigned l, unsigned i) {
  if (kind == 'A' && (i == 1 || i == l)) return l;
  if (kind == 'A' && l >= 4 && l % 2 == 0 && (i == 2 || i == l - 1)) return 2;
  if (kind == 'C' && i == 1) return 2 * l - 1;
  if (kind == 'B' && l == 2 && i == 2) return 3;  // B2/P2 = C2/P1
  if (kind == 'B' && l == 4 && i == 4) return 4;
  if (kind == 'D' && l == 5 && (i == 4 || i == 5)) return 4;
  return 0;
}

void defects(Ledger& l) {
  for (const auto& [kind, rank] : all_types()) {
    const auto table = flag_table(RootSystem(kind, rank));
    for (unsigned i = 1; i <= rank; ++i) {
      const std::string tag = std::string(1, kind) + std::to_string(rank) + " P" + std::to_string(i);
      const long def = defect_flag({{kind, rank, {i}, {{i, 1}}}});
      l.check(def == classified_defect(kind, rank, i), "classification " + tag);
      if (def > 0) {
        const long dim = static_cast<long>(table[i - 1].dim);
        l.check(2 * table[i - 1].tau - 2 - dim == def, "nef relation " + tag);
        l.check((dim - def) % 2 == 0, "parity " + tag);
      }
      for (long k = 2; k <= 3; ++k) l.check(defect_flag({{kind, rank, {i}, {{i, k}}}}) == 0, "multiple " + tag);
    }
  }
}

void a2_triangle(Ledger& l, std::ostream& report) {
  const Integer flag = degree_sl3_flag(1, 1);
  const Integer weight_a = degree_sln_weight_a(3, 2);
  const AdjointDegrees adj = adjoint_discriminant_degrees(RootSystem('A', 2));
  const GbDegreeReport gb = degree_dual_gb(RootSystem('A', 2));
  l.check(flag == 6, "sl3 flag degree");
  l.check(weight_a == 6, "sl_n weight route");
  l.check(adj.deg_long + adj.deg_short == 6, "adjoint route");
  l.check(gb.applicable && gb.degree == 6, "full flag route");
  report << "    A2 full flag: printed sum " << to_string(gb.printed_sum) << ", alternating sum "
         << to_string(gb.alternating_sum) << ", degree " << to_string(gb.degree) << " (" << gb.note
         << ")\n";
}

void enumerative(Ledger& l) {
  l.check(count_subalgebras(4, 2) == 5, "(4,2)");
  for (unsigned n = 3; n <= 8; ++n)
    l.check(count_subalgebras(n, n - 2) == (oracle::pow_int(2, n) - (n % 2 == 0 ? 1 : -1)) / 3,
            "closed form n=" + std::to_string(n));
  l.check(d_discriminant_degree(3) == 6, "ddisc n=3");
  for (unsigned n = 3; n <= 12; ++n) {
    const Integer num = (3 * Integer(n) * n - 5 * Integer(n)) * oracle::pow_int(2, n) -
                        4 * Integer(n) * (n % 2 == 0 ? 1 : -1);
    l.check(num % 18 == 0 && d_discriminant_degree(n) == num / 18, "ddisc n=" + std::to_string(n));
  }
  // Exception clauses, each at a point where the generic inequality disagrees.
  l.check(!isotropic_exists(5, 3, 2, FormKind::symmetric), "quadric exception");
  l.check(!isotropic_exists(6, 5, 4, FormKind::skew), "n-2 form exception");
  l.check(isotropic_exists(7, 4, 3, FormKind::skew) && !isotropic_exists(7, 5, 3, FormKind::skew),
          "3-form on C^7 exception");
  // Generic threshold boundaries.
  l.check(isotropic_exists(4, 2, 3, FormKind::symmetric) && !isotropic_exists(3, 2, 3, FormKind::symmetric),
          "symmetric cubic boundary");
  l.check(isotropic_exists(8, 3, 4, FormKind::symmetric) && !isotropic_exists(7, 3, 4, FormKind::symmetric),
          "symmetric quartic boundary");
  l.check(isotropic_exists(10, 6, 3, FormKind::skew) && !isotropic_exists(9, 6, 3, FormKind::skew),
          "skew cubic boundary");
  l.check(isotropic_exists(5, 4, 1, FormKind::symmetric) && !isotropic_exists(5, 5, 1, FormKind::symmetric),
          "linear form boundary");
}

void moore_penrose(Ledger& l) {
  oracle::Rng rng(777);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const std::size_t k = rng() % (std::min(rows, cols) + 1);
    const RatMatrix a = k == 0 ? RatMatrix(rows, cols) : oracle::random_matrix_of_rank(rng, rows, cols, k);
    const RatMatrix p = mp_matrix(a);
    const bool penrose = a * p * a == a && p * a * p == p && (a * p).transpose() == a * p &&
                         (p * a).transpose() == p * a;
    l.check(penrose, "Penrose identities, trial " + std::to_string(t));
    l.check(mp_matrix(p) == a, "biduality, trial " + std::to_string(t));
  }
}

void cli_determinism(Ledger& l) {
  for (const auto& c : cli::run_selftest()) l.check(c.passed, "selftest " + c.name);
  const std::vector<std::vector<std::string>> cmds{
      {"selftest", "--json"},
      {"flag", "table", "--type", "E", "--rank", "8", "--json"},
      {"hyperdet", "degree", "--dims", "3,3,3", "--json"},
      {"multiseg", "zeta", "--r", "4", "--segments", "1-2:1,2-4:2,3-3:1", "--json"},
      {"disc", "binary", "--degree", "4", "--symbolic", "--json"},
      {"mpinv", "matrix", "--rows", "1,2,3;2,4,6", "--json"},
  };
  for (const auto& cmd : cmds) {
    std::ostringstream out1, out2, err;
    const int c1 = cli::run(cmd, out1, err);
    const int c2 = cli::run(cmd, out2, err);
    l.check(c1 == 0 && c2 == 0 && !out1.str().empty() && out1.str() == out2.str(),
            "byte-identical " + cmd[0] + " " + cmd[1]);
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<void(Ledger&, std::ostream&)> run;
  };
  const std::vector<Criterion> criteria{
      {"Pluecker data of smooth cubics and quartics", [](Ledger& l, std::ostream&) { plucker(l); }},
      {"biduality of rational plane curves", [](Ledger& l, std::ostream&) { biduality(l); }},
      {"binary discriminant degree and vanishing", [](Ledger& l, std::ostream&) { binary_discriminants(l); }},
      {"Cayley determinant independence, scaling, two-term case", [](Ledger& l, std::ostream&) { cayley(l); }},
      {"degree pipeline for Veronese and complete intersections", [](Ledger& l, std::ostream&) { degrees(l); }},
      {"hyperdeterminant degrees and method agreement", [](Ledger& l, std::ostream&) { hyperdeterminants(l); }},
      {"multisegment duality", [](Ledger& l, std::ostream&) { multisegments(l); }},
      {"flag variety dimension and nef value tables", [](Ledger& l, std::ostream&) { flag_tables(l); }},
      {"defect classification of maximal flag varieties", [](Ledger& l, std::ostream&) { defects(l); }},
      {"A2 degree triangle", [](Ledger& l, std::ostream& r) { a2_triangle(l, r); }},
      {"enumerative closed forms", [](Ledger& l, std::ostream&) { enumerative(l); }},
      {"Moore-Penrose identities and biduality", [](Ledger& l, std::ostream&) { moore_penrose(l); }},
      {"CLI selftest and determinism", [](Ledger& l, std::ostream&) { cli_determinism(l); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Ledger ledger;
    std::ostringstream report;
    std::string error;
    try {
      criteria[i].run(ledger, report);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && ledger.passed();
    if (!ok) ++failures;
    std::cout << (ok ? "PASS " : "FAIL ") << i + 1 << ": " << criteria[i].title << " ("
              << (error.empty() ? ledger.summary() : "exception: " + error) << ")\n"
              << report.str();
  }
  return failures == 0 ? 0 : 1;
}
