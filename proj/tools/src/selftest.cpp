#include <functional>

#include "dualis/cli.hpp"
#include "dualis/degrees.hpp"
#include "dualis/dualcurve.hpp"
#include "dualis/flagvar.hpp"
#include "dualis/hyperdet.hpp"
#include "dualis/multiseg.hpp"
#include "dualis/rootsystem.hpp"

namespace dualis::cli {

namespace {

struct GoldenRow {
  unsigned long dim;
  long tau;
};

// Maximal parabolics in Bourbaki order, polarized by the fundamental weight.
bool table_matches(char kind, unsigned rank, const std::vector<GoldenRow>& golden) {
  auto rows = flag_table(RootSystem(kind, rank));
  if (rows.size() != golden.size()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].dim != golden[i].dim || rows[i].tau != golden[i].tau) return false;
  return true;
}

std::vector<GoldenRow> classical_table(char kind, unsigned l) {
  std::vector<GoldenRow> out;
  for (unsigned i = 1; i <= l; ++i) {
    const long li = l, ii = i;
    switch (kind) {
      case 'A': out.push_back({static_cast<unsigned long>(ii * (li + 1 - ii)), li + 1}); break;
      case 'B':
        if (i < l) out.push_back({static_cast<unsigned long>(ii * (4 * li + 1 - 3 * ii) / 2), 2 * li - ii});
        else out.push_back({static_cast<unsigned long>(li * (li + 1) / 2), 2 * li});
        break;
      case 'C':
        out.push_back({static_cast<unsigned long>(ii * (4 * li + 1 - 3 * ii) / 2), 2 * li - ii + 1});
        break;
      default:  // D
        if (i + 2 <= l) out.push_back({static_cast<unsigned long>(ii * (4 * li - 1 - 3 * ii) / 2), 2 * li - ii - 1});
        else out.push_back({static_cast<unsigned long>(li * (li - 1) / 2), 2 * li - 2});
    }
  }
  return out;
}

bool guarded(const std::function<bool()>& check) {
  try {
    return check();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  std::vector<std::pair<std::string, std::function<bool()>>> checks{
      {"plucker smooth cubic",
       [] { return plucker_solve(3, 0, 0) == PluckerData{3, 6, 1, 0, 0, 0, 9}; }},
      {"plucker smooth quartic",
       [] { return plucker_solve(4, 0, 0) == PluckerData{4, 12, 3, 0, 0, 28, 24}; }},
      {"veronese P2 cubics", [] {
         auto r = defect_and_degree(chern_data_veronese(2, 3));
         return r.defect == 0 && r.degree == 12;
       }},
      {"flag table G2", [] { return table_matches('G', 2, {{5, 5}, {5, 3}}); }},
      {"flag table F4", [] { return table_matches('F', 4, {{15, 8}, {20, 5}, {20, 7}, {15, 11}}); }},
      {"flag table E6", [] {
         return table_matches('E', 6, {{16, 12}, {21, 11}, {25, 9}, {29, 7}, {25, 9}, {16, 12}});
       }},
      {"flag table E7", [] {
         return table_matches('E', 7,
                              {{33, 17}, {42, 14}, {47, 11}, {53, 8}, {50, 10}, {42, 13}, {27, 18}});
       }},
      {"flag table E8", [] {
         return table_matches('E', 8, {{78, 23}, {92, 17}, {98, 13}, {106, 9}, {104, 11}, {97, 14},
                                       {83, 19}, {57, 29}});
       }},
      {"flag tables classical ranks 2-8", [] {
         for (unsigned l = 2; l <= 8; ++l)
           for (char kind : {'A', 'B', 'C', 'D'}) {
             if (kind == 'D' && l < 4) continue;
             if (!table_matches(kind, l, classical_table(kind, l))) return false;
           }
         return true;
       }},
      {"hyperdet square formats", [] {
         for (unsigned m = 1; m <= 5; ++m)
           if (hyperdet_degree_gf({m + 1, m + 1}).degree != m + 1) return false;
         return true;
       }},
      {"hyperdet cubes", [] {
         return hyperdet_degree_gf({2, 2, 2}).degree == 4 && hyperdet_degree_gf({3, 3, 3}).degree == 36 &&
                hyperdet_degree_cubic(1) == 4 && hyperdet_degree_cubic(2) == 36;
       }},
      {"hyperdet binary cubes", [] {
         return hyperdet_degree_binary_cube(2) == 2 && hyperdet_degree_binary_cube(3) == 4 &&
                hyperdet_degree_binary_cube(4) == 24;
       }},
      {"hyperdet boundary 3x2x2", [] {
         return hyperdet_degree_boundary({1, 1}) == 6 && hyperdet_degree_gf({3, 2, 2}).degree == 6;
       }},
      {"sl3 flag triangle", [] {
         return degree_sl3_flag(1, 1) == 6 && degree_sln_weight_a(3, 2) == 6 &&
                adjoint_discriminant_degrees(RootSystem('A', 2)).deg_long == 6;
       }},
      {"multisegment involution 1-2", [] {
         Multisegment m = Multisegment::parse(2, "1-2:1");
         return zeta_mw(m).to_string() == "1-1:1,2-2:1" && zeta_kz(m) == zeta_mw(m);
       }},
  };
  std::vector<SelftestCheck> out;
  for (const auto& [name, check] : checks) out.push_back({name, guarded(check)});
  return out;
}

}  // namespace dualis::cli
