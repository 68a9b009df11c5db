#include "dualis/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "dualis/degrees.hpp"
#include "dualis/discriminants.hpp"
#include "dualis/dualcurve.hpp"
#include "dualis/enumerative.hpp"
#include "dualis/error.hpp"
#include "dualis/flagvar.hpp"
#include "dualis/hyperdet.hpp"
#include "dualis/mpinv.hpp"
#include "dualis/multiseg.hpp"
#include "dualis/rootsystem.hpp"

namespace dualis::cli {

namespace {

using json = nlohmann::json;

// Raised for malformed flag values that CLI11 cannot see, such as bad embedded JSON.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integers that fit a signed 64-bit value are JSON numbers; larger ones are decimal strings.
json jint(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json jrat(const Rational& v) { return to_string(v); }

json jmatrix(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(jrat(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json jranks(const RankTable& t) {
  json rows = json::array();
  for (const auto& r : t) rows.push_back(r);
  return rows;
}

std::string render_scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Default text rendering: one "key: value" line per top-level field.
std::string render_text(const json& j) {
  if (!j.is_object()) return render_scalar(j) + "\n";
  std::string s;
  for (const auto& [k, v] : j.items()) s += k + ": " + render_scalar(v) + "\n";
  return s;
}

struct Outcome {
  json value;
  std::string text;  // empty means render_text(value)
};

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  for (const auto& q : parse_rational_list(text)) {
    require(q.get_den() == 1 && q.get_num().fits_slong_p(), "expected an integer list: " + text);
    out.push_back(q.get_num().get_si());
  }
  return out;
}

std::vector<unsigned> parse_unsigned_list(const std::string& text) {
  std::vector<unsigned> out;
  for (long v : parse_long_list(text)) {
    require(v >= 0, "expected nonnegative integers: " + text);
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

json parse_embedded_json(const std::string& text, const std::string& flag) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(flag + ": malformed JSON");
  }
}

Rational json_rational(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
  throw DomainError("matrix entries must be integers or \"p/q\" strings");
}

char parse_type(const std::string& t) {
  require(t.size() == 1 && std::string("ABCDEFG").find(t[0]) != std::string::npos,
          "unknown root system type: " + t);
  return t[0];
}

FlagFactor parse_factor(const json& f) {
  require(f.is_object(), "each factor must be an object");
  FlagFactor out;
  out.kind = parse_type(f.at("type").get<std::string>());
  out.rank = f.at("rank").get<unsigned>();
  out.removed = f.at("removed").get<std::vector<unsigned>>();
  for (const auto& [k, v] : f.at("weight").items()) out.weight[std::stoul(k)] = v.get<long>();
  return out;
}

BasedComplex parse_complex(const json& j) {
  BasedComplex c;
  c.start_degree = j.at("start_degree").get<long>();
  c.dims = j.at("dims").get<std::vector<std::size_t>>();
  for (const auto& m : j.at("maps")) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : m) {
      std::vector<Rational> row;
      for (const auto& e : r) row.push_back(json_rational(e));
      rows.push_back(row);
    }
    require(c.maps.size() + 1 < c.dims.size(), "too many maps for the given dims");
    const std::size_t target = c.dims[c.maps.size() + 1], source = c.dims[c.maps.size()];
    if (rows.empty()) c.maps.emplace_back(target, source);
    else c.maps.push_back(RatMatrix::from_rows(rows));
  }
  return c;
}

// Registers a leaf subcommand whose action produces an Outcome.
class Dispatcher {
 public:
  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help,
                 std::function<Outcome()> action) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_flag("--json", json_, "Emit JSON");
    sub->callback([this, action] { action_ = action; });
    return sub;
  }

  bool json_output() const { return json_; }
  const std::function<Outcome()>& action() const { return action_; }

 private:
  bool json_ = false;
  std::function<Outcome()> action_;
};

// Storage shared by every leaf. CLI11 writes a default into its variable when the option is
// declared, so each option with a default owns a member no other option binds.
struct Flags {
  std::string s1, s2, kind, type, param, hyperdet_method, zeta_method, rank_kind;
  long n = 0, d = 0, k = 0, r = 0, m = 0, a = 0, g = 0, big_n = 0, delta = 0, kappa = 0, m1 = 0,
       m2 = 0, rank = 0, ambient = 0;
  bool symbolic = false;
};

unsigned as_unsigned(long v, const char* name) {
  require(v >= 0, std::string(name) + " must be nonnegative");
  return static_cast<unsigned>(v);
}

void build_dualcurve(CLI::App& app, Dispatcher& dx, Flags& f) {
  auto* grp = app.add_subcommand("dualcurve", "Dual plane curves and Plücker data");
  grp->require_subcommand(1);

  auto* param = dx.leaf(grp, "param", "Dual of a rational parametric curve", [&f] {
    RationalParamCurve c{RatFunc::parse(f.s1, f.param), RatFunc::parse(f.s2, f.param)};
    RationalParamCurve d = dual_parametric(c);
    return Outcome{{{"x", d.x.to_string()}, {"y", d.y.to_string()}}, {}};
  });
  param->add_option("--x", f.s1, "x(t) as poly or (poly)/(poly)")->required();
  param->add_option("--y", f.s2, "y(t) as poly or (poly)/(poly)")->required();
  param->add_option("--param", f.param, "Parameter name")->default_val("t");

  auto* conic = dx.leaf(grp, "conic", "Dual of a nonsingular conic", [&f] {
    auto v = parse_rational_list(f.s1);
    require(v.size() == 9, "conic matrix needs 9 entries");
    RatMatrix a(3, 3);
    for (std::size_t i = 0; i < 9; ++i) a(i / 3, i % 3) = v[i];
    return Outcome{{{"dual", jmatrix(dual_conic(a))}}, {}};
  });
  conic->add_option("--matrix", f.s1, "Symmetric 3x3 matrix, 9 comma-separated rationals")->required();

  auto* schl = dx.leaf(grp, "schlafli", "Schläfli sextic of a ternary cubic", [&f] {
    MultiPoly dual = dual_cubic_schlafli(MultiPoly::parse(f.s1));
    json out{{"dual", dual.to_string()}, {"degree", dual.total_degree()}};
    return Outcome{out, {}};
  });
  schl->add_option("--cubic", f.s1, "Ternary cubic form")->required();

  auto* pl = dx.leaf(grp, "pluecker", "Solve the Plücker relations", [&f] {
    PluckerData p = plucker_solve(f.d, f.delta, f.kappa);
    json out{{"d", p.d}, {"d_star", p.d_star}, {"g", p.g}, {"kappa", p.kappa},
             {"delta", p.delta}, {"b", p.b}, {"f", p.f}};
    return Outcome{out, {}};
  });
  pl->add_option("--d", f.d, "Degree")->required();
  pl->add_option("--delta", f.delta, "Nodes")->default_val(0);
  pl->add_option("--kappa", f.kappa, "Cusps")->default_val(0);
}

void build_disc(CLI::App& app, Dispatcher& dx, Flags& f) {
  auto* grp = app.add_subcommand("disc", "Discriminants and Cayley determinants");
  grp->require_subcommand(1);

  auto* bin = dx.leaf(grp, "binary", "Discriminant of a binary form", [&f] {
    const unsigned d = as_unsigned(f.d, "degree");
    if (f.symbolic) {
      require(f.s1.empty(), "--coeffs and --symbolic are exclusive");
      MultiPoly p = binary_discriminant_symbolic(d);
      return Outcome{{{"degree", d}, {"discriminant", p.to_string()}, {"total_degree", p.total_degree()}}, {}};
    }
    require(!f.s1.empty(), "either --coeffs or --symbolic is required");
    BinaryForm form{parse_rational_list(f.s1)};
    require(form.degree() == d, "coefficient count must be degree + 1");
    json out{{"degree", d},
             {"discriminant", jrat(binary_discriminant(form))},
             {"vanishes", discriminant_vanishes(form)}};
    return Outcome{out, {}};
  });
  bin->add_option("--degree", f.d, "Degree d >= 2")->required();
  bin->add_option("--coeffs", f.s1, "a0,..,ad");
  bin->add_flag("--symbolic", f.symbolic, "Discriminant as a polynomial in a0..ad");

  auto* cay = dx.leaf(grp, "cayley", "Cayley determinant of a based exact complex", [&f] {
    BasedComplex c = parse_complex(parse_embedded_json(f.s1, "--complex"));
    validate_complex(c);
    AdmissibleCollection coll = greedy_admissible_collection(c);
    json out{{"determinant", jrat(cayley_value(c, coll))},
             {"scaling_exponent", cayley_scaling_exponent(c)},
             {"collection", coll}};
    return Outcome{out, {}};
  });
  cay->add_option("--complex", f.s1, "Complex as JSON")->required();
}

void build_degree(CLI::App& app, Dispatcher& dx, Flags& f) {
  auto* grp = app.add_subcommand("degree", "Degrees and defects of dual varieties");
  grp->require_subcommand(1);
  auto dd = [](const DefectDegree& r) {
    return Outcome{{{"defect", r.defect}, {"degree", jint(r.degree)}}, {}};
  };

  auto* rk = dx.leaf(grp, "ranks", "Ranks from Chern degrees", [&f] {
    ChernData cd;
    for (const auto& q : parse_rational_list(f.s1)) {
      require(q.get_den() == 1, "Chern degrees must be integers");
      cd.e.push_back(q.get_num());
    }
    require(!cd.e.empty(), "--chern needs at least one value");
    cd.n = static_cast<unsigned>(cd.e.size() - 1);
    json rs = json::array();
    for (const auto& v : ranks(cd)) rs.push_back(jint(v));
    DefectDegree r = defect_and_degree(cd);
    return Outcome{{{"defect", r.defect}, {"degree", jint(r.degree)}, {"ranks", rs}}, {}};
  });
  rk->add_option("--chern", f.s1, "e0,..,en")->required();

  auto* ver = dx.leaf(grp, "veronese", "Veronese embedding of P^n by degree d", [&f, dd] {
    return dd(defect_and_degree(chern_data_veronese(as_unsigned(f.n, "n"), as_unsigned(f.d, "d"))));
  });
  ver->add_option("--n", f.n, "Dimension")->required();
  ver->add_option("--d", f.d, "Degree")->required();

  auto* ci = dx.leaf(grp, "ci", "Smooth complete intersection in P^N", [&f, dd] {
    return dd(defect_and_degree(
        chern_data_complete_intersection(as_unsigned(f.big_n, "N"), parse_unsigned_list(f.s1))));
  });
  ci->add_option("--N", f.big_n, "Ambient dimension")->required();
  ci->add_option("--degs", f.s1, "d1,..,dc")->required();

  auto* cur = dx.leaf(grp, "curve", "Dual degree of a smooth curve", [&f] {
    return Outcome{{{"degree", jint(degree_curve_dual(f.g, f.d))}}, {}};
  });
  cur->add_option("--g", f.g, "Genus")->required();
  cur->add_option("--d", f.d, "Degree")->required();

  auto* cls = dx.leaf(grp, "class", "Class formula from topological Euler characteristics", [&f] {
    auto chi = parse_rational_list(f.s1);
    require(chi.size() == 3, "--chi needs chi(X),chi(X^H),chi(X^HH')");
    for (const auto& c : chi) require(c.get_den() == 1, "Euler characteristics must be integers");
    ClassFormulaResult r = class_formula(as_unsigned(f.n, "n"), chi[0].get_num(), chi[1].get_num(),
                                         chi[2].get_num());
    return Outcome{{{"value", jint(r.value)}, {"dual_not_hypersurface", r.dual_not_hypersurface}}, {}};
  });
  cls->add_option("--n", f.n, "Dimension")->required();
  cls->add_option("--chi", f.s1, "chi(X),chi(X^H),chi(X^HH')")->required();

  auto* sl3 = dx.leaf(grp, "sl3", "Dual degree of SL3/B in weight (m1, m2)", [&f] {
    return Outcome{{{"degree", jint(degree_sl3_flag(f.m1, f.m2))}}, {}};
  });
  sl3->add_option("--m1", f.m1, "First weight coefficient")->required();
  sl3->add_option("--m2", f.m2, "Second weight coefficient")->required();

  auto* sla = dx.leaf(grp, "sln-a", "Dual degree for weight (a-1)w1 + w2 of SL_n", [&f] {
    return Outcome{{{"degree", jint(degree_sln_weight_a(f.n, f.a))}}, {}};
  });
  sla->add_option("--n", f.n, "n")->required();
  sla->add_option("--a", f.a, "a >= 2")->required();

  auto* res = dx.leaf(grp, "resultant", "Degree of the resultant", [&f] {
    return Outcome{{{"degree", jint(resultant_degree(parse_long_list(f.s1)))}}, {}};
  });
  res->add_option("--degs", f.s1, "d0,..,dn")->required();

  auto* hes = dx.leaf(grp, "hessian", "Dimension of the dual from Hessian minors", [&f] {
    int dim = hessian_dual_dimension(MultiPoly::parse(f.s1), as_unsigned(f.ambient, "ambient"));
    return Outcome{{{"dual_dimension", dim}}, {}};
  });
  hes->add_option("--poly", f.s1, "Homogeneous polynomial")->required();
  hes->add_option("--ambient", f.ambient, "Ambient projective dimension")->required();
}

void build_hyperdet(CLI::App& app, Dispatcher& dx, Flags& f) {
  auto* grp = app.add_subcommand("hyperdet", "Hyperdeterminants");
  grp->require_subcommand(1);

  auto* ex = dx.leaf(grp, "exists", "Existence test for a format", [&f] {
    auto dims = parse_unsigned_list(f.s1);
    return Outcome{{{"exists", hyperdet_exists(dims)}, {"defect", segre_defect(dims)}}, {}};
  });
  ex->add_option("--dims", f.s1, "l1,..,lr")->required();

  auto* deg = dx.leaf(grp, "degree", "Degree of the hyperdeterminant", [&f] {
    auto dims = parse_unsigned_list(f.s1);
    json out{{"method", f.hyperdet_method}, {"exists", hyperdet_exists(dims)}};
    if (f.hyperdet_method == "gf") {
      out["degree"] = jint(hyperdet_degree_gf(dims).degree);
    } else if (f.hyperdet_method == "boundary") {
      require(dims.size() >= 2, "boundary format needs at least two factors");
      std::vector<unsigned> rest;
      unsigned sum = 0;
      for (std::size_t i = 1; i < dims.size(); ++i) {
        require(dims[i] >= 2, "every dimension must be at least 2");
        rest.push_back(dims[i] - 1);
        sum += dims[i] - 1;
      }
      require(dims[0] == sum + 1, "not a boundary format: k1 must equal k2 + ... + kr");
      out["degree"] = jint(hyperdet_degree_boundary(rest));
    } else if (f.hyperdet_method == "cubic") {
      require(dims.size() == 3 && dims[0] == dims[1] && dims[1] == dims[2] && dims[0] >= 2,
              "cubic method needs a format (k+1)x(k+1)x(k+1)");
      out["degree"] = jint(hyperdet_degree_cubic(dims[0] - 1));
    } else {
      for (auto l : dims) require(l == 2, "egf method needs the format 2x...x2");
      out["degree"] = jint(hyperdet_degree_binary_cube(static_cast<unsigned>(dims.size())));
    }
    return Outcome{out, {}};
  });
  deg->add_option("--dims", f.s1, "l1,..,lr")->required();
  deg->add_option("--method", f.hyperdet_method, "gf|boundary|cubic|egf")
      ->default_val("gf")
      ->check(CLI::IsMember({"gf", "boundary", "cubic", "egf"}));
}

void build_multiseg(CLI::App& app, Dispatcher& dx, Flags& f) {
  auto* grp = app.add_subcommand("multiseg", "Multisegment duality");
  grp->require_subcommand(1);
  auto* z = dx.leaf(grp, "zeta", "Zelevinsky involution", [&f] {
    Multisegment m = Multisegment::parse(as_unsigned(f.r, "r"), f.s1);
    Multisegment out = f.zeta_method == "kz" ? zeta_kz(m) : zeta_mw(m);
    if (f.zeta_method == "both") require(zeta_kz(m) == out, "kz and mw disagree");
    json j{{"input", m.to_string()},
           {"output", out.to_string()},
           {"method", f.zeta_method},
           {"weight", weight(m)},
           {"ranks_input", jranks(segment_ranks(m))},
           {"ranks_output", jranks(segment_ranks(out))}};
    return Outcome{j, out.to_string() + "\n"};
  });
  z->add_option("--r", f.r, "Segments lie in [1, r]")->required();
  z->add_option("--segments", f.s1, "i-j:m,...")->required();
  z->add_option("--method", f.zeta_method, "kz|mw|both")
      ->default_val("both")
      ->check(CLI::IsMember({"kz", "mw", "both"}));
}

void build_flag(CLI::App& app, Dispatcher& dx, Flags& f) {
  auto* grp = app.add_subcommand("flag", "Flag varieties: nef values and defects");
  grp->require_subcommand(1);

  auto* tab = dx.leaf(grp, "table", "Dimension and nef value of every G/P_i", [&f] {
    RootSystem rs(parse_type(f.type), as_unsigned(f.rank, "rank"));
    json rows = json::array();
    std::string text;
    for (const auto& row : flag_table(rs)) {
      rows.push_back({{"i", row.i}, {"dim", row.dim}, {"tau", jrat(row.tau)}});
      text += std::to_string(row.i) + " " + std::to_string(row.dim) + " " + to_string(row.tau) + "\n";
    }
    return Outcome{{{"type", rs.name()}, {"rows", rows}}, text};
  });
  tab->add_option("--type", f.type, "A..G")->required();
  tab->add_option("--rank", f.rank, "Rank")->required();

  auto* nef = dx.leaf(grp, "nef", "Nef value of a polarized G/P", [&f] {
    RootSystem rs(parse_type(f.type), as_unsigned(f.rank, "rank"));
    Removed removed = parse_unsigned_list(f.s1);
    auto coeffs = parse_long_list(f.s2);
    require(coeffs.size() == removed.size(), "--weight needs one coefficient per removed index");
    WeightCoeffs w;
    for (std::size_t i = 0; i < removed.size(); ++i) w[removed[i]] = coeffs[i];
    json out{{"dim", dim_flag(rs, removed)},
             {"nef_value", jrat(nef_value(rs, removed, w))},
             {"target", nef_morphism_target(rs, removed, w)}};
    return Outcome{out, {}};
  });
  nef->add_option("--type", f.type, "A..G")->required();
  nef->add_option("--rank", f.rank, "Rank")->required();
  nef->add_option("--removed", f.s1, "Removed simple roots")->required();
  nef->add_option("--weight", f.s2, "Coefficient per removed root")->required();

  auto* def = dx.leaf(grp, "defect", "Defect of a product of polarized flag varieties", [&f] {
    json spec = parse_embedded_json(f.s1, "--spec");
    std::vector<FlagFactor> factors;
    json per = json::array();
    try {
      for (const auto& fj : spec.at("factors")) factors.push_back(parse_factor(fj));
    } catch (const json::exception&) {
      throw UsageError("--spec: expected {\"factors\":[{\"type\",\"rank\",\"removed\",\"weight\"}]}");
    }
    require(!factors.empty(), "--spec needs at least one factor");
    for (const auto& fa : factors) {
      RootSystem rs(fa.kind, fa.rank);
      per.push_back({{"dim", dim_flag(rs, fa.removed)}, {"defect", defect_simple(fa)}});
    }
    return Outcome{{{"defect", defect_flag(factors)}, {"factors", per}}, {}};
  });
  def->add_option("--spec", f.s1, "Factors as JSON")->required();

  auto* gb = dx.leaf(grp, "gb-degree", "Dual degree of G/B in the weight rho", [&f] {
    GbDegreeReport r = degree_dual_gb(RootSystem(parse_type(f.type), as_unsigned(f.rank, "rank")));
    json out{{"applicable", r.applicable},       {"num_positive", r.num_positive},
             {"printed_sum", jrat(r.printed_sum)}, {"alternating_sum", jrat(r.alternating_sum)},
             {"degree", jrat(r.degree)},         {"note", r.note}};
    return Outcome{out, {}};
  });
  gb->add_option("--type", f.type, "A..G")->required();
  gb->add_option("--rank", f.rank, "Rank")->required();
}

MatrixKind parse_matrix_kind(const std::string& k) {
  if (k == "general") return MatrixKind::general;
  if (k == "sym") return MatrixKind::symmetric;
  return MatrixKind::skew;
}

void build_enum(CLI::App& app, Dispatcher& dx, Flags& f) {
  auto* grp = app.add_subcommand("enum", "Enumerative closed forms");
  grp->require_subcommand(1);

  auto* iso = dx.leaf(grp, "isotropic", "Isotropic subspaces of a generic form", [&f] {
    FormKind kind = f.kind == "sym" ? FormKind::symmetric : FormKind::skew;
    bool e = isotropic_exists(as_unsigned(f.n, "n"), as_unsigned(f.k, "k"), as_unsigned(f.d, "d"), kind);
    return Outcome{{{"exists", e}}, {}};
  });
  iso->add_option("--n", f.n, "Space dimension")->required();
  iso->add_option("--k", f.k, "Subspace dimension")->required();
  iso->add_option("--d", f.d, "Form degree")->required();
  iso->add_option("--kind", f.kind, "sym|skew")->required()->check(CLI::IsMember({"sym", "skew"}));

  auto* sub = dx.leaf(grp, "subalgebras", "Count of (k+1)-dimensional subalgebras", [&f] {
    return Outcome{{{"count", jint(count_subalgebras(as_unsigned(f.n, "n"), as_unsigned(f.k, "k")))}}, {}};
  });
  sub->add_option("--n", f.n, "Algebra dimension")->required();
  sub->add_option("--k", f.k, "Arity")->required();

  auto* dd = dx.leaf(grp, "ddisc", "Degree of the D-discriminant", [&f] {
    return Outcome{{{"degree", jint(d_discriminant_degree(as_unsigned(f.n, "n")))}}, {}};
  });
  dd->add_option("--n", f.n, "n >= 3")->required();

  auto* rb = dx.leaf(grp, "rankbounds", "Bounds for spaces of bounded or constant rank", [&f] {
    MatrixKind kind = parse_matrix_kind(f.rank_kind);
    const unsigned m = as_unsigned(f.m, "m");
    const unsigned n = kind == MatrixKind::general ? as_unsigned(f.n == 0 ? f.m : f.n, "n") : m;
    ConstantRankBounds b = constant_rank_bounds(as_unsigned(f.r, "r"), m, n, kind);
    json out{{"kind", to_string(b.kind)}, {"r", b.r}, {"m", b.m}, {"n", b.n}};
    auto put = [&out](const char* key, const std::optional<Integer>& v) {
      if (v) out[key] = jint(*v);
    };
    put("rank_bounded_below_max", b.rank_bounded_below_max);
    put("constant_rank_lower", b.constant_rank_lower);
    put("constant_rank_upper", b.constant_rank_upper);
    put("constant_rank_upper_projective", b.constant_rank_upper_projective);
    put("constant_rank_exact", b.constant_rank_exact);
    return Outcome{out, {}};
  });
  rb->add_option("--r", f.r, "Rank")->required();
  rb->add_option("--m", f.m, "Rows")->required();
  rb->add_option("--n", f.n, "Columns (general kind; defaults to m)");
  rb->add_option("--kind", f.rank_kind, "general|sym|skew")
      ->default_val("general")
      ->check(CLI::IsMember({"general", "sym", "skew"}));
}

void build_mpinv(CLI::App& app, Dispatcher& dx, Flags& f) {
  auto* grp = app.add_subcommand("mpinv", "Moore-Penrose inverses");
  grp->require_subcommand(1);

  auto* mat = dx.leaf(grp, "matrix", "Pseudoinverse of a rational matrix", [&f] {
    RatMatrix a = parse_matrix(f.s1);
    return Outcome{{{"pseudoinverse", jmatrix(mp_matrix(a))}, {"rank", rank(a)}}, {}};
  });
  mat->add_option("--rows", f.s1, "Rows separated by ';', entries by ','")->required();

  auto* bil = dx.leaf(grp, "bilinear", "Dual form of a symmetric or skew form", [&f] {
    BilinearKind kind = f.kind == "sym" ? BilinearKind::symmetric : BilinearKind::skew;
    return Outcome{{{"dual_form", jmatrix(mp_bilinear(parse_matrix(f.s1), kind))}}, {}};
  });
  bil->add_option("--kind", f.kind, "sym|skew")->required()->check(CLI::IsMember({"sym", "skew"}));
  bil->add_option("--rows", f.s1, "Gram matrix rows")->required();

  auto* vec = dx.leaf(grp, "vector", "Dual of a vector in a complex quadratic space", [&f] {
    GaussVector v = parse_gauss_list(f.s1);
    GaussVector out = f.s2.empty() ? mp_vector(v) : mp_vector(v, parse_matrix(f.s2));
    json arr = json::array();
    for (const auto& x : out) arr.push_back(x.to_string());
    return Outcome{{{"dual", arr}}, {}};
  });
  vec->add_option("--entries", f.s1, "Entries such as 1,0+1i")->required();
  vec->add_option("--gram", f.s2, "Gram matrix rows (default identity)");
}

void build_selftest(CLI::App& app, Dispatcher& dx) {
  dx.leaf(&app, "selftest", "Run the golden-value suite", [] {
    json checks = json::array();
    std::string text;
    bool all = true;
    for (const auto& c : run_selftest()) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}});
      text += std::string(c.passed ? "PASS " : "FAIL ") + c.name + "\n";
      all = all && c.passed;
    }
    text += all ? "selftest passed\n" : "selftest FAILED\n";
    return Outcome{{{"checks", checks}, {"passed", all}}, text};
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of projective duality", "dualis"};
  app.require_subcommand(1);
  Dispatcher dx;
  Flags flags;
  build_dualcurve(app, dx, flags);
  build_disc(app, dx, flags);
  build_degree(app, dx, flags);
  build_hyperdet(app, dx, flags);
  build_multiseg(app, dx, flags);
  build_flag(app, dx, flags);
  build_enum(app, dx, flags);
  build_mpinv(app, dx, flags);
  build_selftest(app, dx);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage_failure;
  }

  try {
    Outcome o = dx.action()();
    if (dx.json_output()) out << o.value.dump() << "\n";
    else out << (o.text.empty() ? render_text(o.value) : o.text);
    if (o.value.contains("passed") && !o.value["passed"].get<bool>()) return domain_failure;
    return ok;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage_failure;
  } catch (const json::exception& e) {
    err << "usage error: malformed JSON argument: " << e.what() << "\n";
    return usage_failure;
  } catch (const std::logic_error& e) {
    err << "usage error: " << e.what() << "\n";
    return usage_failure;
  } catch (const DomainError& e) {
    json j{{"error", {{"kind", dynamic_cast<const TooLargeError*>(&e) ? "too_large" : "domain"},
                      {"message", e.what()}}}};
    out << j.dump() << "\n";
    return domain_failure;
  }
}

}  // namespace dualis::cli
