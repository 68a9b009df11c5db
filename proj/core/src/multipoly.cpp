#include "dualis/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_map>

#include "dualis/error.hpp"

namespace dualis {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = dualis::total_degree(a), db = dualis::total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly::MultiPoly(std::vector<std::string> variables, TermMap terms)
    : vars_(std::move(variables)) {
  for (auto& [e, c] : terms) {
    if (e.size() != vars_.size()) throw DomainError("exponent length does not match variables");
    if (c != 0) terms_.emplace(e, c);
  }
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  Exponents e(variables.size(), 0);
  return monomial(std::move(variables), std::move(e), c);
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::size_t index) {
  if (index >= variables.size()) throw DomainError("variable index out of range");
  Exponents e(variables.size(), 0);
  e[index] = 1;
  return monomial(std::move(variables), std::move(e), 1);
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) throw DomainError("unknown variable '" + name + "'");
  auto idx = static_cast<std::size_t>(it - variables.begin());
  return variable(std::move(variables), idx);
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponents exps,
                              const Rational& c) {
  MultiPoly p(std::move(variables));
  if (exps.size() != p.vars_.size()) throw DomainError("exponent length does not match variables");
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

std::size_t MultiPoly::variable_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw DomainError("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::is_constant() const { return total_degree() <= 0; }

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = dualis::total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return dualis::total_degree(t.first) == d; });
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(dualis::total_degree(terms_.begin()->first));
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.at(var)));
  return d;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

const Exponents& MultiPoly::leading_exponents() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.begin()->second;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& variables) const {
  if (variables == vars_) return *this;
  std::vector<std::size_t> target(vars_.size());
  std::vector<bool> present(vars_.size(), false);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), vars_[i]);
    present[i] = it != variables.end();
    target[i] = present[i] ? static_cast<std::size_t>(it - variables.begin()) : 0;
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents f(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!present[i]) throw DomainError("variable '" + vars_[i] + "' missing from target list");
      f[target[i]] = e[i];
    }
    out.emplace(std::move(f), c);
  }
  return MultiPoly(variables, std::move(out));
}

std::vector<std::string> merged_variables(const std::vector<std::string>& a,
                                          const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

namespace {

std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& a, const MultiPoly& b) {
  if (a.variables() == b.variables()) return {a, b};
  auto vars = merged_variables(a.variables(), b.variables());
  return {a.with_variables(vars), b.with_variables(vars)};
}

void add_into(MultiPoly::TermMap& acc, const Exponents& e, const Rational& c) {
  auto [it, inserted] = acc.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

}  // namespace

MultiPoly operator+(const MultiPoly& a0, const MultiPoly& b0) {
  auto [a, b] = aligned(a0, b0);
  MultiPoly::TermMap t = a.terms();
  for (const auto& [e, c] : b.terms()) add_into(t, e, c);
  return MultiPoly(a.variables(), std::move(t));
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a0, const MultiPoly& b0) {
  auto [a, b] = aligned(a0, b0);
  MultiPoly::TermMap t;
  Exponents e(a.num_variables());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_into(t, e, ca * cb);
    }
  }
  return MultiPoly(a.variables(), std::move(t));
}

bool operator==(const MultiPoly& a0, const MultiPoly& b0) {
  auto [a, b] = aligned(a0, b0);
  return a.terms() == b.terms();
}

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly MultiPoly::scaled(const Rational& c) const {
  TermMap t;
  if (c != 0)
    for (const auto& [e, v] : terms_) t.emplace(e, v * c);
  return MultiPoly(vars_, std::move(t));
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result = constant(vars_, 1), base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw DomainError("variable index out of range");
  TermMap t;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    add_into(t, f, c * e[var]);
  }
  return MultiPoly(vars_, std::move(t));
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  if (var >= vars_.size()) throw DomainError("variable index out of range");
  auto vars = merged_variables(vars_, value.variables());
  MultiPoly v = value.with_variables(vars);
  std::vector<MultiPoly> powers{constant(vars, 1)};
  MultiPoly result(vars);
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * v);
    Exponents f(vars.size(), 0);
    std::copy(e.begin(), e.end(), f.begin());
    f[var] = 0;
    result = result + monomial(vars, std::move(f), c) * powers[e[var]];
  }
  return result;
}

MultiPoly MultiPoly::truncated(unsigned cap) const {
  TermMap t;
  for (const auto& [e, c] : terms_)
    if (dualis::total_degree(e) <= cap) t.emplace(e, c);
  return MultiPoly(vars_, std::move(t));
}

MultiPoly MultiPoly::homogeneous_part(unsigned degree) const {
  TermMap t;
  for (const auto& [e, c] : terms_)
    if (dualis::total_degree(e) == degree) t.emplace(e, c);
  return MultiPoly(vars_, std::move(t));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  int d = degree_in(var);
  std::vector<TermMap> parts(static_cast<std::size_t>(std::max(d + 1, 0)));
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    parts[e[var]].emplace(std::move(f), c);
  }
  std::vector<MultiPoly> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.emplace_back(vars_, std::move(p));
  return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw DomainError("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      Rational p;
      mpz_pow_ui(mpq_numref(p.get_mpq_t()), mpq_numref(point[i].get_mpq_t()), e[i]);
      mpz_pow_ui(mpq_denref(p.get_mpq_t()), mpq_denref(point[i].get_mpq_t()), e[i]);
      term *= p;
    }
    sum += term;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    Rational a = abs(c);
    std::string body;
    if (mono.empty()) body = dualis::to_string(a);
    else if (a == 1) body = mono;
    else body = dualis::to_string(a) + '*' + mono;
    if (first) out = (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// Parsing

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<std::string> scan_identifiers(std::string_view s) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.size();) {
    if (ident_start(s[i])) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      std::string name(s.substr(i, j - i));
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    } else {
      ++i;
    }
  }
  return names;
}

class Parser {
 public:
  Parser(std::string_view s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    skip();
    MultiPoly acc(vars_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    MultiPoly t = term();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (true) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        MultiPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc = acc.scaled(1 / d.constant_term());
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long n = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (n > 4096) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(n));
    }
    return base;
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly::constant(vars_, Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) fail("unknown variable '" + name + "'");
      return MultiPoly::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) {
  return parse(text, scan_identifiers(text));
}

MultiPoly MultiPoly::parse(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).run();
}

// ---------------------------------------------------------------------------------------------
// Division, gcd, determinants, resultants

namespace {

bool divides_monomial(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

DivResult poly_divmod(const MultiPoly& f0, const MultiPoly& g0) {
  if (g0.is_zero()) throw DomainError("division by the zero polynomial");
  auto vars = merged_variables(f0.variables(), g0.variables());
  MultiPoly f = f0.with_variables(vars), g = g0.with_variables(vars);
  const Exponents& lg = g.leading_exponents();
  const Rational& cg = g.leading_coefficient();
  MultiPoly::TermMap p = f.terms(), q, r;
  Exponents m(vars.size());
  while (!p.empty()) {
    auto lead = p.begin();
    if (divides_monomial(lg, lead->first)) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = lead->first[i] - lg[i];
      Rational c = lead->second / cg;
      q.emplace(m, c);
      Exponents e(m.size());
      for (const auto& [eg, cgt] : g.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = eg[i] + m[i];
        add_into(p, e, -c * cgt);
      }
    } else {
      r.emplace(lead->first, lead->second);
      p.erase(lead);
    }
  }
  return {MultiPoly(vars, std::move(q)), MultiPoly(vars, std::move(r))};
}

bool poly_divides(const MultiPoly& g, const MultiPoly& f) {
  if (g.is_zero()) return f.is_zero();
  return poly_divmod(f, g).remainder.is_zero();
}

MultiPoly exact_quotient(const MultiPoly& f, const MultiPoly& g) {
  auto [q, r] = poly_divmod(f, g);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

MultiPoly univariate_gcd(const MultiPoly& f0, const MultiPoly& g0) {
  auto vars = merged_variables(f0.variables(), g0.variables());
  MultiPoly a = f0.with_variables(vars), b = g0.with_variables(vars);
  std::size_t active = 0;
  for (const auto* p : {&a, &b})
    for (const auto& [e, c] : p->terms())
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) active |= std::size_t{1} << std::min<std::size_t>(i, 62);
  if ((active & (active - 1)) != 0) throw DomainError("univariate_gcd needs a single variable");
  while (!b.is_zero()) {
    MultiPoly r = poly_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.leading_coefficient());
}

MultiPoly poly_determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant({}, 1);
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  if (n > 30) throw TooLargeError("instance too large: determinant size exceeds 30");
  std::vector<std::string> vars;
  for (const auto& row : m)
    for (const auto& e : row) vars = merged_variables(vars, e.variables());
  std::unordered_map<std::uint64_t, MultiPoly> layer{{0, MultiPoly::constant(vars, 1)}};
  for (std::size_t r = 0; r < n; ++r) {
    std::unordered_map<std::uint64_t, MultiPoly> next;
    for (const auto& [mask, acc] : layer) {
      for (std::size_t c = 0; c < n; ++c) {
        if ((mask >> c) & 1u) continue;
        if (m[r][c].is_zero()) continue;
        auto above = static_cast<unsigned>(__builtin_popcountll(mask >> (c + 1)));
        MultiPoly term = acc * m[r][c];
        if (above % 2 == 1) term = -term;
        auto key = mask | (std::uint64_t{1} << c);
        auto it = next.find(key);
        if (it == next.end()) next.emplace(key, std::move(term));
        else it->second = it->second + term;
      }
    }
    layer = std::move(next);
  }
  auto it = layer.find((n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  return it == layer.end() ? MultiPoly(vars) : it->second.with_variables(vars);
}

PolyMatrix sylvester_matrix(const MultiPoly& f, const MultiPoly& g, std::size_t var,
                            unsigned deg_f, unsigned deg_g) {
  auto vars = merged_variables(f.variables(), g.variables());
  auto cf = f.with_variables(vars).coefficients_in(var);
  auto cg = g.with_variables(vars).coefficients_in(var);
  if (cf.size() > deg_f + 1 || cg.size() > deg_g + 1)
    throw DomainError("declared degree below actual degree");
  const std::size_t n = deg_f + deg_g;
  PolyMatrix s(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
  auto coeff = [&](const std::vector<MultiPoly>& c, std::size_t k) {
    return k < c.size() ? c[k].with_variables(vars) : MultiPoly(vars);
  };
  // Row r of the f block holds f's coefficients from var^deg_f down to var^0, shifted right by r.
  for (std::size_t r = 0; r < deg_g; ++r)
    for (std::size_t k = 0; k <= deg_f; ++k) s[r][r + k] = coeff(cf, deg_f - k);
  for (std::size_t r = 0; r < deg_f; ++r)
    for (std::size_t k = 0; k <= deg_g; ++k) s[deg_g + r][r + k] = coeff(cg, deg_g - k);
  return s;
}

MultiPoly poly_resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of the zero polynomial");
  return poly_resultant(f, g, var, static_cast<unsigned>(f.degree_in(var)),
                        static_cast<unsigned>(g.degree_in(var)));
}

MultiPoly poly_resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var,
                         unsigned deg_f, unsigned deg_g) {
  return poly_determinant(sylvester_matrix(f, g, var, deg_f, deg_g));
}

}  // namespace dualis
