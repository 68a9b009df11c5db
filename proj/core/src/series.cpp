#include "dualis/series.hpp"

#include <algorithm>

#include "dualis/error.hpp"

namespace dualis {

namespace {

bool inside(const Exponents& e, unsigned cap, const std::optional<Exponents>& box) {
  if (total_degree(e) > cap) return false;
  if (box)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > (*box)[i]) return false;
  return true;
}

MultiPoly clip(const MultiPoly& p, unsigned cap, const std::optional<Exponents>& box) {
  MultiPoly::TermMap t;
  for (const auto& [e, c] : p.terms())
    if (inside(e, cap, box)) t.emplace(e, c);
  return MultiPoly(p.variables(), std::move(t));
}

std::optional<Exponents> meet(const std::optional<Exponents>& a, const std::optional<Exponents>& b) {
  if (!a) return b;
  if (!b) return a;
  if (a->size() != b->size()) throw DomainError("series boxes of different dimension");
  Exponents m(a->size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min((*a)[i], (*b)[i]);
  return m;
}

void check_same_variables(const TruncSeries& a, const TruncSeries& b) {
  if (a.body().variables() != b.body().variables())
    throw DomainError("series over different variable lists");
}

}  // namespace

TruncSeries::TruncSeries(MultiPoly body, unsigned cap, std::optional<Exponents> box)
    : body_(), cap_(cap), box_(std::move(box)) {
  if (box_ && box_->size() != body.num_variables())
    throw DomainError("series box has wrong dimension");
  body_ = clip(body, cap_, box_);
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  check_same_variables(a, b);
  return TruncSeries(a.body_ + b.body_, std::min(a.cap_, b.cap_), meet(a.box_, b.box_));
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  check_same_variables(a, b);
  return TruncSeries(a.body_ - b.body_, std::min(a.cap_, b.cap_), meet(a.box_, b.box_));
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  check_same_variables(a, b);
  unsigned cap = std::min(a.cap_, b.cap_);
  auto box = meet(a.box_, b.box_);
  MultiPoly::TermMap t;
  Exponents e(a.body_.num_variables());
  for (const auto& [ea, ca] : a.body_.terms()) {
    for (const auto& [eb, cb] : b.body_.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (!inside(e, cap, box)) continue;
      auto [it, fresh] = t.try_emplace(e, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  }
  return TruncSeries(MultiPoly(a.body_.variables(), std::move(t)), cap, box);
}

TruncSeries TruncSeries::scaled(const Rational& c) const {
  return TruncSeries(body_.scaled(c), cap_, box_);
}

TruncSeries series_mul_inverse(const TruncSeries& s) {
  Rational c0 = s.body().constant_term();
  if (c0 == 0) throw DomainError("series has zero constant term");
  const auto& vars = s.body().variables();
  // 1/(c0 + u) = (1/c0) * sum_k (-u/c0)^k; u has no constant term so k <= cap suffices.
  TruncSeries u(s.body() - MultiPoly::constant(vars, c0), s.cap(), s.box());
  TruncSeries step = u.scaled(-1 / c0);
  TruncSeries power(MultiPoly::constant(vars, 1), s.cap(), s.box());
  TruncSeries sum = power;
  for (unsigned k = 1; k <= s.cap() && !power.body().is_zero(); ++k) {
    power = power * step;
    sum = sum + power;
  }
  return sum.scaled(1 / c0);
}

}  // namespace dualis
