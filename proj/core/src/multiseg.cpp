#include "dualis/multiseg.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "dualis/error.hpp"

namespace dualis {

Multisegment::Multisegment(unsigned r) : r_(r) { require(r >= 1, "multisegment needs r >= 1"); }

Multisegment::Multisegment(unsigned r, const std::map<Segment, unsigned>& mult) : Multisegment(r) {
  for (const auto& [s, c] : mult) {
    require(1 <= s.first && s.first <= s.second && s.second <= r,
            "segment [" + std::to_string(s.first) + "," + std::to_string(s.second) + "] out of range");
    if (c != 0) mult_[s] += c;
  }
}

unsigned Multisegment::operator()(unsigned i, unsigned j) const {
  auto it = mult_.find({i, j});
  return it == mult_.end() ? 0 : it->second;
}

unsigned Multisegment::total_multiplicity() const {
  unsigned t = 0;
  for (const auto& [s, c] : mult_) t += c;
  return t;
}

Multisegment Multisegment::plus(unsigned i, unsigned j, unsigned count) const {
  Multisegment out = *this;
  if (count == 0 || i < 1 || i > j || j > r_) return out;
  out.mult_[{i, j}] += count;
  return out;
}

Multisegment Multisegment::minus(unsigned i, unsigned j, unsigned count) const {
  Multisegment out = *this;
  if (count == 0 || i < 1 || i > j || j > r_) return out;
  auto it = out.mult_.find({i, j});
  require(it != out.mult_.end() && it->second >= count, "multiplicity would become negative");
  it->second -= count;
  if (it->second == 0) out.mult_.erase(it);
  return out;
}

std::string Multisegment::to_string() const {
  std::string out;
  for (const auto& [s, c] : mult_) {
    if (!out.empty()) out += ',';
    out += std::to_string(s.first) + '-' + std::to_string(s.second) + ':' + std::to_string(c);
  }
  return out;
}

Multisegment Multisegment::parse(unsigned r, std::string_view text) {
  std::map<Segment, unsigned> mult;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(' ') == std::string::npos) continue;
    unsigned i = 0, j = 0, c = 1;
    char dash = 0, colon = 0;
    std::istringstream is(item);
    is >> i >> dash >> j;
    if (!is || dash != '-') throw DomainError("malformed segment '" + item + "'");
    if (is >> colon) {
      if (colon != ':' || !(is >> c)) throw DomainError("malformed segment '" + item + "'");
    }
    std::string rest;
    if (is >> rest) throw DomainError("malformed segment '" + item + "'");
    require(1 <= i && i <= j && j <= r, "segment '" + item + "' out of range");
    mult[{i, j}] += c;
  }
  return Multisegment(r, mult);
}

std::vector<unsigned long> weight(const Multisegment& m) {
  std::vector<unsigned long> d(m.r(), 0);
  for (const auto& [s, c] : m.entries())
    for (unsigned p = s.first; p <= s.second; ++p) d[p - 1] += c;
  return d;
}

RankTable segment_ranks(const Multisegment& m) {
  const unsigned r = m.r();
  RankTable t(r, std::vector<unsigned long>(r, 0));
  for (unsigned i = 1; i <= r; ++i)
    for (unsigned j = i; j <= r; ++j)
      for (const auto& [s, c] : m.entries())
        if (s.first <= i && j <= s.second) t[i - 1][j - 1] += c;
  return t;
}

Multisegment from_ranks(const RankTable& t) {
  const auto r = static_cast<unsigned>(t.size());
  require(r >= 1, "empty rank table");
  auto at = [&](unsigned i, unsigned j) -> long {
    if (i < 1 || j > r || i > j) return 0;
    return static_cast<long>(t[i - 1][j - 1]);
  };
  std::map<Multisegment::Segment, unsigned> mult;
  for (unsigned i = 1; i <= r; ++i)
    for (unsigned j = i; j <= r; ++j) {
      long v = at(i, j) - at(i - 1, j) - at(i, j + 1) + at(i - 1, j + 1);
      if (v < 0) throw DomainError("not a rank table");
      if (v > 0) mult[{i, j}] = static_cast<unsigned>(v);
    }
  Multisegment m(r, mult);
  if (segment_ranks(m) != t) throw DomainError("not a rank table");
  return m;
}

namespace {

// Cost of assigning value v to grid cell (k, l): m_{v+k-i, v+l-j}.
struct KzGrid {
  const Multisegment& m;
  unsigned i, j;
  unsigned long cost(unsigned k, unsigned l, unsigned v) const {
    return m(v + k - i, v + l - j);
  }
};

unsigned long kz_naive(const KzGrid& g, unsigned r, std::size_t max_work) {
  const unsigned rows = g.i, cols = r - g.j + 1;
  std::vector<unsigned> nu(rows * cols, 0);
  unsigned long best = std::numeric_limits<unsigned long>::max();
  std::size_t work = 0;
  // Fill cells in row-major order; each cell is bounded below by its upper and left neighbours.
  std::function<void(std::size_t, unsigned long)> rec = [&](std::size_t cell, unsigned long acc) {
    if (++work > max_work) throw TooLargeError("instance too large");
    if (acc >= best) return;
    if (cell == nu.size()) {
      best = acc;
      return;
    }
    unsigned k = static_cast<unsigned>(cell / cols), l = static_cast<unsigned>(cell % cols);
    unsigned lo = g.i;
    if (k > 0) lo = std::max(lo, nu[cell - cols]);
    if (l > 0) lo = std::max(lo, nu[cell - 1]);
    for (unsigned v = lo; v <= g.j; ++v) {
      nu[cell] = v;
      rec(cell + 1, acc + g.cost(k + 1, g.j + l, v));
    }
  };
  rec(0, 0);
  return best;
}

unsigned long kz_dp(const KzGrid& g, unsigned r, std::size_t max_work) {
  const unsigned rows = g.i, cols = r - g.j + 1;
  // All nondecreasing row vectors with values in [i, j].
  std::vector<std::vector<unsigned>> vecs;
  std::vector<unsigned> cur(cols);
  std::function<void(unsigned, unsigned)> gen = [&](unsigned pos, unsigned lo) {
    if (pos == cols) {
      vecs.push_back(cur);
      if (vecs.size() > max_work) throw TooLargeError("instance too large");
      return;
    }
    for (unsigned v = lo; v <= g.j; ++v) {
      cur[pos] = v;
      gen(pos + 1, v);
    }
  };
  gen(0, g.i);
  if (vecs.size() * vecs.size() * rows > max_work) throw TooLargeError("instance too large");
  const unsigned long inf = std::numeric_limits<unsigned long>::max();
  std::vector<unsigned long> dp(vecs.size(), inf), next(vecs.size());
  auto row_cost = [&](unsigned k, const std::vector<unsigned>& v) {
    unsigned long c = 0;
    for (unsigned l = 0; l < cols; ++l) c += g.cost(k, g.j + l, v[l]);
    return c;
  };
  for (std::size_t a = 0; a < vecs.size(); ++a) dp[a] = row_cost(1, vecs[a]);
  for (unsigned k = 2; k <= rows; ++k) {
    for (std::size_t b = 0; b < vecs.size(); ++b) {
      unsigned long best = inf;
      for (std::size_t a = 0; a < vecs.size(); ++a) {
        if (dp[a] >= best) continue;
        bool below = true;
        for (unsigned l = 0; l < cols && below; ++l) below = vecs[a][l] <= vecs[b][l];
        if (below) best = dp[a];
      }
      next[b] = best == inf ? inf : best + row_cost(k, vecs[b]);
    }
    dp.swap(next);
  }
  return *std::min_element(dp.begin(), dp.end());
}

}  // namespace

unsigned long kz_rank(const Multisegment& m, unsigned i, unsigned j, bool use_dp,
                      std::size_t max_work) {
  require(1 <= i && i <= j && j <= m.r(), "rank index out of range");
  KzGrid g{m, i, j};
  return use_dp ? kz_dp(g, m.r(), max_work) : kz_naive(g, m.r(), max_work);
}

Multisegment zeta_kz(const Multisegment& m, const KzOptions& opts) {
  const unsigned r = m.r();
  RankTable t(r, std::vector<unsigned long>(r, 0));
  for (unsigned i = 1; i <= r; ++i)
    for (unsigned j = i; j <= r; ++j) {
      std::size_t cells = static_cast<std::size_t>(i) * (r - j + 1);
      t[i - 1][j - 1] = kz_rank(m, i, j, cells > opts.naive_cell_limit, opts.max_work);
    }
  return from_ranks(t);
}

namespace {

Multisegment zeta_mw_memo(const Multisegment& m, std::map<Multisegment, Multisegment>& memo) {
  if (m.is_zero()) return m;
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  const unsigned r = m.r();
  auto d = weight(m);
  unsigned i1 = 1;
  while (d[i1 - 1] == 0) ++i1;
  std::vector<unsigned> js;
  for (unsigned j = i1; j <= r; ++j)
    if (m(i1, j) != 0) {
      js.push_back(j);
      break;
    }
  for (unsigned t = 1;; ++t) {
    unsigned row = i1 + t;
    if (row > r) break;
    unsigned found = 0;
    for (unsigned j = js.back() + 1; j <= r; ++j)
      if (m(row, j) != 0) {
        found = j;
        break;
      }
    if (found == 0) break;
    js.push_back(found);
  }
  const auto p = static_cast<unsigned>(js.size());
  Multisegment next = m;
  for (unsigned t = 0; t < p; ++t) next = next.minus(i1 + t, js[t]);
  for (unsigned t = 0; t < p; ++t) next = next.plus(i1 + t + 1, js[t]);
  Multisegment out = zeta_mw_memo(next, memo).plus(i1, i1 + p - 1);
  memo.emplace(m, out);
  return out;
}

}  // namespace

Multisegment zeta_mw(const Multisegment& m) {
  std::map<Multisegment, Multisegment> memo;
  return zeta_mw_memo(m, memo);
}

std::vector<Multisegment> enumerate_multisegments(unsigned r, unsigned max_total) {
  std::vector<Multisegment::Segment> segs;
  for (unsigned i = 1; i <= r; ++i)
    for (unsigned j = i; j <= r; ++j) segs.emplace_back(i, j);
  std::vector<Multisegment> out;
  std::map<Multisegment::Segment, unsigned> cur;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t idx, unsigned left) {
    if (idx == segs.size()) {
      out.emplace_back(r, cur);
      return;
    }
    for (unsigned c = 0; c <= left; ++c) {
      if (c > 0) cur[segs[idx]] = c;
      rec(idx + 1, left - c);
    }
    cur.erase(segs[idx]);
  };
  rec(0, max_total);
  return out;
}

}  // namespace dualis
