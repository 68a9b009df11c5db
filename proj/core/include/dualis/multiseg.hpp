#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dualis {

// Multiset of segments [i, j] with 1 <= i <= j <= r. Zero multiplicities are never stored.
class Multisegment {
 public:
  using Segment = std::pair<unsigned, unsigned>;

  explicit Multisegment(unsigned r);
  Multisegment(unsigned r, const std::map<Segment, unsigned>& mult);

  unsigned r() const { return r_; }
  unsigned operator()(unsigned i, unsigned j) const;
  const std::map<Segment, unsigned>& entries() const { return mult_; }
  bool is_zero() const { return mult_.empty(); }
  unsigned total_multiplicity() const;

  // Out-of-range segments are ignored, matching the convention (i, j) = 0 unless 1 <= i <= j <= r.
  Multisegment plus(unsigned i, unsigned j, unsigned count = 1) const;
  Multisegment minus(unsigned i, unsigned j, unsigned count = 1) const;

  // Canonical encoding "i-j:m,..." sorted by (i, j); the zero multisegment encodes as "".
  std::string to_string() const;
  static Multisegment parse(unsigned r, std::string_view text);

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  friend bool operator<(const Multisegment& a, const Multisegment& b) {
    return a.r_ != b.r_ ? a.r_ < b.r_ : a.mult_ < b.mult_;
  }

 private:
  unsigned r_;
  std::map<Segment, unsigned> mult_;
};

// r_{ij} stored at [i-1][j-1] for i <= j; other entries are zero.
using RankTable = std::vector<std::vector<unsigned long>>;

std::vector<unsigned long> weight(const Multisegment& m);
RankTable segment_ranks(const Multisegment& m);

// m_{ij} = r_{ij} - r_{i-1,j} - r_{i,j+1} + r_{i-1,j+1} with out-of-range ranks zero.
Multisegment from_ranks(const RankTable& t);

struct KzOptions {
  std::size_t naive_cell_limit = 12;      // grids with more cells use the row DP
  std::size_t max_work = 50'000'000;      // enumeration steps before "instance too large"
};

// Minimum over monotone maps nu of the sum defining r_{ij}(zeta(m)), by naive enumeration or row DP.
unsigned long kz_rank(const Multisegment& m, unsigned i, unsigned j, bool use_dp,
                      std::size_t max_work = KzOptions{}.max_work);

Multisegment zeta_kz(const Multisegment& m, const KzOptions& opts = {});
Multisegment zeta_mw(const Multisegment& m);

// All multisegments on [1, r] with total multiplicity at most `max_total`.
std::vector<Multisegment> enumerate_multisegments(unsigned r, unsigned max_total);

}  // namespace dualis
