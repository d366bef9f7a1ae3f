/**
 * draftrank: accuracy metrics and consensus aggregation for mock drafts.
 *
 * Brute-force reference implementations used only as test oracles. They
 * favor literal transcription over speed: explicit prefix sets, explicit
 * powers, no incremental state shared with the library code.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

namespace oracles {

/// Agreement numerator at depth d: the size of the intersection of the two
/// depth-d prefixes, each taken as an explicit set. Prefixes saturate at
/// list length.
inline int prefix_overlap(const std::vector<std::string>& a,
                          const std::vector<std::string>& b, std::size_t d) {
  const std::set<std::string> sa(a.begin(),
                                 a.begin() + std::min(d, a.size()));
  const std::set<std::string> sb(b.begin(),
                                 b.begin() + std::min(d, b.size()));
  int n = 0;
  for (const auto& e : sa) n += static_cast<int>(sb.count(e));
  return n;
}

struct BruteRbo {
  double observed = 0.0;
  double extrapolated = 0.0;
  double residual = 0.0;
  double total = 0.0;
};

/// Literal evaluation of the extrapolated overlap score for finite lists:
/// the observed head (depths 1..s), the projected stretch (s+1..l), and
/// the closing term at depth l, with s/l the shorter/longer lengths.
inline BruteRbo brute_rbo_ext(const std::vector<std::string>& x,
                              const std::vector<std::string>& y, double q) {
  const std::vector<std::string>& s_list = x.size() <= y.size() ? x : y;
  const std::vector<std::string>& l_list = x.size() <= y.size() ? y : x;
  const std::size_t s = s_list.size();
  const std::size_t l = l_list.size();

  BruteRbo r;
  for (std::size_t d = 1; d <= s; ++d) {
    r.observed += (1.0 - q) / q * std::pow(q, static_cast<double>(d)) *
                  (prefix_overlap(s_list, l_list, d) / static_cast<double>(d));
  }
  const double xs = prefix_overlap(s_list, l_list, s);
  for (std::size_t d = s + 1; d <= l; ++d) {
    r.extrapolated +=
        (1.0 - q) / q * std::pow(q, static_cast<double>(d)) *
        (prefix_overlap(s_list, l_list, d) / static_cast<double>(d) +
         xs / static_cast<double>(s) *
             (1.0 - static_cast<double>(s) / static_cast<double>(d)));
  }
  r.residual = std::pow(q, static_cast<double>(l)) *
               (prefix_overlap(s_list, l_list, l) / static_cast<double>(l) +
                xs / static_cast<double>(s) *
                    (1.0 - static_cast<double>(s) / static_cast<double>(l)));
  r.total = r.observed + r.extrapolated + r.residual;
  return r;
}

/// Weight mass of ranks 1..depth by direct accumulation: each rank r
/// carries (1-q)/q * sum_{k>=r} q^k/k, truncated once the geometric tail
/// is far below double precision.
inline double brute_prefix_weight(double q, int depth) {
  double total = 0.0;
  for (int r = 1; r <= depth; ++r) {
    double tail = 0.0;
    for (int k = r; k <= 20000; ++k) {
      const double term = std::pow(q, k) / k;
      tail += term;
      if (term < 1e-18 && k > r) break;
    }
    total += (1.0 - q) / q * tail;
  }
  return total;
}

}  // namespace oracles
