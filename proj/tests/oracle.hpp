#pragma once

// Brute-force reference computations, written straight from the definitions
// and kept independent of the library's minimization paths. Test-only.

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <vector>

#include "warpdeg/diagram.hpp"

namespace warpdeg::oracle {

// Warping count of one based diagram: self crossings met first as
// under-crossings, plus pair crossings where the earlier component is under.
inline int based_warping_count(const LinkDiagram& d, const std::vector<int>& order,
                               const std::vector<int>& positions) {
  const int r = d.component_count();
  std::vector<int> slot(r);
  for (int k = 0; k < r; ++k) slot[order[k]] = k;
  int total = 0;
  for (int i = 0; i < r; ++i) {
    const auto& word = d.word(i);
    const int len = static_cast<int>(word.size());
    std::map<int, Strand> first;
    for (int t = 0; t < len; ++t) {
      const Passage& p = word[(positions[i] + t) % len];
      if (d.crossing(p.crossing_id).is_self()) first.try_emplace(p.crossing_id, p.strand);
    }
    for (const auto& [id, strand] : first)
      if (strand == Strand::Under) ++total;
  }
  for (const Crossing& x : d.crossings())
    if (!x.is_self() && slot[x.under.component] < slot[x.over.component]) ++total;
  return total;
}

inline int based_linking_count(const LinkDiagram& d, const std::vector<int>& order) {
  const int r = d.component_count();
  std::vector<int> slot(r);
  for (int k = 0; k < r; ++k) slot[order[k]] = k;
  int total = 0;
  for (const Crossing& x : d.crossings())
    if (!x.is_self() && slot[x.under.component] < slot[x.over.component]) ++total;
  return total;
}

// Minimum over every order and every tuple of base positions.
inline int min_warping_brute(const LinkDiagram& d) {
  const int r = d.component_count();
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  int best = INT_MAX;
  do {
    std::vector<int> pos(r, 0);
    while (true) {
      best = std::min(best, based_warping_count(d, order, pos));
      int k = 0;
      while (k < r) {
        const int len = std::max<int>(1, static_cast<int>(d.word(k).size()));
        if (++pos[k] < len) break;
        pos[k] = 0;
        ++k;
      }
      if (k == r) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline int min_linking_brute(const LinkDiagram& d) {
  const int r = d.component_count();
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  int best = INT_MAX;
  do {
    best = std::min(best, based_linking_count(d, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// Minimum over base positions for a one-component diagram.
inline int knot_min_brute(const LinkDiagram& d) {
  const int len = std::max<int>(1, static_cast<int>(d.word(0).size()));
  int best = INT_MAX;
  for (int p = 0; p < len; ++p) best = std::min(best, based_warping_count(d, {0}, {p}));
  return best;
}

}  // namespace warpdeg::oracle
