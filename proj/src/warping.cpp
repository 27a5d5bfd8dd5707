#include "warpdeg/warping.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace warpdeg {

namespace {

// Self warping count of one component word read from `pos`. Only crossings
// with both passages inside the word count; inter-component passages are
// walked over without effect.
int self_count_of_word(const LinkDiagram& diagram, const std::vector<Passage>& word, int pos) {
  const int len = static_cast<int>(word.size());
  std::unordered_set<int> seen;
  int count = 0;
  for (int t = 0; t < len; ++t) {
    const Passage& p = word[(pos + t) % len];
    if (!diagram.crossing(p.crossing_id).is_self()) continue;
    if (seen.insert(p.crossing_id).second && p.strand == Strand::Under) ++count;
  }
  return count;
}

int min_self_count(const LinkDiagram& diagram, const std::vector<Passage>& word,
                   int* best_pos = nullptr) {
  const int len = static_cast<int>(word.size());
  if (best_pos) *best_pos = 0;
  if (len == 0) return 0;
  int best = self_count_of_word(diagram, word, 0);
  for (int pos = 1; pos < len && best > 0; ++pos) {
    const int v = self_count_of_word(diagram, word, pos);
    if (v < best) {
      best = v;
      if (best_pos) *best_pos = pos;
    }
  }
  return best;
}

void require_order_budget(int r, const WarpingOptions& opts) {
  if (r > opts.max_r)
    throw DiagramError("diagram has " + std::to_string(r) +
                       " components; order enumeration is capped at max_r=" +
                       std::to_string(opts.max_r));
}

int linking_count_for_order(const LinkDiagram& diagram, const std::vector<int>& order) {
  int total = 0;
  const int r = static_cast<int>(order.size());
  for (int k = 0; k < r; ++k)
    for (int l = k + 1; l < r; ++l)
      total += diagram.under_crossing_count(order[k], order[l]);
  return total;
}

}  // namespace

std::vector<WarpingPoint> warping_points(const LinkDiagram& diagram,
                                         const BaseSequence& base) {
  validate_base(diagram, base);
  const int r = diagram.component_count();
  std::vector<int> slot(r);  // component -> position in the order
  for (int k = 0; k < r; ++k) slot[base.order[k]] = k;

  std::vector<WarpingPoint> points;
  // Self part: first encounters along each component from its base point.
  for (int i = 0; i < r; ++i) {
    const auto& word = diagram.word(i);
    const int len = static_cast<int>(word.size());
    std::unordered_set<int> seen;
    for (int t = 0; t < len; ++t) {
      const Passage& p = word[(base.positions[i] + t) % len];
      if (!diagram.crossing(p.crossing_id).is_self()) continue;
      if (seen.insert(p.crossing_id).second && p.strand == Strand::Under)
        points.push_back({p.crossing_id, i, i});
    }
  }
  // Between part: a pair crossing counts when the earlier component is under.
  for (const Crossing& x : diagram.crossings()) {
    if (x.is_self()) continue;
    const int cu = x.under.component, co = x.over.component;
    if (slot[cu] < slot[co]) points.push_back({x.id, cu, co});
  }
  std::sort(points.begin(), points.end(),
            [](const WarpingPoint& a, const WarpingPoint& b) {
              return a.crossing_id < b.crossing_id;
            });
  return points;
}

WarpingReport warping_report(const LinkDiagram& diagram, const BaseSequence& base) {
  const auto points = warping_points(diagram, base);
  const int r = diagram.component_count();
  WarpingReport report;
  report.order = base.order;
  report.self_counts.assign(r, 0);
  report.between.assign(r, std::vector<int>(r, 0));
  for (const WarpingPoint& p : points) {
    if (p.is_self()) {
      ++report.self_counts[p.component_a];
    } else {
      ++report.between[p.component_a][p.component_b];
      ++report.linking_warping_degree;
    }
  }
  report.warping_degree = static_cast<int>(points.size());
  return report;
}

LinkingWarpingMinimum min_linking_warping_degree(const LinkDiagram& diagram,
                                                 const WarpingOptions& opts) {
  const int r = diagram.component_count();
  require_order_budget(r, opts);
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  LinkingWarpingMinimum best{linking_count_for_order(diagram, order), order};
  while (std::next_permutation(order.begin(), order.end())) {
    const int v = linking_count_for_order(diagram, order);
    if (v < best.value) best = {v, order};  // lex enumeration keeps the first witness
  }
  return best;
}

WarpingMinimum min_warping_degree(const LinkDiagram& diagram, const WarpingOptions& opts) {
  const int r = diagram.component_count();
  WarpingMinimum result;
  result.witness.positions.assign(r, 0);
  int self_total = 0;
  for (int i = 0; i < r; ++i) {
    int pos = 0;
    self_total += min_self_count(diagram, diagram.word(i), &pos);
    result.witness.positions[i] = pos;
  }
  auto linking = min_linking_warping_degree(diagram, opts);
  result.value = self_total + linking.value;
  result.witness.order = std::move(linking.witness_order);
  return result;
}

int unoriented_warping_degree(const LinkDiagram& diagram, const WarpingOptions& opts) {
  // Reversing a component swaps its self count between the two reading
  // directions and leaves the inter-component part untouched, so the 2^r
  // assignments minimize independently per component.
  int total = min_linking_warping_degree(diagram, opts).value;
  for (int i = 0; i < diagram.component_count(); ++i)
    total += std::min(component_warping_degree(diagram, i),
                      component_warping_degree_reversed(diagram, i));
  return total;
}

int component_warping_degree(const LinkDiagram& diagram, int comp) {
  return min_self_count(diagram, diagram.word(comp));
}

int component_warping_degree_reversed(const LinkDiagram& diagram, int comp) {
  auto word = diagram.word(comp);
  std::reverse(word.begin(), word.end());
  return min_self_count(diagram, word);
}

int self_crossing_component_count(const LinkDiagram& diagram) {
  int n = 0;
  for (int i = 0; i < diagram.component_count(); ++i)
    if (diagram.has_self_crossing(i)) ++n;
  return n;
}

bool is_monotone(const LinkDiagram& diagram, const BaseSequence& base) {
  return warping_points(diagram, base).empty();
}

bool is_stacked(const LinkDiagram& diagram, const BaseSequence& base) {
  return warping_report(diagram, base).linking_warping_degree == 0;
}

bool is_stacked_diagram(const LinkDiagram& diagram, const WarpingOptions& opts) {
  return min_linking_warping_degree(diagram, opts).value == 0;
}

bool is_self_crossing_diagram(const LinkDiagram& diagram) {
  return self_crossing_component_count(diagram) == diagram.component_count();
}

}  // namespace warpdeg
