#include "warpdeg/split.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace warpdeg {

namespace {

constexpr int kSearchLcLimit = 12;  // subset search budget

void require_link(const LinkDiagram& diagram) {
  if (diagram.component_count() < 2)
    throw DiagramError("splitting distances need at least 2 components");
}

long long ceil_abs_half(long long twice) { return (std::llabs(twice) + 1) / 2; }

std::vector<int> inter_crossing_ids(const LinkDiagram& diagram) {
  std::vector<int> ids;
  for (const Crossing& x : diagram.crossings())
    if (!x.is_self()) ids.push_back(x.id);
  return ids;
}

std::string order_text(const std::vector<int>& order) {
  std::string s = "(";
  for (size_t k = 0; k < order.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(order[k] + 1);
  }
  return s + ")";
}

std::string mask_text(unsigned mask, int r) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < r; ++i)
    if (mask & (1u << i)) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

void check_consistent(const BoundInterval& interval, const LinkDiagram& diagram) {
  if (interval.lower > interval.upper) {
    std::string pairs;
    for (const std::string& w : validation_warnings(diagram)) pairs += " " + w + ";";
    throw DiagramError(
        "split bounds are contradictory (lower " + std::to_string(interval.lower) +
        " > upper " + std::to_string(interval.upper) +
        "); the code cannot come from closed curves." + pairs);
  }
}

}  // namespace

bool is_bipartition_split(const LinkDiagram& diagram) {
  const int r = diagram.component_count();
  if (r < 2) return false;
  for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
    bool ok = true;
    for (const Crossing& x : diagram.crossings()) {
      if (x.is_self()) continue;
      const bool over_in = mask & (1u << x.over.component);
      const bool under_in = mask & (1u << x.under.component);
      if (over_in != under_in && !over_in) {  // crossing leaves the mask side below
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::optional<std::vector<int>> exhaustive_split_search(const LinkDiagram& diagram,
                                                        bool complete, int max_size,
                                                        const WarpingOptions& opts) {
  require_link(diagram);
  const std::vector<int> ids = inter_crossing_ids(diagram);
  auto passes = [&](const std::vector<int>& subset) {
    const LinkDiagram changed = change_crossings(diagram, subset);
    return complete ? is_stacked_diagram(changed, opts) : is_bipartition_split(changed);
  };
  std::vector<int> subset;
  std::function<bool(int, int)> pick = [&](int from, int want) {
    if (want == 0) return passes(subset);
    for (int t = from; t + want <= static_cast<int>(ids.size()); ++t) {
      subset.push_back(ids[t]);
      if (pick(t + 1, want - 1)) return true;
      subset.pop_back();
    }
    return false;
  };
  for (int size = 0; size <= std::min<int>(max_size, ids.size()); ++size) {
    subset.clear();
    if (pick(0, size)) return subset;
  }
  return std::nullopt;
}

BoundInterval complete_split_bounds(const LinkDiagram& diagram, const WarpingOptions& opts) {
  require_link(diagram);
  const int r = diagram.component_count();

  long long lower = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) lower += ceil_abs_half(diagram.pair_sign_sum(i, j));

  const auto ld = min_linking_warping_degree(diagram, opts);
  BaseSequence base = default_base(diagram);
  base.order = ld.witness_order;
  std::vector<int> cert;
  for (const WarpingPoint& p : warping_points(diagram, base))
    if (!p.is_self()) cert.push_back(p.crossing_id);

  BoundInterval interval;
  interval.lower = lower;
  interval.upper = ld.value;
  interval.lower_certificate =
      "every pair's linking number must be moved to zero, one unit per change "
      "(sum of rounded-up |Link| over pairs)";
  interval.upper_certificate = {
      cert, "switch the inter-component warping crossings of order " +
                order_text(ld.witness_order) + "; the result is stacked"};

  // Bounded search for a smaller change set. The stacked target cannot beat
  // the order minimum, so this serves as a cross-check.
  if (diagram.linking_crossing_count() <= kSearchLcLimit && interval.upper > 0) {
    if (auto found = exhaustive_split_search(diagram, true,
                                             static_cast<int>(interval.upper) - 1, opts)) {
      interval.upper = static_cast<long long>(found->size());
      interval.upper_certificate = {*found, "found by exhaustive subset search"};
    }
  }

  check_consistent(interval, diagram);
  return interval;
}

BoundInterval partial_split_bounds(const LinkDiagram& diagram, const WarpingOptions& opts) {
  require_link(diagram);
  const int r = diagram.component_count();
  if (r > 30) throw DiagramError("bipartition enumeration is limited to 30 components");

  long long best_cost = -1, best_lower = -1;
  unsigned best_mask = 0;
  bool flip_mask_side = false;
  for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
    if (!(mask & 1u)) continue;  // each unordered bipartition once
    long long under_in = 0, under_out = 0, lower = 0;
    for (const Crossing& x : diagram.crossings()) {
      if (x.is_self()) continue;
      const bool over_in = mask & (1u << x.over.component);
      const bool under_in_mask = mask & (1u << x.under.component);
      if (over_in == under_in_mask) continue;
      (under_in_mask ? under_in : under_out) += 1;
    }
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        const bool ai = mask & (1u << i), aj = mask & (1u << j);
        if (ai != aj) lower += ceil_abs_half(diagram.pair_sign_sum(i, j));
      }
    const long long cost = std::min(under_in, under_out);
    if (best_cost < 0 || cost < best_cost) {
      best_cost = cost;
      best_mask = mask;
      flip_mask_side = under_in <= under_out;
    }
    if (best_lower < 0 || lower < best_lower) best_lower = lower;
  }

  std::vector<int> cert;
  for (const Crossing& x : diagram.crossings()) {
    if (x.is_self()) continue;
    const bool over_in = best_mask & (1u << x.over.component);
    const bool under_in = best_mask & (1u << x.under.component);
    if (over_in == under_in) continue;
    if (under_in == flip_mask_side) cert.push_back(x.id);
  }

  BoundInterval interval;
  interval.lower = best_lower;
  interval.upper = best_cost;
  interval.lower_certificate =
      "some bipartition must reach zero linking across it (minimum over "
      "bipartitions of the rounded-up |Link| sum)";
  interval.upper_certificate = {
      cert, "switch these so components " + mask_text(best_mask, r) +
                (flip_mask_side ? " pass over the rest" : " pass under the rest")};

  if (diagram.linking_crossing_count() <= kSearchLcLimit && interval.upper > 0) {
    if (auto found = exhaustive_split_search(diagram, false,
                                             static_cast<int>(interval.upper) - 1, opts)) {
      interval.upper = static_cast<long long>(found->size());
      interval.upper_certificate = {*found, "found by exhaustive subset search"};
    }
  }

  check_consistent(interval, diagram);
  return interval;
}

VerificationReport split_chain_check(const LinkDiagram& diagram, const WarpingOptions& opts) {
  require_link(diagram);
  const BoundInterval partial = partial_split_bounds(diagram, opts);
  const BoundInterval complete = complete_split_bounds(diagram, opts);
  const long long ld = min_linking_warping_degree(diagram, opts).value;
  const int lc = diagram.linking_crossing_count();
  const int c = diagram.crossing_count();
  const int du = unoriented_warping_degree(diagram, opts);

  const bool partial_le_complete = partial.lower <= complete.upper;
  const bool complete_le_ld = complete.lower <= ld && complete.upper <= ld;
  const bool ld_le_half_lc = 2 * ld <= lc;
  const bool lc_le_c = lc <= c;
  const bool complete_le_unoriented = complete.lower <= du;

  VerificationReport report;
  report.claim = "split_chain";
  report.lhs = static_cast<double>(complete.upper);
  report.rhs = lc / 2.0;
  report.holds = partial_le_complete && complete_le_ld && ld_le_half_lc && lc_le_c &&
                 complete_le_unoriented;
  report.equality = (2 * ld == lc);
  report.witnesses = {{"partial_interval", {partial.lower, partial.upper}},
                      {"complete_interval", {complete.lower, complete.upper}},
                      {"ld", ld},
                      {"lc", lc},
                      {"c", c},
                      {"unoriented_warping_degree", du},
                      {"partial_le_complete", partial_le_complete},
                      {"complete_le_ld", complete_le_ld},
                      {"ld_le_half_lc", ld_le_half_lc},
                      {"lc_le_c", lc_le_c},
                      {"complete_lower_le_unoriented", complete_le_unoriented}};
  return report;
}

}  // namespace warpdeg
