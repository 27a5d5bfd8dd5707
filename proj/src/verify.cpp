#include "warpdeg/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace warpdeg {

using nlohmann::ordered_json;

std::string to_string(const HalfInteger& h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

HalfInteger linking_number(const LinkDiagram& diagram, int i, int j) {
  diagram.word(i), diagram.word(j);
  if (i == j)
    throw DiagramError("linking number needs two distinct components, got " +
                       std::to_string(i + 1) + " twice");
  return HalfInteger{diagram.pair_sign_sum(i, j)};
}

HalfInteger total_linking_number(const LinkDiagram& diagram) {
  HalfInteger total;
  const int r = diagram.component_count();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) total.twice += diagram.pair_sign_sum(i, j);
  return total;
}

int total_linking_via_warping(const LinkDiagram& diagram, const BaseSequence& base) {
  int sum = 0;
  for (const WarpingPoint& p : warping_points(diagram, base))
    if (!p.is_self()) sum += diagram.crossing(p.crossing_id).sign;
  return sum;
}

bool is_alternating_component(const LinkDiagram& diagram, int comp) {
  std::vector<Strand> self;
  for (const Passage& p : diagram.word(comp))
    if (diagram.crossing(p.crossing_id).is_self()) self.push_back(p.strand);
  const int n = static_cast<int>(self.size());
  for (int t = 0; t < n; ++t)
    if (self[t] == self[(t + 1) % n]) return false;
  return true;
}

BalancedAlternatingReport balanced_alternating(const LinkDiagram& diagram) {
  BalancedAlternatingReport report;
  const int r = diagram.component_count();
  for (int i = 0; i < r; ++i)
    if (!is_alternating_component(diagram, i)) report.non_alternating.push_back(i);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      report.pairs.push_back({i, j, diagram.under_crossing_count(i, j),
                              diagram.under_crossing_count(j, i)});
  report.value = report.non_alternating.empty() &&
                 std::all_of(report.pairs.begin(), report.pairs.end(),
                             [](const PairBalance& p) { return p.balanced(); });
  return report;
}

namespace {

ordered_json pairs_json(const std::vector<PairBalance>& pairs) {
  ordered_json out = ordered_json::array();
  for (const PairBalance& p : pairs)
    out.push_back({{"i", p.i + 1},
                   {"j", p.j + 1},
                   {"under_i", p.under_i},
                   {"under_j", p.under_j}});
  return out;
}

ordered_json order_json(const std::vector<int>& order) {
  ordered_json out = ordered_json::array();
  for (int v : order) out.push_back(v + 1);
  return out;
}

long long sum_abs_linking_twice(const LinkDiagram& diagram) {
  long long sum = 0;
  const int r = diagram.component_count();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) sum += std::llabs(diagram.pair_sign_sum(i, j));
  return sum;
}

// Signs of the crossings between `under_comp` and `over_comp` at which the
// first one runs under: +1 if all positive, -1 if all negative, 0 if mixed
// or none.
int constant_under_sign(const LinkDiagram& diagram, int under_comp, int over_comp) {
  bool pos = false, neg = false;
  for (const Crossing& x : diagram.crossings())
    if (x.under.component == under_comp && x.over.component == over_comp)
      (x.sign > 0 ? pos : neg) = true;
  if (pos && neg) return 0;
  return pos ? +1 : neg ? -1 : 0;
}

bool constant_or_empty(const LinkDiagram& diagram, int under_comp, int over_comp) {
  bool pos = false, neg = false;
  for (const Crossing& x : diagram.crossings())
    if (x.under.component == under_comp && x.over.component == over_comp)
      (x.sign > 0 ? pos : neg) = true;
  return !(pos && neg);
}

}  // namespace

VerificationReport verify_knot_crossing_bound(const LinkDiagram& knot,
                                              const WarpingOptions& opts) {
  if (knot.component_count() != 1)
    throw DiagramError("knot crossing bound needs a one-component diagram");
  if (knot.crossing_count() == 0)
    throw DiagramError("knot crossing bound needs at least one crossing");
  const int d = min_warping_degree(knot, opts).value;
  const int d_rev = min_warping_degree(reverse_all(knot), opts).value;
  const int c = knot.crossing_count();
  const bool alternating = is_alternating_component(knot, 0);

  VerificationReport report;
  report.claim = "knot_crossing_bound";
  report.lhs = d + d_rev + 1;
  report.rhs = c;
  report.equality = (d + d_rev + 1 == c);
  report.holds = (d + d_rev + 1 <= c) && (*report.equality == alternating);
  report.witnesses = {{"d", d}, {"d_reversed", d_rev}, {"alternating", alternating}};
  return report;
}

VerificationReport verify_link_crossing_bound(const LinkDiagram& diagram,
                                              const WarpingOptions& opts) {
  const int d = min_warping_degree(diagram, opts).value;
  const int d_rev = min_warping_degree(reverse_all(diagram), opts).value;
  const int sr = self_crossing_component_count(diagram);
  const int c = diagram.crossing_count();
  const auto condition = balanced_alternating(diagram);

  VerificationReport report;
  report.claim = "link_crossing_bound";
  report.lhs = d + d_rev + sr;
  report.rhs = c;
  report.equality = (d + d_rev + sr == c);
  report.holds = (d + d_rev + sr <= c) && (*report.equality == condition.value);
  report.witnesses = {{"d", d},
                      {"d_reversed", d_rev},
                      {"self_crossing_components", sr},
                      {"balanced_alternating", condition.value},
                      {"pairs", pairs_json(condition.pairs)}};
  return report;
}

VerificationReport verify_ld_vs_lc(const LinkDiagram& diagram, const WarpingOptions& opts) {
  const auto ld = min_linking_warping_degree(diagram, opts);
  const int lc = diagram.linking_crossing_count();
  const auto condition = balanced_alternating(diagram);
  const bool all_balanced =
      std::all_of(condition.pairs.begin(), condition.pairs.end(),
                  [](const PairBalance& p) { return p.balanced(); });

  // Each pair crossing is counted by exactly one of an order and its reverse.
  bool reversal_identity = true;
  const int r = diagram.component_count();
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  BaseSequence base = default_base(diagram);
  do {
    base.order = order;
    const int forward = warping_report(diagram, base).linking_warping_degree;
    base.order.assign(order.rbegin(), order.rend());
    const int backward = warping_report(diagram, base).linking_warping_degree;
    if (forward + backward != lc) reversal_identity = false;
  } while (std::next_permutation(order.begin(), order.end()));

  VerificationReport report;
  report.claim = "ld_vs_lc";
  report.lhs = ld.value;
  report.rhs = lc / 2.0;
  report.equality = (2 * ld.value == lc);
  report.holds =
      (2 * ld.value <= lc) && (*report.equality == all_balanced) && reversal_identity;
  report.witnesses = {{"ld", ld.value},
                      {"lc", lc},
                      {"all_pairs_balanced", all_balanced},
                      {"reversal_identity_all_orders", reversal_identity},
                      {"order", order_json(ld.witness_order)}};
  return report;
}

VerificationReport verify_self_crossing_bound(const LinkDiagram& diagram,
                                              const WarpingOptions& opts) {
  const int r = diagram.component_count();
  const int sr = self_crossing_component_count(diagram);
  VerificationReport report;
  report.claim = "self_crossing_bound";
  if (sr < r) {
    report.holds = true;
    report.witnesses = {{"skipped", "some component has no self-crossing"}};
    return report;
  }
  const int d = min_warping_degree(diagram, opts).value;
  const int d_rev = min_warping_degree(reverse_all(diagram), opts).value;
  const int c = diagram.crossing_count();
  const auto condition = balanced_alternating(diagram);
  report.lhs = d + d_rev + r;
  report.rhs = c;
  report.equality = (d + d_rev + r == c);
  report.holds = (d + d_rev + r <= c) && (*report.equality == condition.value);
  report.witnesses = {{"d", d},
                      {"d_reversed", d_rev},
                      {"components", r},
                      {"balanced_alternating", condition.value}};
  return report;
}

VerificationReport verify_orientation_invariance(const LinkDiagram& diagram,
                                                 const WarpingOptions& opts) {
  const int r = diagram.component_count();
  std::vector<unsigned> masks;
  if (r <= 6) {
    for (unsigned m = 0; m < (1u << r); ++m) masks.push_back(m);
  } else {
    masks.push_back(0);
    for (int i = 0; i < r; ++i) masks.push_back(1u << i);
    masks.push_back((1u << r) - 1);
  }

  std::vector<long long> values;
  for (unsigned mask : masks) {
    LinkDiagram oriented = diagram;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) oriented = reverse_component(oriented, i);
    values.push_back(min_warping_degree(oriented, opts).value +
                     min_warping_degree(reverse_all(oriented), opts).value);
  }
  const bool all_equal =
      std::all_of(values.begin(), values.end(), [&](long long v) { return v == values[0]; });

  VerificationReport report;
  report.claim = "orientation_invariance";
  report.lhs = static_cast<double>(values[0]);
  report.rhs = static_cast<double>(*std::max_element(values.begin(), values.end()));
  report.equality = all_equal;
  report.holds = all_equal;
  report.witnesses = {{"assignments_checked", masks.size()},
                      {"exhaustive", r <= 6},
                      {"value", values[0]}};
  return report;
}

VerificationReport verify_linking_vs_ld(const LinkDiagram& diagram,
                                        const WarpingOptions& opts) {
  const long long sum_twice = sum_abs_linking_twice(diagram);
  const auto ld = min_linking_warping_degree(diagram, opts);
  const bool integral = sum_twice % 2 == 0;
  const bool inequality = sum_twice <= 2 * ld.value;
  const bool parity = integral && ((sum_twice / 2 - ld.value) % 2 == 0);
  const bool equality = sum_twice == 2 * ld.value;

  // Equality should occur exactly when, at a minimizing order, each pair's
  // under-crossing signs are constant.
  const int r = diagram.component_count();
  std::vector<int> slot(r);
  for (int k = 0; k < r; ++k) slot[ld.witness_order[k]] = k;
  bool condition = true;
  ordered_json pair_detail = ordered_json::array();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const int earlier = slot[i] < slot[j] ? i : j;
      const int later = slot[i] < slot[j] ? j : i;
      if (!constant_or_empty(diagram, earlier, later)) condition = false;
      pair_detail.push_back({{"i", i + 1},
                             {"j", j + 1},
                             {"link", to_string(linking_number(diagram, i, j))},
                             {"under_sign_i_first", constant_under_sign(diagram, i, j)},
                             {"under_sign_j_first", constant_under_sign(diagram, j, i)},
                             {"constant_i_first", constant_or_empty(diagram, i, j)},
                             {"constant_j_first", constant_or_empty(diagram, j, i)}});
    }

  VerificationReport report;
  report.claim = "linking_vs_ld";
  report.lhs = sum_twice / 2.0;
  report.rhs = static_cast<double>(ld.value);
  report.equality = equality;
  report.holds = inequality && parity && (equality == condition);
  report.witnesses = {{"sum_abs_linking", sum_twice / 2.0},
                      {"ld", ld.value},
                      {"integral", integral},
                      {"parity_match", parity},
                      {"constant_signs_at_min_order", condition},
                      {"min_order", order_json(ld.witness_order)},
                      {"pairs", pair_detail}};
  return report;
}

VerificationReport verify_total_linking_shortcut(const LinkDiagram& diagram,
                                                 const WarpingOptions& opts) {
  const int r = diagram.component_count();
  if (r > opts.max_r)
    throw DiagramError("diagram has " + std::to_string(r) +
                       " components; order enumeration is capped at max_r=" +
                       std::to_string(opts.max_r));
  const HalfInteger expected = total_linking_number(diagram);

  VerificationReport report;
  report.claim = "total_linking_shortcut";
  report.lhs = expected.value();
  if (!expected.is_integer()) {
    report.holds = false;
    report.witnesses = {{"note", "total linking number is not an integer; "
                                 "the diagram cannot come from closed curves"}};
    return report;
  }

  bool all_match = true;
  int orders_checked = 0;
  BaseSequence base = default_base(diagram);
  std::vector<int> order = base.order;
  do {
    base.order = order;
    ++orders_checked;
    if (total_linking_via_warping(diagram, base) != expected.twice / 2) all_match = false;
  } while (std::next_permutation(order.begin(), order.end()));

  report.rhs = expected.value();
  report.equality = all_match;
  report.holds = all_match;
  report.witnesses = {{"total_linking", expected.twice / 2},
                      {"orders_checked", orders_checked}};
  return report;
}

VerificationReport verify_unlinking_bounds(const LinkDiagram& diagram,
                                           const WarpingOptions& opts) {
  const long long lower_twice = sum_abs_linking_twice(diagram);
  const int d = min_warping_degree(diagram, opts).value;
  const int d_rev = min_warping_degree(reverse_all(diagram), opts).value;
  const int upper = std::min(d, d_rev);

  VerificationReport report;
  report.claim = "unlinking_bounds";
  report.lhs = lower_twice / 2.0;
  report.rhs = upper;
  report.equality = (lower_twice == 2ll * upper);
  report.holds = lower_twice <= 2ll * upper;
  report.witnesses = {{"unlinking_lower", lower_twice / 2.0},
                      {"d", d},
                      {"d_reversed", d_rev}};
  return report;
}

VerificationReport verify_unoriented_bound(const LinkDiagram& diagram,
                                           const WarpingOptions& opts) {
  const int r = diagram.component_count();
  const int c = diagram.crossing_count();
  VerificationReport report;
  report.claim = "unoriented_bound";
  if (r == 1 && c == 0) {
    report.holds = true;
    report.witnesses = {{"skipped", "crossing-free knot diagram"}};
    return report;
  }
  const int du = unoriented_warping_degree(diagram, opts);
  report.lhs = du;
  if (r == 1) {
    report.rhs = (c - 1) / 2.0;
    report.equality = (2 * du == c - 1);
    report.holds = 2 * du <= c - 1;
    report.witnesses = {{"unoriented_warping_degree", du}, {"crossings", c}};
    return report;
  }
  bool no_self = true;
  for (int i = 0; i < r; ++i)
    if (diagram.has_self_crossing(i)) no_self = false;
  const auto condition = balanced_alternating(diagram);
  const bool all_balanced =
      std::all_of(condition.pairs.begin(), condition.pairs.end(),
                  [](const PairBalance& p) { return p.balanced(); });
  report.rhs = c / 2.0;
  report.equality = (2 * du == c);
  report.holds = (2 * du <= c) && (*report.equality == (no_self && all_balanced));
  report.witnesses = {{"unoriented_warping_degree", du},
                      {"crossings", c},
                      {"simple_closed_components", no_self},
                      {"all_pairs_balanced", all_balanced}};
  return report;
}

long long census_min(const std::vector<LinkDiagram>& diagrams, CensusMetric metric,
                     const WarpingOptions& opts) {
  if (diagrams.empty()) throw DiagramError("census needs at least one diagram");

  int c_min = diagrams[0].crossing_count();
  for (const LinkDiagram& d : diagrams) c_min = std::min(c_min, d.crossing_count());

  long long best = -1;
  for (const LinkDiagram& d : diagrams) {
    if (metric == CensusMetric::WarpingSum && d.crossing_count() != c_min) continue;
    long long v = 0;
    switch (metric) {
      case CensusMetric::WarpingSum:
      case CensusMetric::WarpingSumSelf:
        v = min_warping_degree(d, opts).value +
            min_warping_degree(reverse_all(d), opts).value;
        if (metric == CensusMetric::WarpingSumSelf) v += self_crossing_component_count(d);
        break;
      case CensusMetric::SelfCrossings:
        v = self_crossing_component_count(d);
        break;
    }
    if (best < 0 || v < best) best = v;
  }
  return best;
}

}  // namespace warpdeg
