#pragma once

#include <vector>

#include "warpdeg/diagram.hpp"

namespace warpdeg {

struct WarpingOptions {
  // Order minimization enumerates all r! component orders; reject larger r
  // instead of silently running forever.
  int max_r = 8;
};

// A crossing counted by the warping degree of a based diagram: either a
// self-crossing of `component_a` met first as an under-crossing, or a
// crossing between two components at which the earlier one (component_a)
// runs under the later one (component_b).
struct WarpingPoint {
  int crossing_id = 0;
  int component_a = 0;
  int component_b = 0;
  bool is_self() const { return component_a == component_b; }
  friend bool operator==(const WarpingPoint&, const WarpingPoint&) = default;
};

std::vector<WarpingPoint> warping_points(const LinkDiagram& diagram,
                                         const BaseSequence& base);

struct WarpingReport {
  std::vector<int> order;                // traversal order used
  std::vector<int> self_counts;          // per component, from its base position
  std::vector<std::vector<int>> between; // between[i][j], nonzero only when i precedes j
  int warping_degree = 0;                // total count
  int linking_warping_degree = 0;        // inter-component part only
};

WarpingReport warping_report(const LinkDiagram& diagram, const BaseSequence& base);

struct WarpingMinimum {
  int value = 0;
  BaseSequence witness;  // lexicographically smallest attaining (order, positions)
};

struct LinkingWarpingMinimum {
  int value = 0;
  std::vector<int> witness_order;
};

// Minimal warping degree over all base sequences. The self part and the
// order part minimize independently: self counts depend only on each
// component's own base position, pair counts only on the order.
WarpingMinimum min_warping_degree(const LinkDiagram& diagram,
                                  const WarpingOptions& opts = {});

// Minimal inter-component warping count over all component orders.
LinkingWarpingMinimum min_linking_warping_degree(const LinkDiagram& diagram,
                                                 const WarpingOptions& opts = {});

// Minimum of min_warping_degree over all 2^r orientation assignments.
int unoriented_warping_degree(const LinkDiagram& diagram,
                              const WarpingOptions& opts = {});

// Minimal self warping count of one component over its base positions.
int component_warping_degree(const LinkDiagram& diagram, int comp);
int component_warping_degree_reversed(const LinkDiagram& diagram, int comp);

// Number of components with at least one self-crossing.
int self_crossing_component_count(const LinkDiagram& diagram);

bool is_monotone(const LinkDiagram& diagram, const BaseSequence& base);
bool is_stacked(const LinkDiagram& diagram, const BaseSequence& base);
bool is_stacked_diagram(const LinkDiagram& diagram, const WarpingOptions& opts = {});
bool is_self_crossing_diagram(const LinkDiagram& diagram);

}  // namespace warpdeg
