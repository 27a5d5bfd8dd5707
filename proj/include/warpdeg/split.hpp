#pragma once

#include <optional>
#include <string>
#include <vector>

#include "warpdeg/diagram.hpp"
#include "warpdeg/verify.hpp"
#include "warpdeg/warping.hpp"

namespace warpdeg {

struct CrossingChangeSet {
  std::vector<int> crossing_ids;
  std::string description;
};

// Certified bracket for a crossing-change distance. The lower bound comes
// from linking numbers, the upper bound from an explicit change set whose
// result passes a structural test (stacked, or one side of a bipartition
// completely over the other). Exact only when the two meet.
struct BoundInterval {
  long long lower = 0;
  long long upper = 0;
  std::string lower_certificate;
  CrossingChangeSet upper_certificate;
  bool exact() const { return lower == upper; }
};

// Non-self crossing changes until the diagram is stacked, i.e. shows a
// completely splittable link. Lower: every pair's linking number must reach
// zero and each change moves one pair by one.
BoundInterval complete_split_bounds(const LinkDiagram& diagram,
                                    const WarpingOptions& opts = {});

// Non-self crossing changes until some nonempty proper sub-collection of
// components passes entirely over the rest. Bounds the splittable-link
// distances (with or without self changes allowed).
BoundInterval partial_split_bounds(const LinkDiagram& diagram,
                                   const WarpingOptions& opts = {});

// Some bipartition of the components has every crossing between the two
// sides with the same side on top.
bool is_bipartition_split(const LinkDiagram& diagram);

// Smallest set of non-self crossing changes (searched by size) after which
// the diagram is stacked (complete) or bipartition-split (partial).
// Only run for small linking crossing counts; nullopt when no set up to
// `max_size` works.
std::optional<std::vector<int>> exhaustive_split_search(const LinkDiagram& diagram,
                                                        bool complete, int max_size,
                                                        const WarpingOptions& opts = {});

// Chain of inequalities tying the splitting distances to ld, lc and c,
// checked on the certified bounds.
VerificationReport split_chain_check(const LinkDiagram& diagram,
                                     const WarpingOptions& opts = {});

}  // namespace warpdeg
