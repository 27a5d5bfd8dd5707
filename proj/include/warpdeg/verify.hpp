#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "warpdeg/diagram.hpp"
#include "warpdeg/warping.hpp"

namespace warpdeg {

// Linking numbers are half the signed crossing sum, so they live in (1/2)Z.
struct HalfInteger {
  long long twice = 0;
  bool is_integer() const { return twice % 2 == 0; }
  double value() const { return static_cast<double>(twice) / 2.0; }
  friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
};

std::string to_string(const HalfInteger& h);

// Half the signed sum over the crossings between components i and j.
HalfInteger linking_number(const LinkDiagram& diagram, int i, int j);

// Sum of linking_number over all unordered pairs.
HalfInteger total_linking_number(const LinkDiagram& diagram);

// Signed sum over the inter-component warping points of the based diagram.
// Order-independent and equal to the total linking number on diagrams of
// closed curves.
int total_linking_via_warping(const LinkDiagram& diagram, const BaseSequence& base);

// Cyclic over/under alternation of the component's self passages.
bool is_alternating_component(const LinkDiagram& diagram, int comp);

struct PairBalance {
  int i = 0, j = 0;     // component indices
  int under_i = 0;      // crossings of the pair where i runs under
  int under_j = 0;
  bool balanced() const { return under_i == under_j; }
};

// Every component alternating on its self-crossings, and every pair of
// components balanced (each side runs under as often as over).
struct BalancedAlternatingReport {
  bool value = false;
  std::vector<int> non_alternating;  // offending components (0-based)
  std::vector<PairBalance> pairs;    // all pairs, i < j
};

BalancedAlternatingReport balanced_alternating(const LinkDiagram& diagram);

// Outcome of one mechanical claim check. `holds` is recomputable from the
// numeric sides together with the flags stored in `witnesses`.
struct VerificationReport {
  std::string claim;
  bool holds = false;
  std::optional<bool> equality;
  double lhs = 0.0;
  double rhs = 0.0;
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
};

// d(D)+d(-D)+1 <= c(D) for a one-component diagram with at least one
// crossing; equality exactly for alternating diagrams.
VerificationReport verify_knot_crossing_bound(const LinkDiagram& knot,
                                              const WarpingOptions& opts = {});

// d(D)+d(-D)+sr(D) <= c(D); equality exactly for balanced alternating diagrams.
VerificationReport verify_link_crossing_bound(const LinkDiagram& diagram,
                                              const WarpingOptions& opts = {});

// 2*ld(D) <= lc(D) with equality iff all pairs balanced; also checks the
// reversal identity ld(a) + ld(reversed a) = lc over all orders.
VerificationReport verify_ld_vs_lc(const LinkDiagram& diagram,
                                   const WarpingOptions& opts = {});

// For diagrams where every component has a self-crossing:
// d(D)+d(-D)+r <= c(D), equality iff balanced alternating.
VerificationReport verify_self_crossing_bound(const LinkDiagram& diagram,
                                              const WarpingOptions& opts = {});

// d(D)+d(-D) takes the same value under every orientation assignment.
VerificationReport verify_orientation_invariance(const LinkDiagram& diagram,
                                                 const WarpingOptions& opts = {});

// sum |Link| <= ld(D) and sum |Link| == ld(D) (mod 2); equality iff at a
// minimizing order every pair's under-crossing signs are constant.
VerificationReport verify_linking_vs_ld(const LinkDiagram& diagram,
                                        const WarpingOptions& opts = {});

// total_linking_via_warping agrees with the pairwise linking sum for every
// component order.
VerificationReport verify_total_linking_shortcut(const LinkDiagram& diagram,
                                                 const WarpingOptions& opts = {});

// Lower bound for the unlinking number: sum |Link| <= min(d(D), d(-D)).
VerificationReport verify_unlinking_bounds(const LinkDiagram& diagram,
                                           const WarpingOptions& opts = {});

// Orientation-free warping degree against the crossing count:
// (c-1)/2 for knots with a crossing, c/2 for links, with the equality
// condition in the link case.
VerificationReport verify_unoriented_bound(const LinkDiagram& diagram,
                                           const WarpingOptions& opts = {});

enum class CensusMetric {
  WarpingSum,       // d(D)+d(-D), restricted to minimal-crossing members
  WarpingSumSelf,   // d(D)+d(-D)+sr(D) over the whole set
  SelfCrossings,    // sr(D) over the whole set
};

// Minimum of the chosen metric over a user-supplied set of diagrams of one
// and the same link (the caller asserts that).
long long census_min(const std::vector<LinkDiagram>& diagrams, CensusMetric metric,
                     const WarpingOptions& opts = {});

}  // namespace warpdeg
