#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "warpdeg/generators.hpp"
#include "warpdeg/verify.hpp"

using namespace warpdeg;
namespace fx = warpdeg::fixtures;

namespace {

// Realizable closed-curve diagrams for the sign-sensitive checks.
std::vector<LinkDiagram> braid_corpus() {
  std::vector<LinkDiagram> corpus;
  for (int p = 2; p <= 7; ++p) corpus.push_back(torus_2p(p));
  for (int n = 2; n <= 4; ++n) corpus.push_back(chain_link(n));
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const int strands = 2 + static_cast<int>(seed % 3);
    corpus.push_back(braid_closure(random_braid_word(seed, 8, strands), strands));
  }
  return corpus;
}

}  // namespace

TEST_CASE("linking numbers") {
  const LinkDiagram hopf = fx::make(fx::kHopf);
  CHECK(linking_number(hopf, 0, 1).twice == 2);
  CHECK(linking_number(reverse_component(hopf, 1), 0, 1).twice == -2);
  CHECK(linking_number(fx::make(".\n."), 0, 1).twice == 0);
  CHECK_THROWS_AS(linking_number(hopf, 1, 1), DiagramError);
  CHECK(to_string(HalfInteger{3}) == "3/2");
  CHECK(to_string(HalfInteger{-4}) == "-2");
}

TEST_CASE("total linking through warping points") {
  const LinkDiagram hopf = fx::make(fx::kHopf);
  CHECK(total_linking_via_warping(hopf, default_base(hopf)) == 1);

  const LinkDiagram cancelling = fx::make(fx::kStackedCancelling);
  CHECK(total_linking_via_warping(cancelling, default_base(cancelling)) == 0);
  BaseSequence swapped = default_base(cancelling);
  swapped.order = {1, 0};
  CHECK(total_linking_via_warping(cancelling, swapped) == 0);

  const LinkDiagram split_union = fx::make("O1+ U1+\n.");
  CHECK(total_linking_via_warping(split_union, default_base(split_union)) == 0);

  for (const LinkDiagram& d : braid_corpus()) {
    const auto report = verify_total_linking_shortcut(d);
    CHECK(report.holds);
  }
}

TEST_CASE("knot crossing bound") {
  const auto trefoil = verify_knot_crossing_bound(fx::make(fx::kTrefoil));
  CHECK(trefoil.holds);
  CHECK(trefoil.lhs == 3);
  CHECK(trefoil.rhs == 3);
  CHECK(*trefoil.equality);
  CHECK(trefoil.witnesses["alternating"] == true);

  const auto loose = verify_knot_crossing_bound(fx::make(fx::kNonAlternating3));
  CHECK(loose.holds);
  CHECK(loose.lhs < loose.rhs);
  CHECK(!*loose.equality);

  const auto kink = verify_knot_crossing_bound(fx::make(fx::kKink));
  CHECK(kink.holds);
  CHECK(kink.lhs == 1);
  CHECK(*kink.equality);

  CHECK_THROWS_AS(verify_knot_crossing_bound(fx::make(fx::kHopf)), DiagramError);
  CHECK_THROWS_AS(verify_knot_crossing_bound(fx::make(".")), DiagramError);
}

TEST_CASE("balanced alternating condition") {
  CHECK(balanced_alternating(fx::make(fx::kHopf)).value);
  CHECK(balanced_alternating(fx::make(fx::kTrefoil)).value);

  const auto cable = balanced_alternating(fx::make(fx::kUnbalancedCable));
  CHECK(!cable.value);
  REQUIRE(cable.pairs.size() == 1);
  CHECK(cable.pairs[0].under_i == 2);
  CHECK(cable.pairs[0].under_j == 4);

  const auto tangled = balanced_alternating(fx::make(fx::kNonAlternating3));
  CHECK(!tangled.value);
  CHECK(tangled.non_alternating == std::vector<int>{0});
}

TEST_CASE("link crossing bound") {
  const auto hopf = verify_link_crossing_bound(fx::make(fx::kHopf));
  CHECK(hopf.holds);
  CHECK(hopf.lhs == 2);
  CHECK(hopf.rhs == 2);
  CHECK(*hopf.equality);

  const auto split_union = verify_link_crossing_bound(fx::make("O1+ U2+ O3+ U1+ O2+ U3+\n."));
  CHECK(split_union.holds);
  CHECK(split_union.lhs == 3);
  CHECK(*split_union.equality);

  const auto cable = verify_link_crossing_bound(fx::make(fx::kUnbalancedCable));
  CHECK(cable.holds);
  CHECK(cable.lhs < cable.rhs);
  CHECK(!*cable.equality);
}

TEST_CASE("ld against lc") {
  const auto hopf = verify_ld_vs_lc(fx::make(fx::kHopf));
  CHECK(hopf.holds);
  CHECK(*hopf.equality);

  const auto cable = verify_ld_vs_lc(fx::make(fx::kUnbalancedCable));
  CHECK(cable.holds);
  CHECK(!*cable.equality);
  CHECK(cable.witnesses["reversal_identity_all_orders"] == true);
}

TEST_CASE("self crossing bound applies only to all-self diagrams") {
  const auto trefoil = verify_self_crossing_bound(fx::make(fx::kTrefoil));
  CHECK(trefoil.holds);
  CHECK(*trefoil.equality);

  const auto hopf = verify_self_crossing_bound(fx::make(fx::kHopf));
  CHECK(hopf.holds);
  CHECK(!hopf.equality.has_value());
  CHECK(hopf.witnesses.contains("skipped"));
}

TEST_CASE("orientation invariance of the two-way warping sum") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const LinkDiagram d = random_diagram(seed, 9, 1 + static_cast<int>(seed % 3));
    CHECK(verify_orientation_invariance(d).holds);
  }
}

TEST_CASE("linking numbers against ld") {
  const auto hopf = verify_linking_vs_ld(fx::make(fx::kHopf));
  CHECK(hopf.holds);
  CHECK(*hopf.equality);
  CHECK(hopf.witnesses["constant_signs_at_min_order"] == true);

  const auto mixed = verify_linking_vs_ld(fx::make(fx::kMixedSignPair));
  CHECK(mixed.holds);
  CHECK(mixed.lhs == 0);
  CHECK(mixed.rhs == 2);
  CHECK(!*mixed.equality);
  CHECK(mixed.witnesses["constant_signs_at_min_order"] == false);

  const auto none = verify_linking_vs_ld(fx::make(".\n."));
  CHECK(none.holds);
  CHECK(*none.equality);

  for (const LinkDiagram& d : braid_corpus()) CHECK(verify_linking_vs_ld(d).holds);
}

TEST_CASE("unlinking bounds") {
  const auto hopf = verify_unlinking_bounds(fx::make(fx::kHopf));
  CHECK(hopf.holds);
  CHECK(hopf.lhs == 1.0);
  CHECK(hopf.rhs == 1.0);
  for (const LinkDiagram& d : braid_corpus()) CHECK(verify_unlinking_bounds(d).holds);
}

TEST_CASE("unoriented bound") {
  const auto trefoil = verify_unoriented_bound(fx::make(fx::kTrefoil));
  CHECK(trefoil.holds);
  CHECK(trefoil.lhs == 1.0);
  CHECK(trefoil.rhs == 1.0);

  const auto hopf = verify_unoriented_bound(fx::make(fx::kHopf));
  CHECK(hopf.holds);
  CHECK(*hopf.equality);  // both circles simple and balanced

  const auto cable = verify_unoriented_bound(fx::make(fx::kUnbalancedCable));
  CHECK(cable.holds);
  CHECK(!*cable.equality);

  const auto circle = verify_unoriented_bound(fx::make("."));
  CHECK(circle.holds);

  for (const LinkDiagram& d : braid_corpus()) CHECK(verify_unoriented_bound(d).holds);
}

TEST_CASE("reports stay consistent on random abstract codes") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const LinkDiagram d = random_diagram(seed, 10, 1 + static_cast<int>(seed % 3));
    CHECK(verify_link_crossing_bound(d).holds);
    CHECK(verify_ld_vs_lc(d).holds);
    CHECK(verify_self_crossing_bound(d).holds);
    CHECK(verify_unoriented_bound(d).holds);
  }
}

TEST_CASE("census minimum over a diagram set") {
  const LinkDiagram trefoil = fx::make(fx::kTrefoil);
  CHECK(census_min({trefoil}, CensusMetric::WarpingSumSelf) == 3);
  CHECK(census_min({trefoil}, CensusMetric::SelfCrossings) == 1);

  // The clasped trefoil fixture: 2 + 2 + 1 at five crossings.
  const LinkDiagram tc = fx::make(fx::kTrefoilWithCircle);
  CHECK(census_min({tc}, CensusMetric::WarpingSumSelf) == 5);

  // A monotone member bounds the set minimum from above.
  const LinkDiagram monotone = fx::make("O1+ O2+ U1+ U2+");
  CHECK(census_min({trefoil, monotone}, CensusMetric::WarpingSumSelf) <= 1);

  // The crossing-minimal restriction picks the trefoil, not the bigger code.
  CHECK(census_min({tc, trefoil}, CensusMetric::WarpingSum) == 2);

  CHECK_THROWS_AS(census_min({}, CensusMetric::WarpingSum), DiagramError);
}
