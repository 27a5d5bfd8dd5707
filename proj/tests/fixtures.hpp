#pragma once

// Shared diagram fixtures for the test suites.

#include <string>

#include "warpdeg/diagram.hpp"

namespace warpdeg::fixtures {

inline constexpr const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
inline constexpr const char* kHopf = "O1+ U2+\nU1+ O2+";
inline constexpr const char* kKink = "O1+ U1+";
inline constexpr const char* kNonAlternating3 = "O1+ O2+ U1+ O3+ U2+ U3+";

// Three circles, pairwise crossing twice; the matrix at the identity order
// is (0 1 0 / 1 0 0 / 2 2 0) and at order (3,1,2) it is (0 2 2 / 0 0 1 / 0 1 0).
inline constexpr const char* kThreeCircleMatrixFixture =
    "U1+ O2+ O3+ O4+\n"
    "O1+ U2+ O5+ O6+\n"
    "U3+ U4+ U5+ U6+";

// Trefoil with a circle clasped around one strand: c = 5 and the warping
// sums come out to 2 + 2 + 1.
inline constexpr const char* kTrefoilWithCircle =
    "O1+ U2+ O3+ U1+ O2+ U3+ O4+ U5+\n"
    "U4+ O5+";

// Pair with one side always on top and cancelling signs: stacked, linking
// number zero, four inter-crossings.
inline constexpr const char* kStackedCancelling =
    "O1+ O2+ O3- O4-\n"
    "U1+ U2+ U3- U4-";

// Pair with mixed-sign under-crossings on both sides: linking number zero,
// two warping crossings whichever side goes first.
inline constexpr const char* kMixedSignPair =
    "U1+ U2- O3+ O4-\n"
    "O1+ O2- U3+ U4-";

// Unbalanced pair: one side runs under twice and over four times.
inline constexpr const char* kUnbalancedCable =
    "U1+ U2+ O3+ O4+ O5+ O6+\n"
    "O1+ O2+ U3+ U4+ U5+ U6+";

// Three components, every pair crossing four times with cancelling signs,
// one pair lopsided (1 under vs 3): the order minimum is 5 while every
// pairwise linking number is zero.
inline constexpr const char* kWideGapSplitFixture =
    "U1+ U2- O3+ O4- U5+ U6- O7+ O8-\n"
    "O1+ O2- U3+ U4- U9+ O10- O11+ O12-\n"
    "O5+ O6- U7+ U8- O9+ U10- U11+ U12-";

inline LinkDiagram make(const std::string& text) { return parse_diagram(text); }

}  // namespace warpdeg::fixtures
