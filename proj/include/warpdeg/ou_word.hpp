#pragma once

#include <string>
#include <string_view>

#include "warpdeg/diagram.hpp"

namespace warpdeg {

// The over/under word of a one-component diagram read from the given base
// position: one letter ('o' or 'u') per passage, in traversal order.
std::string ou_word(const LinkDiagram& knot, int base = 0);

// Delete "ou" factors until none remains. The result has the shape u^k o^m
// and does not depend on the deletion order; implemented as one stack pass.
std::string normalize_ou_word(std::string_view word);

// Minimal warping degree of a one-component diagram: the based count of
// crossings met first as under-crossings, minus half the normalized word
// length. Independent of the base position.
int knot_warping_degree(const LinkDiagram& knot, int base = 0);

// Same formula applied to a raw based count and word, for fixture-driven use.
int knot_warping_degree_from(int based_count, std::string_view word);

}  // namespace warpdeg
