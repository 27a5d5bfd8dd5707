#pragma once

#include <cstdint>
#include <vector>

#include "warpdeg/diagram.hpp"

namespace warpdeg {

// Pretzel knot diagram with an odd number of vertical twist columns, each
// holding an odd number of same-handed crossings; entries are the signed
// column sizes. Convention: the single circuit runs down the odd columns and
// up the even ones, then back; within a column with positive entry the
// downward strand meets crossings under, over, under, ... from the top (the
// opposite for a negative entry), and the stored crossing sign is the entry
// sign. With all entries of one sign the diagram is alternating.
LinkDiagram pretzel_odd(const std::vector<int>& entries);

// Closure of the two-strand braid with p positive crossings: a knot for odd
// p, a two-component link for even p, alternating either way.
LinkDiagram torus_2p(int p);

// n unknotted circles in a row, neighbours clasped with two positive
// crossings (pairwise linking number one).
LinkDiagram chain_link(int n);

// Closure of a braid word on the given number of strands. Letters are
// nonzero integers: letter g crosses the strand at position |g| over (g > 0)
// or under (g < 0) its right neighbour. Components follow the cycles of the
// strand permutation; every closure is a diagram of actual closed curves.
LinkDiagram braid_closure(const std::vector<int>& word, int strands);

// Uniform valid signed code: crossing count drawn from 0..c_max, the 2c
// passage slots spread over r components and paired up at random.
// Deterministic per seed; realizability is not enforced.
LinkDiagram random_diagram(std::uint64_t seed, int c_max, int r);

std::vector<int> random_braid_word(std::uint64_t seed, int length, int strands);

}  // namespace warpdeg
