#pragma once

#include <vector>

#include "warpdeg/diagram.hpp"

namespace warpdeg {

// Square matrix of nonnegative counts attached to an ordered diagram:
// entry (i, j), i != j, is the number of crossings between components i and
// j at which i runs under; entry (i, i) is the minimal self warping degree
// of component i. The inter-component part only depends on the order.
class LinkingMatrix {
public:
  LinkingMatrix() = default;
  explicit LinkingMatrix(int r) : r_(r), m_(static_cast<size_t>(r) * r, 0) {}

  static LinkingMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  int size() const { return r_; }
  long long at(int i, int j) const { return m_[static_cast<size_t>(i) * r_ + j]; }
  long long& at(int i, int j) { return m_[static_cast<size_t>(i) * r_ + j]; }

  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;

private:
  int r_ = 0;
  std::vector<long long> m_;
};

LinkingMatrix build_linking_matrix(const LinkDiagram& diagram, const BaseSequence& base);

// Swap rows and columns k, k+1 (k is 1-based, 1..r-1): the matrix of the
// order with those two components exchanged.
LinkingMatrix conjugate_adjacent(const LinkingMatrix& m, int k);

// The inter-component warping count of the order the matrix was built at.
long long upper_triangular_sum(const LinkingMatrix& m);

struct MatrixLdMinimum {
  long long value = 0;
  std::vector<int> order;  // order[k] = original row index placed at slot k
};

// Minimize the upper-triangular sum over all simultaneous row/column
// permutations. Direct enumeration in lexicographic order.
MatrixLdMinimum minimize_ld(const LinkingMatrix& m, int max_r = 8);

// Same minimum, reached by walking products of adjacent transpositions with
// the incremental update sum' = sum - m[k][k+1] + m[k+1][k]. Kept as an
// independent route; must agree with minimize_ld.
MatrixLdMinimum minimize_ld_adjacent_walk(const LinkingMatrix& m, int max_r = 8);

}  // namespace warpdeg
