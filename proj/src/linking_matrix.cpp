#include "warpdeg/linking_matrix.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "warpdeg/ou_word.hpp"

namespace warpdeg {

LinkingMatrix LinkingMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const int r = static_cast<int>(rows.size());
  LinkingMatrix m(r);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != r)
      throw DiagramError("matrix is not square: row " + std::to_string(i + 1) + " has " +
                         std::to_string(rows[i].size()) + " entries, expected " +
                         std::to_string(r));
    for (int j = 0; j < r; ++j) {
      if (rows[i][j] < 0)
        throw DiagramError("matrix entry (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ") is negative");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

LinkingMatrix build_linking_matrix(const LinkDiagram& diagram, const BaseSequence& base) {
  validate_base(diagram, base);
  const int r = diagram.component_count();
  LinkingMatrix m(r);
  for (int k = 0; k < r; ++k) {
    // Diagonal: the component's own minimal warping degree.
    m.at(k, k) = knot_warping_degree(subdiagram(diagram, {base.order[k]}), 0);
    for (int l = 0; l < r; ++l)
      if (k != l)
        m.at(k, l) = diagram.under_crossing_count(base.order[k], base.order[l]);
  }
  return m;
}

LinkingMatrix conjugate_adjacent(const LinkingMatrix& m, int k) {
  const int r = m.size();
  if (k < 1 || k > r - 1)
    throw DiagramError("transposition index " + std::to_string(k) +
                       " out of range 1.." + std::to_string(r - 1));
  auto sigma = [k](int i) {
    if (i == k - 1) return k;
    if (i == k) return k - 1;
    return i;
  };
  LinkingMatrix out(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out.at(i, j) = m.at(sigma(i), sigma(j));
  return out;
}

long long upper_triangular_sum(const LinkingMatrix& m) {
  long long total = 0;
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j) total += m.at(i, j);
  return total;
}

namespace {

long long sum_for_order(const LinkingMatrix& m, const std::vector<int>& order) {
  long long total = 0;
  const int r = m.size();
  for (int k = 0; k < r; ++k)
    for (int l = k + 1; l < r; ++l) total += m.at(order[k], order[l]);
  return total;
}

void require_budget(const LinkingMatrix& m, int max_r) {
  if (m.size() > max_r)
    throw DiagramError("matrix size " + std::to_string(m.size()) +
                       " exceeds the enumeration cap max_r=" + std::to_string(max_r));
}

void consider(MatrixLdMinimum& best, long long value, const std::vector<int>& order) {
  if (value < best.value || (value == best.value && order < best.order))
    best = {value, order};
}

// One branch per choice of k_n: either leave slots n..r alone or rotate the
// slot-n entry out by the adjacent transpositions k_n, k_n-1, ..., n.
void adjacent_walk(const LinkingMatrix& m, const std::vector<int>& order, long long sum,
                   int n, MatrixLdMinimum& best) {
  const int r = m.size();
  if (n >= r) {
    consider(best, sum, order);
    return;
  }
  adjacent_walk(m, order, sum, n + 1, best);
  for (int k = n; k <= r - 1; ++k) {
    LinkingMatrix mm = m;
    std::vector<int> oo = order;
    long long ss = sum;
    for (int t = k; t >= n; --t) {
      ss = ss - mm.at(t - 1, t) + mm.at(t, t - 1);
      mm = conjugate_adjacent(mm, t);
      std::swap(oo[t - 1], oo[t]);
    }
    adjacent_walk(mm, oo, ss, n + 1, best);
  }
}

}  // namespace

MatrixLdMinimum minimize_ld(const LinkingMatrix& m, int max_r) {
  require_budget(m, max_r);
  std::vector<int> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  MatrixLdMinimum best{sum_for_order(m, order), order};
  while (std::next_permutation(order.begin(), order.end())) {
    const long long v = sum_for_order(m, order);
    if (v < best.value) best = {v, order};
  }
  return best;
}

MatrixLdMinimum minimize_ld_adjacent_walk(const LinkingMatrix& m, int max_r) {
  require_budget(m, max_r);
  std::vector<int> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  MatrixLdMinimum best{LLONG_MAX, {}};
  adjacent_walk(m, order, upper_triangular_sum(m), 1, best);
  return best;
}

}  // namespace warpdeg
