#include "warpdeg/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

namespace warpdeg {

namespace {

uint64_t pick(std::mt19937_64& rng, uint64_t n) { return n == 0 ? 0 : rng() % n; }

}  // namespace

LinkDiagram pretzel_odd(const std::vector<int>& entries) {
  const int m = static_cast<int>(entries.size());
  if (m == 0 || m % 2 == 0)
    throw DiagramError("pretzel of odd type needs an odd number of columns, got " +
                       std::to_string(m));
  std::vector<int> sizes(m), col_sign(m), first_id(m);
  int c = 0;
  for (int i = 0; i < m; ++i) {
    const int n = std::abs(entries[i]);
    if (n == 0 || n % 2 == 0)
      throw DiagramError("pretzel of odd type needs odd column sizes, got " +
                         std::to_string(entries[i]));
    sizes[i] = n;
    col_sign[i] = entries[i] > 0 ? +1 : -1;
    first_id[i] = c + 1;
    c += n;
  }

  // Letter met by the downward strand at crossing k (1-based) of column i.
  auto down_strand = [&](int i, int k) {
    const bool under_first = col_sign[i] > 0;
    return (k % 2 == 1) == under_first ? Strand::Under : Strand::Over;
  };
  auto passage = [&](int i, int k, bool downward) {
    const Strand s = downward ? down_strand(i, k) : opposite(down_strand(i, k));
    return Passage{first_id[i] + k - 1, s, col_sign[i]};
  };

  // First pass: down the odd columns, up the even ones; second pass the
  // other way around. Upward passes meet the column bottom-first.
  std::vector<Passage> word;
  word.reserve(2 * c);
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < m; ++i) {
      const bool downward = (i % 2 == 0) == (pass == 0);
      if (downward)
        for (int k = 1; k <= sizes[i]; ++k) word.push_back(passage(i, k, true));
      else
        for (int k = sizes[i]; k >= 1; --k) word.push_back(passage(i, k, false));
    }
  return LinkDiagram::from_components({std::move(word)});
}

LinkDiagram torus_2p(int p) {
  if (p < 1) throw DiagramError("torus braid needs p >= 1, got " + std::to_string(p));
  return braid_closure(std::vector<int>(p, 1), 2);
}

LinkDiagram chain_link(int n) {
  if (n < 1) throw DiagramError("chain needs at least one component");
  std::vector<std::vector<Passage>> words(n);
  for (int k = 0; k < n - 1; ++k) {
    const int a = 2 * k + 1, b = 2 * k + 2;
    words[k].push_back({a, Strand::Over, +1});
    words[k].push_back({b, Strand::Under, +1});
    words[k + 1].push_back({a, Strand::Under, +1});
    words[k + 1].push_back({b, Strand::Over, +1});
  }
  return LinkDiagram::from_components(std::move(words));
}

LinkDiagram braid_closure(const std::vector<int>& word, int strands) {
  if (strands < 1) throw DiagramError("braid needs at least one strand");
  std::vector<int> at(strands);  // position -> strand currently there
  std::iota(at.begin(), at.end(), 0);
  std::vector<std::vector<Passage>> records(strands);

  for (int t = 0; t < static_cast<int>(word.size()); ++t) {
    const int g = word[t];
    const int q = std::abs(g) - 1;
    if (g == 0 || q + 1 >= strands)
      throw DiagramError("braid letter " + std::to_string(g) + " out of range for " +
                         std::to_string(strands) + " strands");
    const int top = at[q], bottom = at[q + 1];
    const int sign = g > 0 ? +1 : -1;
    records[top].push_back({t + 1, g > 0 ? Strand::Over : Strand::Under, sign});
    records[bottom].push_back({t + 1, g > 0 ? Strand::Under : Strand::Over, sign});
    std::swap(at[q], at[q + 1]);
  }

  // Closing the braid joins each end position to the strand starting there.
  std::vector<int> successor(strands);
  for (int q = 0; q < strands; ++q) successor[at[q]] = q;
  std::vector<std::vector<Passage>> words;
  std::vector<bool> used(strands, false);
  for (int s = 0; s < strands; ++s) {
    if (used[s]) continue;
    std::vector<Passage> component;
    for (int t = s; !used[t]; t = successor[t]) {
      used[t] = true;
      component.insert(component.end(), records[t].begin(), records[t].end());
    }
    words.push_back(std::move(component));
  }
  return LinkDiagram::from_components(std::move(words));
}

LinkDiagram random_diagram(std::uint64_t seed, int c_max, int r) {
  if (r < 1) throw DiagramError("random diagram needs at least one component");
  if (c_max < 0) throw DiagramError("negative crossing budget");
  std::mt19937_64 rng(seed);
  const int c = static_cast<int>(pick(rng, static_cast<uint64_t>(c_max) + 1));

  std::vector<int> lengths(r, 0);
  std::vector<Site> slots(2 * c);
  for (int t = 0; t < 2 * c; ++t) {
    const int comp = static_cast<int>(pick(rng, r));
    slots[t] = Site{comp, lengths[comp]++};
  }
  for (int t = 2 * c - 1; t > 0; --t)
    std::swap(slots[t], slots[pick(rng, static_cast<uint64_t>(t) + 1)]);

  std::vector<std::vector<Passage>> words(r);
  for (int i = 0; i < r; ++i) words[i].resize(lengths[i]);
  for (int x = 0; x < c; ++x) {
    const Site a = slots[2 * x], b = slots[2 * x + 1];
    const bool a_over = pick(rng, 2) == 0;
    const int sign = pick(rng, 2) == 0 ? +1 : -1;
    words[a.component][a.index] = {x + 1, a_over ? Strand::Over : Strand::Under, sign};
    words[b.component][b.index] = {x + 1, a_over ? Strand::Under : Strand::Over, sign};
  }
  return LinkDiagram::from_components(std::move(words));
}

std::vector<int> random_braid_word(std::uint64_t seed, int length, int strands) {
  if (length > 0 && strands < 2)
    throw DiagramError("braid words need at least two strands");
  std::mt19937_64 rng(seed);
  std::vector<int> word(length);
  for (int t = 0; t < length; ++t) {
    const int g = 1 + static_cast<int>(pick(rng, strands - 1));
    word[t] = pick(rng, 2) == 0 ? g : -g;
  }
  return word;
}

}  // namespace warpdeg
