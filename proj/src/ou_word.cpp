#include "warpdeg/ou_word.hpp"

#include <cassert>
#include <unordered_set>

namespace warpdeg {

namespace {

void require_knot(const LinkDiagram& d, const char* who) {
  if (d.component_count() != 1)
    throw DiagramError(std::string(who) + " needs a one-component diagram, got " +
                       std::to_string(d.component_count()) + " components");
}

// Crossings whose first encounter from `base` is the under passage.
int based_under_first_count(const LinkDiagram& knot, int base) {
  const auto& word = knot.word(0);
  const int len = static_cast<int>(word.size());
  std::unordered_set<int> seen;
  int count = 0;
  for (int t = 0; t < len; ++t) {
    const Passage& p = word[(base + t) % len];
    if (seen.insert(p.crossing_id).second && p.strand == Strand::Under) ++count;
  }
  return count;
}

int degree_at(const LinkDiagram& knot, int base) {
  const int reduced = static_cast<int>(normalize_ou_word(ou_word(knot, base)).size());
  return based_under_first_count(knot, base) - reduced / 2;
}

}  // namespace

std::string ou_word(const LinkDiagram& knot, int base) {
  require_knot(knot, "ou_word");
  const auto& word = knot.word(0);
  const int len = static_cast<int>(word.size());
  if (len == 0) {
    if (base != 0) throw DiagramError("base position out of range for empty component");
    return {};
  }
  if (base < 0 || base >= len)
    throw DiagramError("base position " + std::to_string(base) + " out of range");
  std::string letters;
  letters.reserve(len);
  for (int t = 0; t < len; ++t)
    letters += word[(base + t) % len].strand == Strand::Over ? 'o' : 'u';
  return letters;
}

std::string normalize_ou_word(std::string_view word) {
  std::string stack;
  stack.reserve(word.size());
  for (char c : word) {
    if (c != 'o' && c != 'u')
      throw DiagramError(std::string("letter '") + c + "' is not 'o' or 'u'");
    if (c == 'u' && !stack.empty() && stack.back() == 'o')
      stack.pop_back();
    else
      stack += c;
  }
  return stack;
}

int knot_warping_degree(const LinkDiagram& knot, int base) {
  require_knot(knot, "knot_warping_degree");
  const int len = static_cast<int>(knot.word(0).size());
  const int d = degree_at(knot, len == 0 ? 0 : base);
#ifndef NDEBUG
  // The value is base-independent; spot-check two other bases.
  if (len > 0) {
    assert(degree_at(knot, (base + len / 3) % len) == d);
    assert(degree_at(knot, (base + 2 * len / 3) % len) == d);
  }
#endif
  return d;
}

int knot_warping_degree_from(int based_count, std::string_view word) {
  const std::string reduced = normalize_ou_word(word);
  if (reduced.size() % 2 != 0)
    throw DiagramError("normalized word has odd length " + std::to_string(reduced.size()));
  return based_count - static_cast<int>(reduced.size()) / 2;
}

}  // namespace warpdeg
