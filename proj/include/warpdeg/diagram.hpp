#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace warpdeg {

// Raised for malformed input: bad tokens, inconsistent crossing data,
// out-of-range arguments coming from user-supplied values.
class DiagramError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Strand : std::uint8_t { Over, Under };

inline Strand opposite(Strand s) {
  return s == Strand::Over ? Strand::Under : Strand::Over;
}

// One visit of a component to a crossing.
struct Passage {
  int crossing_id = 0;  // canonical id, 1..c
  Strand strand = Strand::Over;
  int sign = +1;  // +1 or -1, shared by both passages of the crossing
  friend bool operator==(const Passage&, const Passage&) = default;
};

// Location of a passage inside the diagram.
struct Site {
  int component = -1;  // 0-based component index
  int index = -1;      // position in that component's cyclic word
  friend bool operator==(const Site&, const Site&) = default;
};

struct Crossing {
  int id = 0;
  int sign = +1;
  Site over;
  Site under;
  bool is_self() const { return over.component == under.component; }
};

// An oriented link diagram stored as one signed Gauss word per component.
// Construction validates the code (every crossing id appears exactly twice,
// once over and once under, with equal signs) and renumbers crossings
// 1..c in first-appearance order. Instances are immutable afterwards.
class LinkDiagram {
public:
  static LinkDiagram from_components(std::vector<std::vector<Passage>> words);

  int component_count() const { return static_cast<int>(words_.size()); }
  const std::vector<Passage>& word(int comp) const;
  const std::vector<std::vector<Passage>>& words() const { return words_; }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int id) const;

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int linking_crossing_count() const { return lc_; }

  int self_crossing_count(int comp) const;
  bool has_self_crossing(int comp) const { return self_crossing_count(comp) > 0; }

  // Number of crossings between components i and j (i != j).
  int inter_crossing_count(int i, int j) const;
  // Crossings of the (i, j) pair at which component i is the under strand.
  int under_crossing_count(int i, int j) const;
  // Sum of signs over all crossings between i and j.
  int pair_sign_sum(int i, int j) const;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.words_ == b.words_;
  }

private:
  LinkDiagram() = default;

  std::vector<std::vector<Passage>> words_;
  std::vector<Crossing> crossings_;   // index id-1
  std::vector<int> self_counts_;      // per component
  int lc_ = 0;
};

// A traversal order of the components plus one base position per component.
// positions[comp] means the base point sits immediately before
// word(comp)[positions[comp]]; a crossing-free component uses position 0.
struct BaseSequence {
  std::vector<int> order;      // permutation of 0..r-1
  std::vector<int> positions;  // indexed by component, not by order slot
  friend bool operator==(const BaseSequence&, const BaseSequence&) = default;
};

BaseSequence default_base(const LinkDiagram& diagram);
void validate_base(const LinkDiagram& diagram, const BaseSequence& base);

// Text format: one component per line, tokens O<id><+|-> / U<id><+|->,
// '#' starts a comment line, blank lines are skipped, and a line holding
// the single token '.' is a crossing-free component.
LinkDiagram parse_diagram(std::string_view text);
std::string serialize_diagram(const LinkDiagram& diagram);

LinkDiagram reverse_all(const LinkDiagram& diagram);
LinkDiagram reverse_component(const LinkDiagram& diagram, int comp);
LinkDiagram subdiagram(const LinkDiagram& diagram, const std::vector<int>& comps);

// Switch over/under (and hence the sign) at the listed crossings.
LinkDiagram change_crossings(const LinkDiagram& diagram, const std::vector<int>& crossing_ids);

// Non-fatal oddities: pairs crossing an odd number of times cannot come from
// a diagram of closed curves, but the code is still accepted.
std::vector<std::string> validation_warnings(const LinkDiagram& diagram);

}  // namespace warpdeg
