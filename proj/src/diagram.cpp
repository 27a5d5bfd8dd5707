#include "warpdeg/diagram.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

namespace warpdeg {

namespace {

struct RawSite {
  int component;
  int index;
  Strand strand;
  int sign;
};

std::string strand_token(const Passage& p) {
  std::string tok(1, p.strand == Strand::Over ? 'O' : 'U');
  tok += std::to_string(p.crossing_id);
  tok += p.sign > 0 ? '+' : '-';
  return tok;
}

}  // namespace

LinkDiagram LinkDiagram::from_components(std::vector<std::vector<Passage>> words) {
  if (words.empty()) throw DiagramError("empty diagram: no components");

  // Collect both sites of every crossing, keyed by the incoming id.
  std::map<int, std::vector<RawSite>> sites;
  for (int ci = 0; ci < static_cast<int>(words.size()); ++ci) {
    for (int t = 0; t < static_cast<int>(words[ci].size()); ++t) {
      const Passage& p = words[ci][t];
      if (p.crossing_id <= 0)
        throw DiagramError("crossing id " + std::to_string(p.crossing_id) +
                           " is not a positive integer");
      if (p.sign != 1 && p.sign != -1)
        throw DiagramError("crossing " + std::to_string(p.crossing_id) +
                           " has sign " + std::to_string(p.sign) +
                           " (expected +1 or -1)");
      sites[p.crossing_id].push_back({ci, t, p.strand, p.sign});
    }
  }

  for (const auto& [id, occ] : sites) {
    if (occ.size() != 2)
      throw DiagramError("crossing " + std::to_string(id) + " appears " +
                         std::to_string(occ.size()) + " times (expected exactly 2)");
    if (occ[0].strand == occ[1].strand)
      throw DiagramError("crossing " + std::to_string(id) + " has two " +
                         (occ[0].strand == Strand::Over ? "over" : "under") +
                         " passages");
    if (occ[0].sign != occ[1].sign)
      throw DiagramError("sign mismatch at crossing " + std::to_string(id));
  }

  // Renumber 1..c in first-appearance order; this is the canonical labelling.
  std::unordered_map<int, int> renumber;
  renumber.reserve(sites.size());
  int next_id = 1;
  for (auto& word : words)
    for (auto& p : word) {
      auto [it, fresh] = renumber.try_emplace(p.crossing_id, next_id);
      if (fresh) ++next_id;
      p.crossing_id = it->second;
    }

  LinkDiagram d;
  d.words_ = std::move(words);
  d.crossings_.resize(sites.size());
  d.self_counts_.assign(d.words_.size(), 0);
  for (int ci = 0; ci < static_cast<int>(d.words_.size()); ++ci) {
    for (int t = 0; t < static_cast<int>(d.words_[ci].size()); ++t) {
      const Passage& p = d.words_[ci][t];
      Crossing& x = d.crossings_[p.crossing_id - 1];
      x.id = p.crossing_id;
      x.sign = p.sign;
      (p.strand == Strand::Over ? x.over : x.under) = Site{ci, t};
    }
  }
  for (const Crossing& x : d.crossings_) {
    if (x.is_self())
      ++d.self_counts_[x.over.component];
    else
      ++d.lc_;
  }
  return d;
}

const std::vector<Passage>& LinkDiagram::word(int comp) const {
  if (comp < 0 || comp >= component_count())
    throw DiagramError("component index " + std::to_string(comp + 1) + " out of range");
  return words_[comp];
}

const Crossing& LinkDiagram::crossing(int id) const {
  if (id < 1 || id > crossing_count())
    throw DiagramError("crossing id " + std::to_string(id) + " out of range");
  return crossings_[id - 1];
}

int LinkDiagram::self_crossing_count(int comp) const {
  word(comp);  // range check
  return self_counts_[comp];
}

int LinkDiagram::inter_crossing_count(int i, int j) const {
  word(i), word(j);
  int n = 0;
  for (const Crossing& x : crossings_) {
    int a = x.over.component, b = x.under.component;
    if ((a == i && b == j) || (a == j && b == i)) ++n;
  }
  return n;
}

int LinkDiagram::under_crossing_count(int i, int j) const {
  word(i), word(j);
  int n = 0;
  for (const Crossing& x : crossings_)
    if (x.under.component == i && x.over.component == j) ++n;
  return n;
}

int LinkDiagram::pair_sign_sum(int i, int j) const {
  word(i), word(j);
  int s = 0;
  for (const Crossing& x : crossings_) {
    int a = x.over.component, b = x.under.component;
    if ((a == i && b == j) || (a == j && b == i)) s += x.sign;
  }
  return s;
}

BaseSequence default_base(const LinkDiagram& diagram) {
  BaseSequence base;
  base.order.resize(diagram.component_count());
  for (int i = 0; i < diagram.component_count(); ++i) base.order[i] = i;
  base.positions.assign(diagram.component_count(), 0);
  return base;
}

void validate_base(const LinkDiagram& diagram, const BaseSequence& base) {
  const int r = diagram.component_count();
  if (static_cast<int>(base.order.size()) != r)
    throw DiagramError("base sequence order has " + std::to_string(base.order.size()) +
                       " entries for " + std::to_string(r) + " components");
  std::vector<bool> seen(r, false);
  for (int v : base.order) {
    if (v < 0 || v >= r || seen[v])
      throw DiagramError("base sequence order is not a permutation of the components");
    seen[v] = true;
  }
  if (static_cast<int>(base.positions.size()) != r)
    throw DiagramError("base sequence has " + std::to_string(base.positions.size()) +
                       " positions for " + std::to_string(r) + " components");
  for (int i = 0; i < r; ++i) {
    const int len = static_cast<int>(diagram.word(i).size());
    const bool ok = len == 0 ? base.positions[i] == 0
                             : base.positions[i] >= 0 && base.positions[i] < len;
    if (!ok)
      throw DiagramError("base position " + std::to_string(base.positions[i]) +
                         " out of range for component " + std::to_string(i + 1));
  }
}

LinkDiagram parse_diagram(std::string_view text) {
  std::vector<std::vector<Passage>> words;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream toks(line);
    std::string tok;
    std::vector<Passage> word;
    int empty_markers = 0;
    bool any = false;
    while (toks >> tok) {
      if (tok[0] == '#') break;  // comment until end of line
      any = true;
      if (tok == ".") {
        ++empty_markers;
        continue;
      }
      if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U') ||
          (tok.back() != '+' && tok.back() != '-'))
        throw DiagramError("malformed token '" + tok + "' on line " +
                           std::to_string(line_no));
      const std::string digits = tok.substr(1, tok.size() - 2);
      for (char c : digits)
        if (c < '0' || c > '9')
          throw DiagramError("malformed token '" + tok + "' on line " +
                             std::to_string(line_no));
      long id;
      try {
        id = std::stol(digits);
      } catch (const std::exception&) {
        throw DiagramError("malformed token '" + tok + "' on line " +
                           std::to_string(line_no));
      }
      if (id <= 0 || id > std::numeric_limits<int>::max())
        throw DiagramError("crossing id out of range in token '" + tok +
                           "' on line " + std::to_string(line_no));
      word.push_back(Passage{static_cast<int>(id),
                             tok[0] == 'O' ? Strand::Over : Strand::Under,
                             tok.back() == '+' ? +1 : -1});
    }
    if (empty_markers > 0 && (empty_markers > 1 || !word.empty()))
      throw DiagramError("'.' must be the only token on line " + std::to_string(line_no));
    if (empty_markers == 1)
      words.emplace_back();
    else if (any && !word.empty())
      words.push_back(std::move(word));
    // lines that held only a comment or whitespace are skipped
  }
  return LinkDiagram::from_components(std::move(words));
}

std::string serialize_diagram(const LinkDiagram& diagram) {
  std::string out;
  for (int i = 0; i < diagram.component_count(); ++i) {
    const auto& word = diagram.word(i);
    if (word.empty()) {
      out += ".";
    } else {
      for (int t = 0; t < static_cast<int>(word.size()); ++t) {
        if (t) out += ' ';
        out += strand_token(word[t]);
      }
    }
    out += '\n';
  }
  return out;
}

LinkDiagram reverse_all(const LinkDiagram& diagram) {
  auto words = diagram.words();
  for (auto& w : words) std::reverse(w.begin(), w.end());
  return LinkDiagram::from_components(std::move(words));
}

LinkDiagram reverse_component(const LinkDiagram& diagram, int comp) {
  diagram.word(comp);  // range check
  auto words = diagram.words();
  std::reverse(words[comp].begin(), words[comp].end());
  // Reversing one component flips the sign of every crossing it shares
  // with another component; self-crossings and foreign crossings keep theirs.
  for (const Crossing& x : diagram.crossings()) {
    if (x.is_self() || (x.over.component != comp && x.under.component != comp)) continue;
    for (Site s : {x.over, x.under}) {
      int idx = s.index;
      if (s.component == comp)
        idx = static_cast<int>(words[comp].size()) - 1 - idx;  // mirrored by the reverse
      words[s.component][idx].sign = -x.sign;
    }
  }
  return LinkDiagram::from_components(std::move(words));
}

LinkDiagram subdiagram(const LinkDiagram& diagram, const std::vector<int>& comps) {
  if (comps.empty()) throw DiagramError("subdiagram needs a nonempty component set");
  std::vector<bool> keep(diagram.component_count(), false);
  for (int c : comps) {
    diagram.word(c);  // range check
    keep[c] = true;
  }
  std::vector<std::vector<Passage>> words;
  for (int i = 0; i < diagram.component_count(); ++i) {
    if (!keep[i]) continue;
    std::vector<Passage> w;
    for (const Passage& p : diagram.word(i)) {
      const Crossing& x = diagram.crossing(p.crossing_id);
      if (keep[x.over.component] && keep[x.under.component]) w.push_back(p);
    }
    words.push_back(std::move(w));
  }
  return LinkDiagram::from_components(std::move(words));
}

LinkDiagram change_crossings(const LinkDiagram& diagram, const std::vector<int>& crossing_ids) {
  std::vector<bool> flip(diagram.crossing_count() + 1, false);
  for (int id : crossing_ids) {
    diagram.crossing(id);  // range check
    flip[id] = true;
  }
  auto words = diagram.words();
  for (auto& w : words)
    for (auto& p : w)
      if (flip[p.crossing_id]) {
        p.strand = opposite(p.strand);
        p.sign = -p.sign;  // switching the strands reverses the crossing sign
      }
  return LinkDiagram::from_components(std::move(words));
}

std::vector<std::string> validation_warnings(const LinkDiagram& diagram) {
  std::vector<std::string> warnings;
  const int r = diagram.component_count();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const int n = diagram.inter_crossing_count(i, j);
      if (n % 2 != 0)
        warnings.push_back("components " + std::to_string(i + 1) + " and " +
                           std::to_string(j + 1) + " cross " + std::to_string(n) +
                           " times; closed curves always cross an even number of times");
    }
  return warnings;
}

}  // namespace warpdeg
