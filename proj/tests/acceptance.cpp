// Acceptance suite: one check per shipped criterion, one line of output each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "warpdeg/generators.hpp"
#include "warpdeg/linking_matrix.hpp"
#include "warpdeg/ou_word.hpp"
#include "warpdeg/split.hpp"
#include "warpdeg/verify.hpp"
#include "warpdeg/warping.hpp"

using namespace warpdeg;
namespace fx = warpdeg::fixtures;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// Ordered tuples of positive odd entries with odd length and bounded sum.
std::vector<std::vector<int>> positive_odd_pretzel_entries(int max_sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int remaining) {
    if (!current.empty() && current.size() % 2 == 1) out.push_back(current);
    for (int n = 1; n <= remaining; n += 2) {
      current.push_back(n);
      extend(remaining - n);
      current.pop_back();
    }
  };
  extend(max_sum);
  return out;
}

// Deterministic diagrams of honest closed curves for the sign-sensitive
// criteria.
std::vector<LinkDiagram> realizable_corpus() {
  std::vector<LinkDiagram> corpus;
  for (int p = 2; p <= 9; ++p) corpus.push_back(torus_2p(p));
  for (int n = 2; n <= 5; ++n) corpus.push_back(chain_link(n));
  corpus.push_back(pretzel_odd({1, 1, 1}));
  corpus.push_back(pretzel_odd({3, 3, 3}));
  corpus.push_back(pretzel_odd({1, 3, 5}));
  corpus.push_back(fx::make(fx::kHopf));
  corpus.push_back(fx::make(fx::kTrefoilWithCircle));
  corpus.push_back(fx::make(fx::kStackedCancelling));
  corpus.push_back(fx::make(fx::kMixedSignPair));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int strands = 2 + static_cast<int>(seed % 3);
    LinkDiagram d = braid_closure(random_braid_word(seed, 8, strands), strands);
    if (d.crossing_count() <= 10) corpus.push_back(std::move(d));
  }
  return corpus;
}

std::string run_cli_text(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  run_cli(args, out, err);
  return out.str();
}

void criterion_1_normalization_fixture() {
  const auto start = std::chrono::steady_clock::now();
  require(normalize_ou_word("oouuouuouuouoouoou") == "uuoo", "normalized word");
  require(knot_warping_degree_from(4, "oouuouuouuouoouoou") == 2, "degree formula");
  require(ms_since(start) < 1.0, "under one millisecond");
  require(run_cli_text({"normalize", "oouuouuouuouoouoou"}) == "uuoo (len 4)\n",
          "cli normalize output");
}

void criterion_2_matrix_fixture() {
  const auto start = std::chrono::steady_clock::now();
  const LinkingMatrix first = LinkingMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {2, 2, 0}});
  require(minimize_ld(first).value == 1, "order minimum of the first matrix");
  const LinkingMatrix second = LinkingMatrix::from_rows({{0, 2, 2}, {0, 0, 1}, {0, 1, 0}});
  require(upper_triangular_sum(second) == 5, "upper-triangular sum of the second matrix");
  require(ms_since(start) < 1.0, "under one millisecond");
  const std::string cli_out = run_cli_text({"matrix", "0 1 0;1 0 0;2 2 0"});
  require(cli_out.find("ld=1, order=(1,2,3)") != std::string::npos, "cli matrix output");
}

void criterion_3_knot_bound() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<LinkDiagram> alternating;
  for (int p = 3; p <= 11; p += 2) alternating.push_back(torus_2p(p));
  for (const auto& entries : positive_odd_pretzel_entries(11))
    alternating.push_back(pretzel_odd(entries));
  for (const LinkDiagram& d : alternating) {
    const int d0 = min_warping_degree(d).value;
    const int d1 = min_warping_degree(reverse_all(d)).value;
    require(d0 + d1 + 1 == d.crossing_count(), "equality on an alternating diagram");
  }

  int non_alternating = 0;
  for (std::uint64_t seed = 0; non_alternating < 100 && seed < 20000; ++seed) {
    const LinkDiagram d = random_diagram(seed, 10, 1);
    if (d.crossing_count() == 0 || is_alternating_component(d, 0)) continue;
    ++non_alternating;
    const int d0 = min_warping_degree(d).value;
    const int d1 = min_warping_degree(reverse_all(d)).value;
    require(d0 + d1 + 1 < d.crossing_count(), "strict inequality on a non-alternating code");
  }
  require(non_alternating >= 100, "collected 100 non-alternating codes");
  require(ms_since(start) < 10000.0, "under ten seconds");
}

void criterion_4_link_bound() {
  const auto start = std::chrono::steady_clock::now();
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int r = 1 + static_cast<int>(seed % 3);
    const LinkDiagram d = random_diagram(seed, 10, r);
    const auto report = verify_link_crossing_bound(d);
    require(report.holds, "bound and equality condition on seed " + std::to_string(seed));
    ++checked;
  }
  require(checked >= 500, "checked 500 diagrams");
  require(ms_since(start) < 60000.0, "under one minute");
}

void criterion_5_oracle_equivalence() {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const LinkDiagram knot = random_diagram(seed, 12, 1);
    require(knot_warping_degree(knot) == oracle::knot_min_brute(knot),
            "word formula vs base enumeration on seed " + std::to_string(seed));
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int r = 1 + static_cast<int>(seed % 4);
    const LinkDiagram d = random_diagram(seed, 8, r);
    require(min_warping_degree(d).value == oracle::min_warping_brute(d),
            "decomposition vs full enumeration on seed " + std::to_string(seed));
  }
}

void criterion_6_reversal_identity() {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int r = 1 + static_cast<int>(seed % 3);
    const LinkDiagram d = random_diagram(seed, 10, r);
    require(verify_ld_vs_lc(d).holds, "reversal identity on seed " + std::to_string(seed));
  }
}

void criterion_7_orientation_invariance() {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int r = 1 + static_cast<int>(seed % 3);
    const LinkDiagram d = random_diagram(seed, 10, r);
    require(verify_orientation_invariance(d).holds,
            "orientation sum on seed " + std::to_string(seed));
  }
}

void criterion_8_linking_claims() {
  for (const LinkDiagram& d : realizable_corpus()) {
    require(verify_linking_vs_ld(d).holds, "linking vs ld on a corpus diagram");
    require(verify_total_linking_shortcut(d).holds, "total linking over every order");
    if (d.component_count() >= 2 && d.crossing_count() <= 8) {
      // The shortcut ignores base positions; spot-check a shifted base too.
      BaseSequence base = default_base(d);
      for (int i = 0; i < d.component_count(); ++i)
        if (!d.word(i).empty())
          base.positions[i] = static_cast<int>(d.word(i).size()) / 2;
      require(total_linking_via_warping(d, base) ==
                  static_cast<int>(total_linking_number(d).twice / 2),
              "shortcut with shifted bases");
    }
  }
}

void criterion_9_split_intervals() {
  const auto hopf = complete_split_bounds(fx::make(fx::kHopf));
  require(hopf.lower == 1 && hopf.upper == 1, "hopf complete split interval");
  const auto chain3 = partial_split_bounds(chain_link(3));
  require(chain3.lower == 1 && chain3.upper == 1, "3-chain partial split interval");

  std::vector<LinkDiagram> corpus = realizable_corpus();
  corpus.push_back(fx::make(fx::kWideGapSplitFixture));
  for (const LinkDiagram& d : corpus) {
    if (d.component_count() < 2) continue;
    require(split_chain_check(d).holds, "splitting chain on a corpus diagram");
    const auto complete = complete_split_bounds(d);
    require(is_stacked_diagram(change_crossings(d, complete.upper_certificate.crossing_ids)),
            "complete certificate yields a stacked diagram");
    const auto partial = partial_split_bounds(d);
    require(is_bipartition_split(change_crossings(d, partial.upper_certificate.crossing_ids)),
            "partial certificate yields a bipartition split");
  }
}

void criterion_10_pretzel_properties() {
  const std::vector<std::vector<int>> samples = {
      {1, 1, 1},  {3, 3, 3},  {1, 3, 5},  {5, 5, 1},  {-1, 1, 1},
      {-3, 3, 1}, {3, -3, 3}, {-1, -1, -1}, {-5, 3, -1}, {7, 1, 1},
      {1, 1, 1, 1, 1}, {3, 1, 3, 1, 3}, {-1, 3, -5, 3, -1}, {5, -3, 1},
      {1, -1, 1}, {3, 3, -3}, {9, 1, 1}, {1, 5, 3}, {-7, -5, -3},
      {1, 1, 3, 1, 1}};
  require(samples.size() == 20, "twenty samples");
  for (const auto& entries : samples) {
    const LinkDiagram d = pretzel_odd(entries);
    require(min_warping_degree(d).value == min_warping_degree(reverse_all(d)).value,
            "both orientations agree");
  }
  require(knot_warping_degree(pretzel_odd({3, 3, 3})) == 4, "P(3,3,3)");
  require(knot_warping_degree(pretzel_odd({1, 1, 1})) == 1, "P(1,1,1)");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* label;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "o/u word normalization fixture", criterion_1_normalization_fixture},
      {2, "matrix order minimization fixtures", criterion_2_matrix_fixture},
      {3, "knot crossing bound, equality iff alternating", criterion_3_knot_bound},
      {4, "link crossing bound, equality iff balanced alternating", criterion_4_link_bound},
      {5, "minimization equals brute-force oracles", criterion_5_oracle_equivalence},
      {6, "order reversal identity and lc/2 bound", criterion_6_reversal_identity},
      {7, "orientation invariance of d(D)+d(-D)", criterion_7_orientation_invariance},
      {8, "linking number bounds and total-linking shortcut", criterion_8_linking_claims},
      {9, "splitting intervals, chain and certificates", criterion_9_split_intervals},
      {10, "pretzel warping degree properties", criterion_10_pretzel_properties},
  };

  int passed = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run();
      std::printf("criterion %2d: PASS   (%8.2f ms)  %s\n", criterion.number,
                  ms_since(start), criterion.label);
      ++passed;
    } catch (const Failure& f) {
      std::printf("criterion %2d: FAIL   (%8.2f ms)  %s — %s\n", criterion.number,
                  ms_since(start), criterion.label, f.what.c_str());
    } catch (const std::exception& e) {
      std::printf("criterion %2d: ERROR  (%8.2f ms)  %s — %s\n", criterion.number,
                  ms_since(start), criterion.label, e.what());
    }
  }
  std::printf("acceptance: %d/%d criteria passed\n", passed,
              static_cast<int>(criteria.size()));
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
