#include "cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "warpdeg/diagram.hpp"
#include "warpdeg/generators.hpp"
#include "warpdeg/json_io.hpp"
#include "warpdeg/linking_matrix.hpp"
#include "warpdeg/ou_word.hpp"
#include "warpdeg/split.hpp"
#include "warpdeg/verify.hpp"
#include "warpdeg/warping.hpp"

namespace warpdeg {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

LinkDiagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DiagramError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_diagram(buffer.str());
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> values;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      values.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw DiagramError(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  if (values.empty()) throw DiagramError(std::string("empty ") + what + " list");
  return values;
}

std::string order_text(const std::vector<int>& order) {
  std::string s = "(";
  for (size_t k = 0; k < order.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(order[k] + 1);
  }
  return s + ")";
}

BaseSequence base_from_flags(const LinkDiagram& diagram, const std::string& order_str,
                             const std::string& base_str) {
  BaseSequence base = default_base(diagram);
  if (!order_str.empty()) {
    base.order = parse_int_list(order_str, "--order");
    for (int& v : base.order) --v;  // 1-based on the command line
  }
  if (!base_str.empty()) base.positions = parse_int_list(base_str, "--base");
  validate_base(diagram, base);
  return base;
}

ordered_json matrix_json(const LinkingMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_matrix(std::ostream& out, const LinkingMatrix& m, const std::string& indent) {
  for (int i = 0; i < m.size(); ++i) {
    out << indent << "[";
    for (int j = 0; j < m.size(); ++j) out << " " << m.at(i, j);
    out << " ]\n";
  }
}

int cmd_compute(const std::string& path, bool as_json, const std::string& order_str,
                const std::string& base_str, const WarpingOptions& opts,
                std::ostream& out) {
  const LinkDiagram d = load_diagram(path);
  const int r = d.component_count();
  const auto warnings = validation_warnings(d);

  const auto dmin = min_warping_degree(d, opts);
  const auto dmin_rev = min_warping_degree(reverse_all(d), opts);
  const auto ld = min_linking_warping_degree(d, opts);
  const int du = unoriented_warping_degree(d, opts);
  const int sr = self_crossing_component_count(d);

  BaseSequence min_base = default_base(d);
  min_base.order = ld.witness_order;
  const LinkingMatrix matrix = build_linking_matrix(d, min_base);

  const bool custom_base = !order_str.empty() || !base_str.empty();
  BaseSequence base = custom_base ? base_from_flags(d, order_str, base_str) : min_base;
  const WarpingReport based = warping_report(d, base);

  if (as_json) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["diagram"] = diagram_to_json(d);
    j["components"] = r;
    j["crossings"] = d.crossing_count();
    j["linking_crossings"] = d.linking_crossing_count();
    j["self_crossing_components"] = sr;
    j["warnings"] = warnings;
    ordered_json comp = ordered_json::array();
    for (int i = 0; i < r; ++i)
      comp.push_back({{"component", i + 1},
                      {"d", component_warping_degree(d, i)},
                      {"d_reversed", component_warping_degree_reversed(d, i)}});
    j["component_warping_degrees"] = comp;
    ordered_json ldj;
    ldj["value"] = ld.value;
    ldj["order"] = ordered_json::array();
    for (int v : ld.witness_order) ldj["order"].push_back(v + 1);
    j["linking_warping_degree"] = ldj;
    ordered_json dj;
    dj["value"] = dmin.value;
    dj["order"] = ordered_json::array();
    for (int v : dmin.witness.order) dj["order"].push_back(v + 1);
    dj["positions"] = dmin.witness.positions;
    j["warping_degree"] = dj;
    j["warping_degree_reversed"] = dmin_rev.value;
    j["unoriented_warping_degree"] = du;
    j["linking_matrix_at_min_order"] = matrix_json(matrix);
    ordered_json links = ordered_json::array();
    for (int i = 0; i < r; ++i)
      for (int k = i + 1; k < r; ++k)
        links.push_back(
            {{"i", i + 1}, {"j", k + 1}, {"value", linking_number(d, i, k).value()}});
    j["linking_numbers"] = links;
    j["total_linking_number"] = total_linking_number(d).value();
    ordered_json bj;
    bj["order"] = ordered_json::array();
    for (int v : base.order) bj["order"].push_back(v + 1);
    bj["positions"] = base.positions;
    bj["warping_degree"] = based.warping_degree;
    bj["linking_warping_degree"] = based.linking_warping_degree;
    j["based"] = bj;
    out << j.dump(2) << "\n";
    return 0;
  }

  out << "components: " << r << "\n";
  out << "crossings:  c=" << d.crossing_count() << "  lc=" << d.linking_crossing_count()
      << "  sr=" << sr << "\n";
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  for (int i = 0; i < r; ++i)
    out << "component " << i + 1 << ": d=" << component_warping_degree(d, i)
        << "  d(reversed)=" << component_warping_degree_reversed(d, i)
        << "  self crossings=" << d.self_crossing_count(i) << "\n";
  out << "linking warping degree: " << ld.value << "  at order "
      << order_text(ld.witness_order) << "\n";
  out << "warping degree: " << dmin.value << "  (order " << order_text(dmin.witness.order)
      << ", positions";
  for (int p : dmin.witness.positions) out << " " << p;
  out << ")\n";
  out << "reversed warping degree: " << dmin_rev.value << "\n";
  out << "unoriented warping degree: " << du << "\n";
  out << "linking matrix at order " << order_text(ld.witness_order) << ":\n";
  print_matrix(out, matrix, "  ");
  for (int i = 0; i < r; ++i)
    for (int k = i + 1; k < r; ++k)
      out << "Link(" << i + 1 << "," << k + 1
          << ") = " << to_string(linking_number(d, i, k)) << "\n";
  if (r > 1) out << "total linking: " << to_string(total_linking_number(d)) << "\n";
  if (custom_base)
    out << "based warping degree at order " << order_text(base.order) << ": "
        << based.warping_degree << "  (linking part " << based.linking_warping_degree
        << ")\n";
  return 0;
}

struct ClaimRun {
  std::string name;
  std::function<VerificationReport()> run;
};

std::vector<ClaimRun> claim_registry(const LinkDiagram& d, const WarpingOptions& opts) {
  std::vector<ClaimRun> claims;
  const int r = d.component_count();
  if (r == 1) {
    if (d.crossing_count() >= 1)
      claims.push_back({"knot_crossing_bound",
                        [&d, opts] { return verify_knot_crossing_bound(d, opts); }});
  } else {
    for (int i = 0; i < r; ++i)
      if (d.self_crossing_count(i) >= 1)
        claims.push_back({"knot_crossing_bound[" + std::to_string(i + 1) + "]",
                          [&d, i, opts] {
                            return verify_knot_crossing_bound(subdiagram(d, {i}), opts);
                          }});
  }
  claims.push_back(
      {"link_crossing_bound", [&d, opts] { return verify_link_crossing_bound(d, opts); }});
  claims.push_back({"ld_vs_lc", [&d, opts] { return verify_ld_vs_lc(d, opts); }});
  claims.push_back({"self_crossing_bound",
                    [&d, opts] { return verify_self_crossing_bound(d, opts); }});
  claims.push_back({"orientation_invariance",
                    [&d, opts] { return verify_orientation_invariance(d, opts); }});
  claims.push_back({"linking_vs_ld", [&d, opts] { return verify_linking_vs_ld(d, opts); }});
  claims.push_back({"total_linking_shortcut",
                    [&d, opts] { return verify_total_linking_shortcut(d, opts); }});
  claims.push_back(
      {"unlinking_bounds", [&d, opts] { return verify_unlinking_bounds(d, opts); }});
  claims.push_back(
      {"unoriented_bound", [&d, opts] { return verify_unoriented_bound(d, opts); }});
  if (r >= 2)
    claims.push_back({"split_chain", [&d, opts] { return split_chain_check(d, opts); }});
  return claims;
}

int cmd_verify(const std::string& path, bool as_json, const std::string& claims_filter,
               const WarpingOptions& opts, std::ostream& out) {
  const LinkDiagram d = load_diagram(path);
  auto claims = claim_registry(d, opts);

  if (!claims_filter.empty()) {
    std::vector<std::string> wanted;
    std::string item;
    std::istringstream in(claims_filter);
    while (std::getline(in, item, ',')) wanted.push_back(item);
    std::vector<ClaimRun> selected;
    for (const std::string& w : wanted) {
      bool found = false;
      for (const ClaimRun& c : claims) {
        const std::string base = c.name.substr(0, c.name.find('['));
        if (c.name == w || base == w) {
          selected.push_back(c);
          found = true;
        }
      }
      if (!found)
        throw DiagramError("claim '" + w + "' is unknown or not applicable here");
    }
    claims = std::move(selected);
  }

  bool all_hold = true;
  ordered_json results = ordered_json::array();
  for (const ClaimRun& claim : claims) {
    VerificationReport report;
    try {
      report = claim.run();
    } catch (const DiagramError& e) {
      report.holds = false;
      report.witnesses = {{"error", e.what()}};
    }
    report.claim = claim.name;  // keep per-component suffixes
    all_hold = all_hold && report.holds;
    if (as_json) {
      results.push_back(report_to_json(report));
    } else {
      out << (report.holds ? "[ok]   " : "[FAIL] ") << report.claim << "  " << report.lhs
          << (report.equality && *report.equality ? " = " : " <= ") << report.rhs;
      if (report.equality) out << "  equality=" << (*report.equality ? "yes" : "no");
      out << "\n";
    }
  }
  if (as_json) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["claims"] = results;
    j["all_hold"] = all_hold;
    out << j.dump(2) << "\n";
  } else {
    out << (all_hold ? "all claims hold\n" : "some claims FAILED\n");
  }
  return all_hold ? 0 : 1;
}

int cmd_split(const std::string& path, bool as_json, const WarpingOptions& opts,
              std::ostream& out) {
  const LinkDiagram d = load_diagram(path);
  const BoundInterval complete = complete_split_bounds(d, opts);
  const BoundInterval partial = partial_split_bounds(d, opts);
  const VerificationReport chain = split_chain_check(d, opts);

  if (as_json) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["complete_split"] = interval_to_json(complete);
    j["partial_split"] = interval_to_json(partial);
    j["note"] =
        "intervals bound the non-self-change distances; they are also valid "
        "bounds for the unrestricted variants, whose savings from self "
        "changes are not modelled";
    j["chain"] = report_to_json(chain);
    out << j.dump(2) << "\n";
    return chain.holds ? 0 : 1;
  }

  auto show = [&](const char* label, const BoundInterval& b) {
    out << label << ": [" << b.lower << "," << b.upper << "]"
        << (b.exact() ? " exact" : "") << "\n";
    out << "  lower: " << b.lower_certificate << "\n";
    out << "  upper: " << b.upper_certificate.description << " — crossings {";
    for (size_t t = 0; t < b.upper_certificate.crossing_ids.size(); ++t) {
      if (t) out << ",";
      out << b.upper_certificate.crossing_ids[t];
    }
    out << "}\n";
  };
  show("complete split", complete);
  show("partial split", partial);
  out << "chain: " << (chain.holds ? "ok" : "FAILED") << "\n";
  return chain.holds ? 0 : 1;
}

int cmd_normalize(const std::string& word, std::ostream& out) {
  const std::string reduced = normalize_ou_word(word);
  out << (reduced.empty() ? "(empty)" : reduced) << " (len " << reduced.size() << ")\n";
  return 0;
}

int cmd_matrix(const std::string& rows_text, const WarpingOptions& opts, std::ostream& out) {
  std::vector<std::vector<long long>> rows;
  std::string row;
  std::istringstream in(rows_text);
  while (std::getline(in, row, ';')) {
    std::vector<long long> entries;
    std::istringstream row_in(row);
    long long v;
    while (row_in >> v) entries.push_back(v);
    if (!entries.empty()) rows.push_back(std::move(entries));
  }
  const LinkingMatrix m = LinkingMatrix::from_rows(rows);
  const auto best = minimize_ld(m, opts.max_r);
  const auto walk = minimize_ld_adjacent_walk(m, opts.max_r);
  out << "upper-triangular sum = " << upper_triangular_sum(m) << "\n";
  out << "ld=" << best.value << ", order=" << order_text(best.order) << "\n";
  if (walk.value != best.value) {
    out << "transposition walk disagrees: " << walk.value << "\n";
    return 1;
  }
  return 0;
}

int cmd_gen(const std::string& family, const std::string& params, std::uint64_t seed,
            int c_max, int r, int strands, std::ostream& out) {
  LinkDiagram d = [&] {
    if (family == "pretzel") return pretzel_odd(parse_int_list(params, "pretzel"));
    if (family == "torus") return torus_2p(std::stoi(params));
    if (family == "chain") return chain_link(std::stoi(params));
    if (family == "braid") {
      if (!params.empty()) return braid_closure(parse_int_list(params, "braid"), strands);
      return braid_closure(random_braid_word(seed, c_max, strands), strands);
    }
    if (family == "random") return random_diagram(seed, c_max, r);
    throw DiagramError("unknown family '" + family +
                       "' (pretzel, torus, chain, braid, random)");
  }();
  out << serialize_diagram(d);
  return 0;
}

int cmd_census(const std::vector<std::string>& paths, const std::string& metric_name,
               const WarpingOptions& opts, std::ostream& out) {
  CensusMetric metric;
  if (metric_name == "warping-sum")
    metric = CensusMetric::WarpingSum;
  else if (metric_name == "warping-sum-self")
    metric = CensusMetric::WarpingSumSelf;
  else if (metric_name == "self-crossings")
    metric = CensusMetric::SelfCrossings;
  else
    throw DiagramError("unknown metric '" + metric_name +
                       "' (warping-sum, warping-sum-self, self-crossings)");
  std::vector<LinkDiagram> diagrams;
  for (const std::string& p : paths) diagrams.push_back(load_diagram(p));
  out << census_min(diagrams, metric, opts) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"warping degree toolkit for signed Gauss codes"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --max-r appear after the subcommand as well

  int max_r = 8;
  app.add_option("--max-r", max_r, "cap for component order enumeration")
      ->capture_default_str();

  std::string path, order_str, base_str, claims_filter, word, rows_text;
  std::string family, params, metric_name = "warping-sum-self";
  std::vector<std::string> census_paths;
  bool as_json = false;
  std::uint64_t seed = 1;
  int gen_c = 6, gen_r = 2, strands = 2;

  auto* compute = app.add_subcommand("compute", "invariants of a diagram file");
  compute->add_option("file", path)->required();
  compute->add_flag("--json", as_json);
  compute->add_option("--order", order_str, "component order, e.g. 2,1,3");
  compute->add_option("--base", base_str, "base positions per component, e.g. 0,3");

  auto* verify = app.add_subcommand("verify", "check the implemented claims on a file");
  verify->add_option("file", path)->required();
  verify->add_flag("--json", as_json);
  verify->add_option("--claims", claims_filter, "comma-separated claim filter");

  auto* split = app.add_subcommand("split", "certified splitting-distance intervals");
  split->add_option("file", path)->required();
  split->add_flag("--json", as_json);

  auto* normalize = app.add_subcommand("normalize", "reduce an o/u word");
  normalize->add_option("word", word)->required();

  auto* matrix = app.add_subcommand("matrix", "minimize ld over a bare matrix");
  matrix->add_option("rows", rows_text, "e.g. \"0 1 0;1 0 0;2 2 0\"")->required();

  auto* gen = app.add_subcommand("gen", "emit a generated diagram");
  gen->add_option("family", family, "pretzel|torus|chain|braid|random")->required();
  gen->add_option("params", params, "family parameters, e.g. 3,3,3");
  gen->add_option("--seed", seed);
  gen->add_option("--c", gen_c, "crossing budget (random) or braid length");
  gen->add_option("--r", gen_r, "components (random)");
  gen->add_option("--strands", strands, "braid strands");

  auto* census = app.add_subcommand("census", "minimum of a metric over diagram files");
  census->add_option("--metric", metric_name, "warping-sum|warping-sum-self|self-crossings");
  census->add_option("files", census_paths)->required();

  std::vector<const char*> argv;
  argv.push_back("warpdeg");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const WarpingOptions opts{max_r};
  try {
    if (app.got_subcommand(compute))
      return cmd_compute(path, as_json, order_str, base_str, opts, out);
    if (app.got_subcommand(verify))
      return cmd_verify(path, as_json, claims_filter, opts, out);
    if (app.got_subcommand(split)) return cmd_split(path, as_json, opts, out);
    if (app.got_subcommand(normalize)) return cmd_normalize(word, out);
    if (app.got_subcommand(matrix)) return cmd_matrix(rows_text, opts, out);
    if (app.got_subcommand(gen))
      return cmd_gen(family, params, seed, gen_c, gen_r, strands, out);
    if (app.got_subcommand(census)) return cmd_census(census_paths, metric_name, opts, out);
  } catch (const DiagramError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace warpdeg
