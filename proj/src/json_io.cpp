#include "warpdeg/json_io.hpp"

namespace warpdeg {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json diagram_to_json(const LinkDiagram& diagram) {
  ordered_json comps = ordered_json::array();
  for (const auto& word : diagram.words()) {
    ordered_json w = ordered_json::array();
    for (const Passage& p : word)
      w.push_back({{"o", p.strand == Strand::Over}, {"id", p.crossing_id}, {"sign", p.sign}});
    comps.push_back(std::move(w));
  }
  return ordered_json{{"components", std::move(comps)}};
}

LinkDiagram diagram_from_json(const json& j) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    throw DiagramError("diagram json needs a \"components\" array");
  std::vector<std::vector<Passage>> words;
  for (const auto& comp : j["components"]) {
    if (!comp.is_array()) throw DiagramError("each component must be an array of passages");
    std::vector<Passage> word;
    for (const auto& entry : comp) {
      if (!entry.is_object() || !entry.contains("o") || !entry.contains("id") ||
          !entry.contains("sign") || !entry["o"].is_boolean() ||
          !entry["id"].is_number_integer() || !entry["sign"].is_number_integer())
        throw DiagramError("passage needs boolean \"o\" and integer \"id\", \"sign\"");
      word.push_back(Passage{entry["id"].get<int>(),
                             entry["o"].get<bool>() ? Strand::Over : Strand::Under,
                             entry["sign"].get<int>()});
    }
    words.push_back(std::move(word));
  }
  return LinkDiagram::from_components(std::move(words));
}

ordered_json report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["claim"] = report.claim;
  j["holds"] = report.holds;
  if (report.equality)
    j["equality"] = *report.equality;
  else
    j["equality"] = nullptr;
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["witnesses"] = report.witnesses;
  return j;
}

ordered_json interval_to_json(const BoundInterval& interval) {
  ordered_json j;
  j["lower"] = interval.lower;
  j["upper"] = interval.upper;
  j["exact"] = interval.exact();
  j["lower_certificate"] = interval.lower_certificate;
  j["upper_certificate"] = {{"crossings", interval.upper_certificate.crossing_ids},
                            {"description", interval.upper_certificate.description}};
  return j;
}

}  // namespace warpdeg
