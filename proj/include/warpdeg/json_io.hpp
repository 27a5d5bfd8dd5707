#pragma once

#include <json.hpp>

#include "warpdeg/diagram.hpp"
#include "warpdeg/split.hpp"
#include "warpdeg/verify.hpp"

namespace warpdeg {

// {"components": [[{"o": bool, "id": int, "sign": int}, ...], ...]}
nlohmann::ordered_json diagram_to_json(const LinkDiagram& diagram);
LinkDiagram diagram_from_json(const nlohmann::json& j);

nlohmann::ordered_json report_to_json(const VerificationReport& report);
nlohmann::ordered_json interval_to_json(const BoundInterval& interval);

}  // namespace warpdeg
