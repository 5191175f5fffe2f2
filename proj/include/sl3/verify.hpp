#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sl3/ladderweb.hpp"

namespace sl3 {

struct CheckResult {
    std::string property;
    std::string signs;
    bool ok = true;
    std::size_t units = 0;          // checked items
    nlohmann::json counterexample;  // first failure, replayable with `bij --payload`
    std::string detail;
};

// roundtrip, degree, unitriangular, gdf, homogeneity, cellular, brackets, ltlength
const std::vector<std::string>& property_names();

// Throws std::invalid_argument for an unknown property.
CheckResult check_property(const std::string& property, const SignString& s);

// Payload describing a web with a flow.
nlohmann::json web_flow_payload(const SignString& s, const LadderWeb& w, const std::vector<int>& moved);

}  // namespace sl3
