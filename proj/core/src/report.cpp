#include "gyrolab/report.hpp"

#include <json.hpp>

namespace gyrolab {

std::string report_to_json_text(const AxiomReport& report, int indent) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
        entries.push_back({{"axiom", e.axiom},
                           {"residual", e.residual},
                           {"tolerance", e.tolerance},
                           {"witness", e.witness},
                           {"samples", e.samples},
                           {"seed", e.seed}});
    }
    nlohmann::json j{{"carrier", report.carrier},
                     {"entries", entries},
                     {"notes", report.notes},
                     {"pass", report.pass()}};
    return j.dump(indent);
}

} // namespace gyrolab
