#pragma once

#include <json.hpp>

#include "gyrolab/einstein.hpp"
#include "gyrolab/integers.hpp"
#include "gyrolab/io.hpp"
#include "gyrolab/metric.hpp"
#include "gyrolab/mobius.hpp"
#include "gyrolab/table.hpp"

namespace gyrolab {

inline nlohmann::json element_json(const MobiusDisk&, std::complex<double> z) {
    return nlohmann::json::array({z.real(), z.imag()});
}
inline nlohmann::json element_json(const EinsteinBall&, const Vec3& v) {
    return nlohmann::json::array({v[0], v[1], v[2]});
}
inline nlohmann::json element_json(const TableGyro&, int a) { return a; }
inline nlohmann::json element_json(const IntegerGyro&, long long a) { return a; }

template <GyroCarrier G>
nlohmann::json points_json(const G& g, const std::vector<typename G::element_type>& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pts) arr.push_back(element_json(g, p));
    return arr;
}

template <GyroCarrier G>
nlohmann::json cover_witness_json(const G& g,
                                  const CoverWitness<typename G::element_type>& w) {
    return {{"radius", w.radius},
            {"centers", points_json(g, w.centers)},
            {"center_count", w.centers.size()},
            {"covered_fraction", w.covered_fraction},
            {"uncovered_examples", points_json(g, w.uncovered_examples)},
            {"cloud_size", w.cloud_size}};
}

inline nlohmann::json density_json(const DensityReport& r) {
    return {{"fraction", r.fraction},
            {"delta", r.delta},
            {"cloud_size", r.cloud_size},
            {"set_size", r.set_size},
            {"uncovered_cloud_indices", r.uncovered}};
}

inline nlohmann::json closed_discrete_json(const ClosedDiscreteReport& r) {
    nlohmann::json j{{"pass", r.pass},
                     {"size", r.size},
                     {"min_separation", r.size > 1 ? r.min_separation : 0.0},
                     {"core_bound", std::isfinite(r.core_bound) ? nlohmann::json(r.core_bound)
                                                                : nlohmann::json()},
                     {"core_count", r.core_count}};
    if (r.duplicate_pair)
        j["duplicate_pair"] = {r.duplicate_pair->first, r.duplicate_pair->second};
    if (r.size > 1 && std::isfinite(r.min_core_separation))
        j["min_core_separation"] = r.min_core_separation;
    return j;
}

} // namespace gyrolab
