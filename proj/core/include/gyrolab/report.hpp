#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gyrolab {

/// Worst case observed for one checked identity: the maximum residual over
/// all samples together with the inputs that attained it.
struct AxiomResidual {
    std::string axiom;
    double residual = 0.0;
    double tolerance = 0.0;
    std::vector<std::string> witness; // formatted worst-case input tuple
    std::size_t samples = 0;
    std::uint64_t seed = 0;

    bool pass() const { return residual <= tolerance; }
};

struct AxiomReport {
    std::string carrier;
    std::vector<AxiomResidual> entries;
    std::vector<std::string> notes; // e.g. checks skipped as unsupported

    bool pass() const {
        for (const auto& e : entries)
            if (!e.pass()) return false;
        return true;
    }

    double max_residual() const {
        double m = 0.0;
        for (const auto& e : entries) m = e.residual > m ? e.residual : m;
        return m;
    }

    const AxiomResidual* find(std::string_view axiom) const {
        for (const auto& e : entries)
            if (e.axiom == axiom) return &e;
        return nullptr;
    }

    void append(AxiomReport other) {
        for (auto& e : other.entries) entries.push_back(std::move(e));
        for (auto& n : other.notes) notes.push_back(std::move(n));
    }
};

/// JSON object per entry: {axiom, residual, tolerance, witness, samples, seed}.
std::string report_to_json_text(const AxiomReport& report, int indent = 2);

} // namespace gyrolab
