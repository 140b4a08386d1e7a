#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cycles.hpp"
#include "linalg.hpp"
#include "sigma.hpp"
#include "signature.hpp"
#include "tolerances.hpp"

namespace tipforge {

struct TablesPayload {
    SensitivityTable coefficients;  ///< tipping/total per a_i
    SensitivityTable sigma_powers;  ///< tipping/total per s_j of r_0

    bool operator==(const TablesPayload&) const = default;
};

struct CycleGroup {
    int coefficient = 0;
    std::optional<int> sigma_power;
    SensitivityCell cell;
    std::vector<CycleTerm> terms;
    WeightedCycleSet weights;

    bool operator==(const CycleGroup&) const = default;
};

struct CyclesPayload {
    bool by_sigma = false;
    std::vector<CycleGroup> groups;

    bool operator==(const CyclesPayload&) const = default;
};

using Payload = std::variant<SigmaReport, TablesPayload, CyclesPayload, SpectralSignature, CensusResult>;

struct InputEcho {
    std::optional<Matrix> matrix;
    std::optional<SignPattern> pattern;
    nlohmann::json parameters = nlohmann::json::object();

    bool operator==(const InputEcho& o) const;
};

/// Everything one CLI command produced, in a form that round-trips through JSON.
struct AnalysisReport {
    std::string command;
    std::string tool_version;
    InputEcho input;
    Tolerances tolerances;
    Payload payload;
    double elapsed_ms = 0;

    bool operator==(const AnalysisReport&) const = default;
};

/// Command name -> payload alternative index.
std::size_t payload_index_for(const std::string& command);

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);

/// JSON text with 2-space indentation in which every floating value is
/// written with 17 significant digits (non-finite values become null).
std::string dump_json(const nlohmann::json& j);

std::string serialize(const AnalysisReport& r);
AnalysisReport parse_report(std::string_view text);

/// Copy of a report document without its timing block, for byte comparisons.
nlohmann::json redact_timing(nlohmann::json j);

/// Version string compiled into the library.
const char* tool_version();

}  // namespace tipforge
