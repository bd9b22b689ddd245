#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ainf/charts.hpp"
#include "ainf/configuration.hpp"
#include "ainf/quotient.hpp"

namespace ainf::io {

using nlohmann::json;

/// Configuration files:
///   {"family": "power_law", "beta": 2.0, "truncation": 10000}
///   {"family": "finite", "centers": [[t, re, im], ...]}
///   {"family": "axial", "prefix": [a_1, ...], "scale": 1, "exponent": 2}
///   {"family": "general", "centers": [...], "tails": [{"base": [re, im],
///    "sign": 1, "scale": 1, "exponent": 2, "first": 1}], "fibers":
///    [{"z": [re, im], "order": "omega_down"}], "working_radius": 50}
Configuration config_from_json(const json& j);
json config_to_json(const Configuration& config);
Configuration load_config(const std::string& path);

/// {"deviations": [{"z": [re, im], "gap": [lower | null, upper | null]}],
///  "unit": [[re, im], ...]}  (unit: coefficients of P in exp(P(q)))
struct SectionFile {
    CombinatorialSection section;
    std::vector<Complex> unit;
};
SectionFile section_from_json(const json& j);
json section_to_json(const CombinatorialSection& s, const std::vector<Complex>& unit = {});
SectionFile load_section(const std::string& path);

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);
json gap_to_json(const Gap& gap);
Gap gap_from_json(const json& j);
json order_type_to_json(const OrderType& type);
OrderType order_type_from_json(const json& j);

json read_json_file(const std::string& path);

/// FNV-1a of the canonical string, as 16 hex digits.
std::string digest(const Configuration& config);

struct RunManifest {
    std::string command;
    std::vector<std::string> config_digests;
    std::uint64_t seed = 0;
    std::map<std::string, double> tolerances;
    std::string version;

    json to_json() const;
    /// "# key: value" lines for CSV output.
    std::string comment_block() const;
};

extern const char* const tool_version;

}  // namespace ainf::io
