#pragma once

#include <string>

#include <json.hpp>

#include "drmt/ensembles.hpp"
#include "drmt/stats.hpp"

namespace drmt {

using Json = nlohmann::ordered_json;

/// {"model": tag, "params": {...}}; unknown fields are rejected.
Json spec_to_json(const EnsembleSpec& spec);
EnsembleSpec spec_from_json(const Json& j);

Json dist_to_json(const ScalarDist& d);
ScalarDist dist_from_json(const Json& j);

/// {schema, experiment, model, params, seed, n, value, stderr, extra{...}}
Json estimate_to_json(const Estimate& e, const std::string& experiment,
                      const EnsembleSpec* spec = nullptr, Json extra = Json::object());

/// Batch-runner configuration with the published field set; unknown fields
/// are rejected.
struct ExperimentConfig {
    std::string experiment;
    EnsembleSpec spec = FibonacciSpec{};
    bool has_spec = false;
    std::vector<double> grid;
    std::uint64_t n = 0;
    double length = 0.0;
    int replicas = 1;
    std::uint64_t seed = 1;
    std::string out;
    Json raw = Json::object();
};
ExperimentConfig config_from_json(const Json& j);

/// "a:b:n" inclusive linear grid.
std::vector<double> parse_grid(const std::string& text);

} // namespace drmt
