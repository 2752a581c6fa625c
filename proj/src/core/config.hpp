#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "core/inference.hpp"
#include "core/statistics.hpp"

namespace mergm {

// Parsers for the documented JSON run configuration. Validation failures name
// the offending field path (e.g. "run.chains").

ModelSpec parse_model_spec(const nlohmann::json& model, const std::string& path = "model");
ModelSpec parse_model_spec_text(const std::string& json_text);

// Prior section; r comes from the model. Missing object or missing fields
// fall back to the defaults mu0 = 0, kappa0 = 1, Lambda0 = I, nu0 = r + 2.
NIWParams parse_prior(const nlohmann::json* prior, std::size_t dim, const std::string& path = "prior");

RunConfig parse_run_config(const nlohmann::json* run, const std::string& path = "run");

// Whole fit configuration: {"model": ..., "prior"?: ..., "run"?: ...}.
struct FitConfig {
  ModelSpec model;
  NIWParams prior;
  RunConfig run;
};
FitConfig parse_fit_config_text(const std::string& json_text);

// Resolved (all defaults materialized) JSON mirror, for run manifests.
nlohmann::json fit_config_to_json(const FitConfig& cfg);
nlohmann::json model_spec_to_json(const ModelSpec& spec);

// phi matrix for simulate: [[..r..], ... W rows ..].
std::vector<Eigen::VectorXd> parse_phi_matrix(const nlohmann::json& j, std::size_t dim, const std::string& path);

}  // namespace mergm
