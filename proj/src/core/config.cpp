#include "core/config.hpp"

namespace mergm {

using nlohmann::json;

namespace {

[[noreturn]] void fail_field(const std::string& path, const std::string& msg) {
  fail_usage("config: " + path + ": " + msg);
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail_usage("config: not valid JSON");
  return j;
}

double require_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail_field(path, "expected a number");
  return j.get<double>();
}

std::uint64_t require_uint(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail_field(path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known, const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok |= key == k;
    if (!ok) fail_field(path + "." + key, "unknown field");
  }
}

}  // namespace

ModelSpec parse_model_spec(const json& model, const std::string& path) {
  if (!model.is_object()) fail_field(path, "expected an object");
  reject_unknown_keys(model, {"statistics"}, path);
  if (!model.contains("statistics")) fail_field(path + ".statistics", "missing");
  const json& stats = model["statistics"];
  if (!stats.is_array() || stats.empty()) fail_field(path + ".statistics", "expected a non-empty array");

  std::vector<StatisticDescriptor> descriptors;
  for (std::size_t k = 0; k < stats.size(); ++k) {
    const std::string entry_path = path + ".statistics[" + std::to_string(k) + "]";
    const json& entry = stats[k];
    if (!entry.is_object()) fail_field(entry_path, "expected an object");
    reject_unknown_keys(entry, {"kind", "decay", "attribute"}, entry_path);
    if (!entry.contains("kind") || !entry["kind"].is_string()) fail_field(entry_path + ".kind", "expected a string");
    StatisticDescriptor d;
    d.kind = stat_kind_from_name(entry["kind"].get<std::string>());
    if (entry.contains("decay")) d.decay = require_number(entry["decay"], entry_path + ".decay");
    if (entry.contains("attribute")) {
      if (!entry["attribute"].is_string()) fail_field(entry_path + ".attribute", "expected a string");
      d.attribute = entry["attribute"].get<std::string>();
    }
    descriptors.push_back(std::move(d));
  }
  return ModelSpec(std::move(descriptors));
}

ModelSpec parse_model_spec_text(const std::string& json_text) {
  const json j = parse_text(json_text);
  if (j.is_object() && j.contains("model")) return parse_model_spec(j["model"]);
  return parse_model_spec(j, "model");
}

NIWParams parse_prior(const json* prior, std::size_t dim, const std::string& path) {
  NIWParams p = default_prior(dim);
  if (prior == nullptr || prior->is_null()) return p;
  if (!prior->is_object()) fail_field(path, "expected an object");
  reject_unknown_keys(*prior, {"mu0", "kappa0", "lambda0", "nu0"}, path);

  if (prior->contains("mu0")) {
    const json& mu = (*prior)["mu0"];
    if (!mu.is_array() || mu.size() != dim)
      fail_field(path + ".mu0", "expected an array of length " + std::to_string(dim));
    for (std::size_t k = 0; k < dim; ++k)
      p.mu[static_cast<Eigen::Index>(k)] = require_number(mu[k], path + ".mu0[" + std::to_string(k) + "]");
  }
  if (prior->contains("kappa0")) p.kappa = require_number((*prior)["kappa0"], path + ".kappa0");
  if (prior->contains("nu0")) p.nu = require_number((*prior)["nu0"], path + ".nu0");
  if (prior->contains("lambda0")) {
    const json& lambda = (*prior)["lambda0"];
    if (!lambda.is_array() || lambda.size() != dim) fail_field(path + ".lambda0", "expected a " + std::to_string(dim) +
                                                               "x" + std::to_string(dim) + " matrix");
    for (std::size_t i = 0; i < dim; ++i) {
      const json& row = lambda[i];
      if (!row.is_array() || row.size() != dim)
        fail_field(path + ".lambda0[" + std::to_string(i) + "]", "expected a row of length " + std::to_string(dim));
      for (std::size_t j = 0; j < dim; ++j)
        p.lambda(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            require_number(row[j], path + ".lambda0[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  try {
    p.validate();
  } catch (const Error& e) {
    fail_field(path, e.what());
  }
  return p;
}

RunConfig parse_run_config(const json* run, const std::string& path) {
  RunConfig cfg;
  if (run == nullptr || run->is_null()) return cfg;
  if (!run->is_object()) fail_field(path, "expected an object");
  reject_unknown_keys(*run,
                      {"chains", "iterations", "burn_in", "thinning", "aux_steps_per_edge", "proposal", "threads",
                       "init_spread"},
                      path);

  if (run->contains("chains")) cfg.chains = require_uint((*run)["chains"], path + ".chains");
  if (run->contains("iterations")) cfg.iterations = require_uint((*run)["iterations"], path + ".iterations");
  if (run->contains("burn_in")) cfg.burn_in = require_number((*run)["burn_in"], path + ".burn_in");
  if (run->contains("thinning")) cfg.thinning = require_uint((*run)["thinning"], path + ".thinning");
  if (run->contains("aux_steps_per_edge"))
    cfg.aux.steps_per_edge =
        static_cast<std::uint32_t>(require_uint((*run)["aux_steps_per_edge"], path + ".aux_steps_per_edge"));
  if (run->contains("threads")) cfg.threads = require_uint((*run)["threads"], path + ".threads");
  if (run->contains("init_spread")) cfg.init_spread = require_number((*run)["init_spread"], path + ".init_spread");
  if (run->contains("proposal")) {
    const json& prop = (*run)["proposal"];
    const std::string prop_path = path + ".proposal";
    if (!prop.is_object()) fail_field(prop_path, "expected an object");
    reject_unknown_keys(prop, {"type", "gamma", "sigma"}, prop_path);
    const std::string type = prop.contains("type") ? prop["type"].get<std::string>() : "ads";
    if (type == "ads") {
      cfg.proposal.kind = ProposalConfig::Kind::ads;
      if (prop.contains("gamma")) cfg.proposal.ads_gamma = require_number(prop["gamma"], prop_path + ".gamma");
      if (prop.contains("sigma")) cfg.proposal.ads_sigma = require_number(prop["sigma"], prop_path + ".sigma");
    } else if (type == "rw") {
      cfg.proposal.kind = ProposalConfig::Kind::random_walk;
      if (prop.contains("gamma")) fail_field(prop_path + ".gamma", "not used by the rw proposal");
      if (prop.contains("sigma")) cfg.proposal.rw_sigma = require_number(prop["sigma"], prop_path + ".sigma");
    } else {
      fail_field(prop_path + ".type", "expected 'ads' or 'rw'");
    }
  }
  try {
    cfg.validate();
  } catch (const Error& e) {
    fail_field(path, e.what());
  }
  return cfg;
}

FitConfig parse_fit_config_text(const std::string& json_text) {
  const json j = parse_text(json_text);
  if (!j.is_object()) fail_usage("config: expected a JSON object");
  reject_unknown_keys(j, {"model", "prior", "run"}, "config");
  if (!j.contains("model")) fail_usage("config: model: missing");
  ModelSpec model = parse_model_spec(j["model"]);
  const std::size_t dim = model.dim();
  const json* prior = j.contains("prior") ? &j["prior"] : nullptr;
  const json* run = j.contains("run") ? &j["run"] : nullptr;
  return FitConfig{std::move(model), parse_prior(prior, dim, "prior"), parse_run_config(run)};
}

json model_spec_to_json(const ModelSpec& spec) {
  json stats = json::array();
  for (const auto& s : spec.statistics()) {
    json entry;
    entry["kind"] = stat_kind_name(s.kind);
    if (s.kind == StatKind::gwdegree || s.kind == StatKind::gwesp || s.kind == StatKind::gwnsp)
      entry["decay"] = s.decay;
    if (s.kind == StatKind::nodematch) entry["attribute"] = s.attribute;
    stats.push_back(std::move(entry));
  }
  return json{{"statistics", std::move(stats)}};
}

json fit_config_to_json(const FitConfig& cfg) {
  json prior;
  prior["mu0"] = std::vector<double>(cfg.prior.mu.data(), cfg.prior.mu.data() + cfg.prior.mu.size());
  prior["kappa0"] = cfg.prior.kappa;
  prior["nu0"] = cfg.prior.nu;
  json lambda = json::array();
  for (Eigen::Index i = 0; i < cfg.prior.lambda.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < cfg.prior.lambda.cols(); ++j) row.push_back(cfg.prior.lambda(i, j));
    lambda.push_back(std::move(row));
  }
  prior["lambda0"] = std::move(lambda);

  json run;
  run["chains"] = cfg.run.chains;
  run["iterations"] = cfg.run.iterations;
  run["burn_in"] = cfg.run.burn_in;
  run["thinning"] = cfg.run.thinning;
  run["aux_steps_per_edge"] = cfg.run.aux.steps_per_edge;
  run["threads"] = cfg.run.threads;
  run["init_spread"] = cfg.run.init_spread;
  json prop;
  if (cfg.run.proposal.kind == ProposalConfig::Kind::ads) {
    prop["type"] = "ads";
    prop["gamma"] = cfg.run.proposal.ads_gamma;
    prop["sigma"] = cfg.run.proposal.ads_sigma;
  } else {
    prop["type"] = "rw";
    prop["sigma"] = cfg.run.proposal.rw_sigma;
  }
  run["proposal"] = std::move(prop);

  return json{{"model", model_spec_to_json(cfg.model)}, {"prior", std::move(prior)}, {"run", std::move(run)}};
}

std::vector<Eigen::VectorXd> parse_phi_matrix(const json& j, std::size_t dim, const std::string& path) {
  if (!j.is_array() || j.empty()) fail_field(path, "expected a non-empty array of per-layer rows");
  std::vector<Eigen::VectorXd> phi;
  for (std::size_t w = 0; w < j.size(); ++w) {
    const json& row = j[w];
    const std::string row_path = path + "[" + std::to_string(w) + "]";
    if (!row.is_array() || row.size() != dim)
      fail_field(row_path, "expected a row of length " + std::to_string(dim));
    Eigen::VectorXd v(dim);
    for (std::size_t k = 0; k < dim; ++k)
      v[static_cast<Eigen::Index>(k)] = require_number(row[k], row_path + "[" + std::to_string(k) + "]");
    phi.push_back(std::move(v));
  }
  return phi;
}

}  // namespace mergm
