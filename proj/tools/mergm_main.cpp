// mergm command-line tool. Talks to the library exclusively through the C API
// in mergm/mergm.h; owns argument parsing, run configuration files, and the
// run manifests that make every invocation reproducible.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mergm/mergm.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "mergm: " << msg << "\n";
  std::exit(code);
}

void check(mergm_status status) {
  if (status == MERGM_OK) return;
  die(static_cast<int>(status), mergm_last_error());
}

// Unique-ptr wrappers over the C handles.
template <typename T, void (*F)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { F(p); }
};
using NetworkPtr = std::unique_ptr<mergm_network, HandleDeleter<mergm_network, mergm_network_free>>;
using StackPtr = std::unique_ptr<mergm_stack, HandleDeleter<mergm_stack, mergm_stack_free>>;
using AttributesPtr = std::unique_ptr<mergm_attributes, HandleDeleter<mergm_attributes, mergm_attributes_free>>;
using ModelPtr = std::unique_ptr<mergm_model, HandleDeleter<mergm_model, mergm_model_free>>;
using PosteriorPtr = std::unique_ptr<mergm_posterior, HandleDeleter<mergm_posterior, mergm_posterior_free>>;
using GofPtr = std::unique_ptr<mergm_gof, HandleDeleter<mergm_gof, mergm_gof_free>>;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 0x632b'e59b'd9b4'e019ULL));
}

std::string fnv1a64_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kExitData, "cannot open '" + path.string() + "'");
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    for (std::streamsize k = 0; k < in.gcount(); ++k) {
      hash ^= static_cast<unsigned char>(buf[k]);
      hash *= 0x100000001b3ULL;
    }
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(hash));
  return out;
}

void atomic_write(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) die(kExitData, "cannot write '" + tmp.string() + "'");
    out << content;
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) die(kExitData, "cannot rename '" + tmp.string() + "': " + ec.message());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kExitData, "cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

// Collects everything a manifest needs while a subcommand runs.
class ManifestBuilder {
 public:
  ManifestBuilder(std::string subcommand, std::uint64_t seed, fs::path out_dir)
      : start_(std::chrono::steady_clock::now()), out_dir_(std::move(out_dir)) {
    manifest_["tool"] = "mergm";
    manifest_["version"] = mergm_version();
    manifest_["subcommand"] = std::move(subcommand);
    manifest_["seed"] = seed;
    manifest_["started_utc"] = utc_timestamp();
  }

  void set_args(json args) { manifest_["args"] = std::move(args); }
  void set_config(json config) { manifest_["config"] = std::move(config); }

  void add_input(const fs::path& path) {
    manifest_["inputs"].push_back({{"path", path.string()}, {"fnv1a64", fnv1a64_file(path)}});
  }
  void add_output(const std::string& name) { manifest_["outputs"].push_back(name); }

  void write() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    manifest_["timings"]["total_seconds"] = std::chrono::duration<double>(elapsed).count();
    atomic_write(out_dir_ / "manifest.json", manifest_.dump(2) + "\n");
  }

 private:
  json manifest_;
  std::chrono::steady_clock::time_point start_;
  fs::path out_dir_;
};

// A --config file may be a plain configuration or a previous run's manifest;
// manifests are recognized by their "tool" marker and supply the stored
// config, args, and seed so that a run can be reproduced exactly.
struct LoadedConfig {
  json config;               // the effective configuration (may be empty object)
  json manifest_args;        // args stored in the manifest, if any
  std::optional<std::uint64_t> manifest_seed;
};

LoadedConfig load_config(const std::string& path, const std::string& subcommand) {
  LoadedConfig out;
  out.config = json::object();
  if (path.empty()) return out;
  json j = json::parse(read_file(path), nullptr, false);
  if (j.is_discarded()) die(kExitUsage, "config '" + path + "' is not valid JSON");
  if (j.is_object() && j.value("tool", "") == "mergm") {
    if (j.value("subcommand", "") != subcommand)
      die(kExitUsage, "manifest '" + path + "' was written by subcommand '" + j.value("subcommand", "") +
                          "', not '" + subcommand + "'");
    out.config = j.value("config", json::object());
    out.manifest_args = j.value("args", json::object());
    if (j.contains("seed")) out.manifest_seed = j["seed"].get<std::uint64_t>();
    return out;
  }
  out.config = std::move(j);
  return out;
}

fs::path prepare_out_dir(const std::string& out) {
  if (out.empty()) die(kExitUsage, "--out is required");
  fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) die(kExitData, "cannot create output directory '" + out + "': " + ec.message());
  return dir;
}

// Reads the observed network, ordinalizing raw weights when thresholds or
// quantile levels are given, and reports the thresholds actually used.
NetworkPtr load_network(const std::string& data, const std::vector<double>& thresholds,
                        const std::vector<double>& quantiles, std::vector<double>& used_thresholds) {
  mergm_network* raw = nullptr;
  if (!thresholds.empty() && !quantiles.empty()) die(kExitUsage, "--thresholds and --quantiles are exclusive");
  if (!thresholds.empty()) {
    used_thresholds = thresholds;
    check(mergm_network_read_ordinalized(data.c_str(), thresholds.data(), thresholds.size(), &raw));
  } else if (!quantiles.empty()) {
    used_thresholds.resize(quantiles.size());
    check(mergm_edgelist_weight_quantiles(data.c_str(), quantiles.data(), quantiles.size(), used_thresholds.data()));
    check(mergm_network_read_ordinalized(data.c_str(), used_thresholds.data(), used_thresholds.size(), &raw));
  } else {
    used_thresholds.clear();
    check(mergm_network_read(data.c_str(), &raw));
  }
  return NetworkPtr(raw);
}

ModelPtr load_model(const json& config) {
  if (!config.contains("model")) die(kExitUsage, "config: model: missing");
  mergm_model* model = nullptr;
  check(mergm_model_from_json(config["model"].dump().c_str(), &model));
  return ModelPtr(model);
}

AttributesPtr load_attributes(const std::string& path) {
  if (path.empty()) return nullptr;
  mergm_attributes* attrs = nullptr;
  check(mergm_attributes_read(path.c_str(), &attrs));
  return AttributesPtr(attrs);
}

struct CommonArgs {
  std::string config_path;
  std::string out;
  std::uint64_t seed = 1;
  bool seed_given = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "JSON configuration (or a previous run's manifest.json)");
  cmd->add_option("--out", args.out, "output directory")->required();
  cmd->add_option("--seed", args.seed, "RNG seed")->each([&args](const std::string&) { args.seed_given = true; });
}

// Flag fallback: values stored in a manifest win over defaults but lose to
// explicit flags.
template <typename T>
void fill_from_manifest(const json& args, const char* key, T& value, bool explicitly_set) {
  if (!explicitly_set && args.contains(key)) value = args[key].get<T>();
}

int cmd_decompose(CommonArgs& common, std::string data, std::vector<double> thresholds,
                  std::vector<double> quantiles, std::uint32_t layers, bool do_recompose, bool flags_given[4]) {
  LoadedConfig loaded = load_config(common.config_path, "decompose");
  fill_from_manifest(loaded.manifest_args, "data", data, flags_given[0]);
  fill_from_manifest(loaded.manifest_args, "thresholds", thresholds, flags_given[1]);
  fill_from_manifest(loaded.manifest_args, "quantiles", quantiles, flags_given[2]);
  fill_from_manifest(loaded.manifest_args, "layers", layers, flags_given[3]);
  if (loaded.manifest_seed && !common.seed_given) common.seed = *loaded.manifest_seed;
  if (data.empty()) die(kExitUsage, "--data is required");

  const fs::path out_dir = prepare_out_dir(common.out);
  ManifestBuilder manifest("decompose", common.seed, out_dir);
  manifest.add_input(data);

  std::vector<double> used_thresholds;
  NetworkPtr net = load_network(data, thresholds, quantiles, used_thresholds);
  const std::uint32_t W = layers > 0 ? layers : mergm_network_max_weight(net.get());
  if (W == 0) die(kExitData, "network has no edges and no --layers was given");

  mergm_stack* raw_stack = nullptr;
  check(mergm_stack_decompose(net.get(), W, &raw_stack));
  StackPtr stack(raw_stack);

  std::ostringstream summary;
  summary << "layer,edges\n";
  for (std::uint32_t w = 1; w <= W; ++w) {
    const std::string name = "layer_" + std::to_string(w) + ".csv";
    check(mergm_stack_write_layer(stack.get(), w, (out_dir / name).string().c_str()));
    manifest.add_output(name);
    size_t edges = 0;
    check(mergm_stack_edge_count(stack.get(), w, &edges));
    summary << w << "," << edges << "\n";
    std::cout << "layer " << w << ": " << edges << " edges\n";
  }
  atomic_write(out_dir / "summary.csv", summary.str());
  manifest.add_output("summary.csv");

  if (do_recompose) {
    mergm_network* recomposed = nullptr;
    check(mergm_stack_recompose(stack.get(), &recomposed));
    NetworkPtr rec(recomposed);
    check(mergm_network_write(rec.get(), (out_dir / "recomposed.csv").string().c_str()));
    manifest.add_output("recomposed.csv");
  }

  json args{{"data", data}, {"layers", W}, {"recompose", do_recompose}};
  if (!used_thresholds.empty()) args["thresholds"] = used_thresholds;
  if (!quantiles.empty()) args["quantiles"] = quantiles;
  manifest.set_args(std::move(args));
  manifest.set_config(loaded.config);
  manifest.write();
  return kExitOk;
}

int cmd_simulate(CommonArgs& common, std::size_t replicates, bool write_layers, bool flags_given[2]) {
  LoadedConfig loaded = load_config(common.config_path, "simulate");
  fill_from_manifest(loaded.manifest_args, "replicates", replicates, flags_given[0]);
  fill_from_manifest(loaded.manifest_args, "write_layers", write_layers, flags_given[1]);
  if (loaded.manifest_seed && !common.seed_given) common.seed = *loaded.manifest_seed;
  const json& config = loaded.config;
  if (config.empty()) die(kExitUsage, "simulate needs --config with model, nodes and phi");

  ModelPtr model = load_model(config);
  const std::size_t dim = mergm_model_dim(model.get());
  if (!config.contains("nodes") || !config["nodes"].is_number_unsigned())
    die(kExitUsage, "config: nodes: expected a positive integer");
  const std::size_t nodes = config["nodes"].get<std::size_t>();
  const std::uint32_t steps = config.value("steps_per_edge", 50u);

  AttributesPtr attrs = load_attributes(config.value("attributes", ""));
  if (config.contains("attributes")) {
    // attribute file is an input worth digesting
  }

  // phi comes either as an explicit W x r matrix or as per-replicate draws
  // from a normal with the given mean and covariance.
  std::vector<double> phi_flat;
  std::size_t W = 0;
  const bool draw_phi = config.contains("draw_phi_from");
  if (config.contains("phi") == draw_phi) die(kExitUsage, "config: give exactly one of phi or draw_phi_from");
  if (!draw_phi) {
    const json& phi = config["phi"];
    if (!phi.is_array() || phi.empty()) die(kExitUsage, "config: phi: expected a non-empty array of rows");
    W = phi.size();
    for (const auto& row : phi) {
      if (!row.is_array() || row.size() != dim)
        die(kExitUsage, "config: phi: each row needs " + std::to_string(dim) + " entries");
      for (const auto& v : row) phi_flat.push_back(v.get<double>());
    }
  } else {
    const json& d = config["draw_phi_from"];
    if (!d.contains("layers") || !d["layers"].is_number_unsigned())
      die(kExitUsage, "config: draw_phi_from.layers: expected a positive integer");
    W = d["layers"].get<std::size_t>();
  }

  const fs::path out_dir = prepare_out_dir(common.out);
  ManifestBuilder manifest("simulate", common.seed, out_dir);
  if (config.contains("attributes")) manifest.add_input(config["attributes"].get<std::string>());

  std::ostringstream summary;
  summary << "replicate,layer,edges\n";
  for (std::size_t rep = 0; rep < replicates; ++rep) {
    std::vector<double> phi = phi_flat;
    if (draw_phi) {
      const json& d = config["draw_phi_from"];
      std::vector<double> mu(dim), cov(dim * dim);
      for (std::size_t k = 0; k < dim; ++k) mu[k] = d["mu"].at(k).get<double>();
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) cov[i * dim + j] = d["sigma"].at(i).at(j).get<double>();
      phi.resize(W * dim);
      check(mergm_sample_mvn(dim, mu.data(), cov.data(), W, derive_seed(common.seed, 1000 + rep), phi.data()));
    }
    mergm_stack* raw_stack = nullptr;
    check(mergm_simulate_stack(model.get(), attrs.get(), nodes, W, phi.data(), steps,
                               derive_seed(common.seed, rep), &raw_stack));
    StackPtr stack(raw_stack);

    for (std::uint32_t w = 1; w <= W; ++w) {
      size_t edges = 0;
      check(mergm_stack_edge_count(stack.get(), w, &edges));
      summary << rep << "," << w << "," << edges << "\n";
      if (write_layers) {
        const std::string name = "replicate_" + std::to_string(rep) + "_layer_" + std::to_string(w) + ".csv";
        check(mergm_stack_write_layer(stack.get(), w, (out_dir / name).string().c_str()));
        manifest.add_output(name);
      }
    }
    mergm_network* raw_net = nullptr;
    check(mergm_stack_recompose(stack.get(), &raw_net));
    NetworkPtr net(raw_net);
    const std::string name = "replicate_" + std::to_string(rep) + ".csv";
    check(mergm_network_write(net.get(), (out_dir / name).string().c_str()));
    manifest.add_output(name);
  }
  atomic_write(out_dir / "summary.csv", summary.str());
  manifest.add_output("summary.csv");

  manifest.set_args(json{{"replicates", replicates}, {"write_layers", write_layers}});
  manifest.set_config(config);
  manifest.write();
  return kExitOk;
}

struct DataArgs {
  std::string data;
  std::string attributes;
  std::vector<double> thresholds;
  std::vector<double> quantiles;
  std::uint32_t layers = 0;
};

void add_data_args(CLI::App* cmd, DataArgs& args) {
  cmd->add_option("--data", args.data, "weighted edge list CSV");
  cmd->add_option("--attributes", args.attributes, "node attribute CSV");
  cmd->add_option("--thresholds", args.thresholds, "ordinalization thresholds for real-valued data")->delimiter(',');
  cmd->add_option("--quantiles", args.quantiles, "quantile levels that pick the thresholds")->delimiter(',');
  cmd->add_option("--layers", args.layers, "layer count W (default: max observed weight)");
}

void fill_data_from_manifest(const json& margs, DataArgs& args, CLI::App* cmd) {
  fill_from_manifest(margs, "data", args.data, cmd->count("--data") > 0);
  fill_from_manifest(margs, "attributes", args.attributes, cmd->count("--attributes") > 0);
  fill_from_manifest(margs, "thresholds", args.thresholds, cmd->count("--thresholds") > 0);
  fill_from_manifest(margs, "quantiles", args.quantiles, cmd->count("--quantiles") > 0);
  fill_from_manifest(margs, "layers", args.layers, cmd->count("--layers") > 0);
}

json data_args_json(const DataArgs& args, const std::vector<double>& used_thresholds, std::uint32_t W) {
  json j{{"data", args.data}, {"layers", W}};
  if (!args.attributes.empty()) j["attributes"] = args.attributes;
  if (!used_thresholds.empty()) j["thresholds"] = used_thresholds;
  if (!args.quantiles.empty()) j["quantiles"] = args.quantiles;
  return j;
}

int cmd_fit(CommonArgs& common, DataArgs& data_args, CLI::App* cmd) {
  LoadedConfig loaded = load_config(common.config_path, "fit");
  fill_data_from_manifest(loaded.manifest_args, data_args, cmd);
  if (loaded.manifest_seed && !common.seed_given) common.seed = *loaded.manifest_seed;
  if (data_args.data.empty()) die(kExitUsage, "--data is required");
  if (loaded.config.empty()) die(kExitUsage, "fit needs --config with at least a model");

  // Resolve (and validate) the configuration up front so the manifest stores
  // every default explicitly.
  char* resolved_text = nullptr;
  check(mergm_config_resolve(loaded.config.dump().c_str(), &resolved_text));
  json resolved = json::parse(resolved_text);
  mergm_string_free(resolved_text);

  const fs::path out_dir = prepare_out_dir(common.out);
  ManifestBuilder manifest("fit", common.seed, out_dir);
  manifest.add_input(data_args.data);
  if (!data_args.attributes.empty()) manifest.add_input(data_args.attributes);

  std::vector<double> used_thresholds;
  NetworkPtr net = load_network(data_args.data, data_args.thresholds, data_args.quantiles, used_thresholds);
  const std::uint32_t W = data_args.layers > 0 ? data_args.layers : mergm_network_max_weight(net.get());
  if (W == 0) die(kExitData, "network has no edges and no --layers was given");
  mergm_stack* raw_stack = nullptr;
  check(mergm_stack_decompose(net.get(), W, &raw_stack));
  StackPtr stack(raw_stack);

  AttributesPtr attrs = load_attributes(data_args.attributes);
  ModelPtr model = load_model(resolved);

  mergm_posterior* raw_post = nullptr;
  check(mergm_fit(stack.get(), attrs.get(), resolved.dump().c_str(), common.seed, &raw_post));
  PosteriorPtr post(raw_post);

  check(mergm_posterior_write(post.get(), (out_dir / "posterior_phi.csv").string().c_str(),
                              (out_dir / "posterior_hyper.csv").string().c_str()));
  check(mergm_posterior_write_acceptance(post.get(), (out_dir / "acceptance.csv").string().c_str()));
  manifest.add_output("posterior_phi.csv");
  manifest.add_output("posterior_hyper.csv");
  manifest.add_output("acceptance.csv");
  std::cout << "fit: " << mergm_posterior_draws(post.get()) << " retained draws over "
            << mergm_posterior_layers(post.get()) << " layers\n";

  manifest.set_args(data_args_json(data_args, used_thresholds, W));
  manifest.set_config(resolved);
  manifest.write();
  return kExitOk;
}

int cmd_gof(CommonArgs& common, DataArgs& data_args, std::string posterior, std::size_t replicates,
            std::size_t threads, CLI::App* cmd) {
  LoadedConfig loaded = load_config(common.config_path, "gof");
  fill_data_from_manifest(loaded.manifest_args, data_args, cmd);
  fill_from_manifest(loaded.manifest_args, "posterior", posterior, cmd->count("--posterior") > 0);
  fill_from_manifest(loaded.manifest_args, "replicates", replicates, cmd->count("--replicates") > 0);
  if (loaded.manifest_seed && !common.seed_given) common.seed = *loaded.manifest_seed;
  if (data_args.data.empty()) die(kExitUsage, "--data is required");
  if (posterior.empty()) die(kExitUsage, "--posterior is required");
  if (loaded.config.empty()) die(kExitUsage, "gof needs --config with the model that was fitted");

  const fs::path out_dir = prepare_out_dir(common.out);
  ManifestBuilder manifest("gof", common.seed, out_dir);
  manifest.add_input(data_args.data);
  manifest.add_input(posterior);
  if (!data_args.attributes.empty()) manifest.add_input(data_args.attributes);

  std::vector<double> used_thresholds;
  NetworkPtr net = load_network(data_args.data, data_args.thresholds, data_args.quantiles, used_thresholds);
  AttributesPtr attrs = load_attributes(data_args.attributes);
  ModelPtr model = load_model(loaded.config);

  mergm_posterior* raw_post = nullptr;
  check(mergm_posterior_read(posterior.c_str(), nullptr, &raw_post));
  PosteriorPtr post(raw_post);

  const std::uint32_t steps = loaded.config.value("steps_per_edge", 50u);
  mergm_gof* raw_gof = nullptr;
  check(mergm_gof_run(post.get(), model.get(), attrs.get(), net.get(), replicates, steps, common.seed, threads,
                      &raw_gof));
  GofPtr gof(raw_gof);

  check(mergm_gof_write(gof.get(), (out_dir / "gof_envelope.csv").string().c_str(),
                        (out_dir / "gof_replicates.csv").string().c_str(),
                        (out_dir / "gof_summary.csv").string().c_str()));
  manifest.add_output("gof_envelope.csv");
  manifest.add_output("gof_replicates.csv");
  manifest.add_output("gof_summary.csv");
  std::cout << "gof: coverage " << mergm_gof_coverage(gof.get()) << "\n";

  json args = data_args_json(data_args, used_thresholds, data_args.layers);
  args["posterior"] = posterior;
  args["replicates"] = replicates;
  manifest.set_args(std::move(args));
  manifest.set_config(loaded.config);
  manifest.write();
  return kExitOk;
}

int cmd_summarize(CommonArgs& common, std::string posterior, std::string hyper, CLI::App* cmd) {
  LoadedConfig loaded = load_config(common.config_path, "summarize");
  fill_from_manifest(loaded.manifest_args, "posterior", posterior, cmd->count("--posterior") > 0);
  fill_from_manifest(loaded.manifest_args, "hyper", hyper, cmd->count("--hyper") > 0);
  if (loaded.manifest_seed && !common.seed_given) common.seed = *loaded.manifest_seed;
  if (posterior.empty()) die(kExitUsage, "--posterior is required");

  const fs::path out_dir = prepare_out_dir(common.out);
  ManifestBuilder manifest("summarize", common.seed, out_dir);
  manifest.add_input(posterior);
  if (!hyper.empty()) manifest.add_input(hyper);

  mergm_posterior* raw_post = nullptr;
  check(mergm_posterior_read(posterior.c_str(), hyper.empty() ? nullptr : hyper.c_str(), &raw_post));
  PosteriorPtr post(raw_post);

  ModelPtr model;
  if (loaded.config.contains("model")) model = load_model(loaded.config);

  check(mergm_summary_write(post.get(), model.get(), (out_dir / "summary.csv").string().c_str(),
                            (out_dir / "summary.txt").string().c_str()));
  manifest.add_output("summary.csv");
  manifest.add_output("summary.txt");

  manifest.set_args(json{{"posterior", posterior}, {"hyper", hyper}});
  manifest.set_config(loaded.config);
  manifest.write();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchical multilayer ERGMs for ordinal weighted networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", mergm_version());

  // decompose
  auto* dec = app.add_subcommand("decompose", "split a weighted network into nested binary layers");
  CommonArgs dec_common;
  add_common(dec, dec_common);
  std::string dec_data;
  std::vector<double> dec_thresholds, dec_quantiles;
  std::uint32_t dec_layers = 0;
  bool dec_recompose = false;
  dec->add_option("--data", dec_data, "weighted edge list CSV");
  dec->add_option("--thresholds", dec_thresholds, "ordinalization thresholds")->delimiter(',');
  dec->add_option("--quantiles", dec_quantiles, "quantile levels that pick the thresholds")->delimiter(',');
  dec->add_option("--layers", dec_layers, "layer count W (default: max observed weight)");
  dec->add_flag("--recompose", dec_recompose, "also write the recomposed weighted network");

  // simulate
  auto* sim = app.add_subcommand("simulate", "draw multilayer networks from the generative model");
  CommonArgs sim_common;
  add_common(sim, sim_common);
  std::size_t sim_replicates = 1;
  bool sim_write_layers = false;
  sim->add_option("--replicates", sim_replicates, "number of independent draws");
  sim->add_flag("--write-layers", sim_write_layers, "write each binary layer as well");

  // fit
  auto* fit = app.add_subcommand("fit", "sample the hierarchical posterior");
  CommonArgs fit_common;
  add_common(fit, fit_common);
  DataArgs fit_data;
  add_data_args(fit, fit_data);

  // gof
  auto* gof = app.add_subcommand("gof", "posterior-predictive weighted-degree diagnostic");
  CommonArgs gof_common;
  add_common(gof, gof_common);
  DataArgs gof_data;
  add_data_args(gof, gof_data);
  std::string gof_posterior;
  std::size_t gof_replicates = 200;
  std::size_t gof_threads = 1;
  gof->add_option("--posterior", gof_posterior, "posterior_phi.csv from a fit run");
  gof->add_option("--replicates", gof_replicates, "posterior-predictive replicates");
  gof->add_option("--threads", gof_threads, "worker threads for replicate simulation");

  // summarize
  auto* sum = app.add_subcommand("summarize", "mean/SD/quantile tables for a posterior sample");
  CommonArgs sum_common;
  add_common(sum, sum_common);
  std::string sum_posterior, sum_hyper;
  sum->add_option("--posterior", sum_posterior, "posterior_phi.csv");
  sum->add_option("--hyper", sum_hyper, "posterior_hyper.csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (dec->parsed()) {
      bool given[4] = {dec->count("--data") > 0, dec->count("--thresholds") > 0, dec->count("--quantiles") > 0,
                       dec->count("--layers") > 0};
      return cmd_decompose(dec_common, dec_data, dec_thresholds, dec_quantiles, dec_layers, dec_recompose, given);
    }
    if (sim->parsed()) {
      bool given[2] = {sim->count("--replicates") > 0, sim->count("--write-layers") > 0};
      return cmd_simulate(sim_common, sim_replicates, sim_write_layers, given);
    }
    if (fit->parsed()) return cmd_fit(fit_common, fit_data, fit);
    if (gof->parsed()) return cmd_gof(gof_common, gof_data, gof_posterior, gof_replicates, gof_threads, gof);
    if (sum->parsed()) return cmd_summarize(sum_common, sum_posterior, sum_hyper, sum);
  } catch (const std::exception& e) {
    die(kExitNumeric, std::string("internal error: ") + e.what());
  }
  return kExitUsage;
}
