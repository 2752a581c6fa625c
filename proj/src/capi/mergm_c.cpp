// C API implementation: thin exception-to-status shims over the core library.

#include "mergm/mergm.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <string>

#include "core/common.hpp"
#include "core/config.hpp"
#include "core/gof.hpp"
#include "core/inference.hpp"
#include "core/io.hpp"
#include "core/network.hpp"
#include "core/niw.hpp"
#include "core/simulate.hpp"
#include "core/statistics.hpp"

struct mergm_network {
  mergm::WeightedNetwork net;
};
struct mergm_stack {
  mergm::LayerStack stack;
};
struct mergm_attributes {
  mergm::NodeAttributes attrs;
};
struct mergm_model {
  mergm::ModelSpec spec;
};
struct mergm_posterior {
  mergm::PosteriorSamples samples;
};
struct mergm_gof {
  mergm::GofReport report;
};

namespace {

thread_local std::string g_last_error;

mergm_status to_status(mergm::ErrorKind kind) {
  switch (kind) {
    case mergm::ErrorKind::usage: return MERGM_ERR_USAGE;
    case mergm::ErrorKind::data: return MERGM_ERR_DATA;
    case mergm::ErrorKind::numeric: return MERGM_ERR_NUMERIC;
  }
  return MERGM_ERR_NUMERIC;
}

// Runs fn(), translating exceptions into status codes + last-error text.
template <typename Fn>
mergm_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return MERGM_OK;
  } catch (const mergm::Error& e) {
    g_last_error = e.what();
    return to_status(e.kind());
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return MERGM_ERR_NUMERIC;
  }
}

mergm_status require(bool ok, const char* msg) {
  if (ok) return MERGM_OK;
  g_last_error = msg;
  return MERGM_ERR_USAGE;
}

}  // namespace

extern "C" {

const char* mergm_version(void) { return mergm::kVersion; }

const char* mergm_last_error(void) { return g_last_error.c_str(); }

/* -- networks -------------------------------------------------------------- */

mergm_status mergm_network_read(const char* path, mergm_network** out) {
  if (mergm_status s = require(path && out, "path and out must be non-null")) return s;
  return guarded([&] { *out = new mergm_network{mergm::read_weighted_edgelist(path)}; });
}

mergm_status mergm_network_read_ordinalized(const char* path, const double* thresholds, size_t n_thresholds,
                                            mergm_network** out) {
  if (mergm_status s = require(path && out && (thresholds || n_thresholds == 0), "null argument")) return s;
  return guarded([&] {
    const mergm::SymmetricRealMatrix raw = mergm::read_real_edgelist(path);
    const std::vector<double> t(thresholds, thresholds + n_thresholds);
    *out = new mergm_network{mergm::ordinalize(raw, t)};
  });
}

mergm_status mergm_network_write(const mergm_network* net, const char* path) {
  if (mergm_status s = require(net && path, "net and path must be non-null")) return s;
  return guarded([&] { mergm::write_weighted_edgelist(net->net, path); });
}

mergm_status mergm_edgelist_weight_quantiles(const char* path, const double* levels, size_t n_levels, double* out) {
  if (mergm_status s = require(path && levels && out && n_levels > 0, "null argument")) return s;
  return guarded([&] {
    const mergm::SymmetricRealMatrix raw = mergm::read_real_edgelist(path);
    std::vector<double> weights;
    for (mergm::NodeId i = 0; i < raw.n_nodes(); ++i)
      for (mergm::NodeId j = i + 1; j < raw.n_nodes(); ++j)
        if (raw.value(i, j) != 0.0) weights.push_back(raw.value(i, j));
    if (weights.empty()) mergm::fail_data("edge list has no nonzero weights to take quantiles of");
    std::sort(weights.begin(), weights.end());
    for (std::size_t k = 0; k < n_levels; ++k) out[k] = mergm::empirical_quantile(weights, levels[k]);
  });
}

size_t mergm_network_nodes(const mergm_network* net) { return net ? net->net.n_nodes() : 0; }

uint32_t mergm_network_weight(const mergm_network* net, uint32_t i, uint32_t j) {
  if (!net || i >= net->net.n_nodes() || j >= net->net.n_nodes() || i == j) return 0;
  return net->net.weight(i, j);
}

uint32_t mergm_network_max_weight(const mergm_network* net) { return net ? net->net.max_weight() : 0; }

mergm_status mergm_network_weighted_degree(const mergm_network* net, uint32_t node, uint64_t* out) {
  if (mergm_status s = require(net && out, "net and out must be non-null")) return s;
  return guarded([&] { *out = mergm::weighted_degree(net->net, node); });
}

void mergm_network_free(mergm_network* net) { delete net; }

/* -- layer stacks ------------------------------------------------------------ */

mergm_status mergm_stack_decompose(const mergm_network* net, uint32_t n_layers, mergm_stack** out) {
  if (mergm_status s = require(net && out, "net and out must be non-null")) return s;
  return guarded([&] { *out = new mergm_stack{mergm::decompose(net->net, n_layers)}; });
}

mergm_status mergm_stack_recompose(const mergm_stack* stack, mergm_network** out) {
  if (mergm_status s = require(stack && out, "stack and out must be non-null")) return s;
  return guarded([&] { *out = new mergm_network{mergm::recompose(stack->stack)}; });
}

size_t mergm_stack_layers(const mergm_stack* stack) { return stack ? stack->stack.n_layers() : 0; }

mergm_status mergm_stack_edge_count(const mergm_stack* stack, uint32_t layer, size_t* out) {
  if (mergm_status s = require(stack && out, "stack and out must be non-null")) return s;
  return guarded([&] {
    if (layer < 1 || layer > stack->stack.n_layers()) mergm::fail_usage("layer index out of range 1..W");
    *out = stack->stack.layer(layer).edge_count();
  });
}

mergm_status mergm_stack_write_layer(const mergm_stack* stack, uint32_t layer, const char* path) {
  if (mergm_status s = require(stack && path, "stack and path must be non-null")) return s;
  return guarded([&] {
    if (layer < 1 || layer > stack->stack.n_layers()) mergm::fail_usage("layer index out of range 1..W");
    mergm::write_layer_edgelist(stack->stack.layer(layer), path);
  });
}

void mergm_stack_free(mergm_stack* stack) { delete stack; }

/* -- attributes --------------------------------------------------------------- */

mergm_status mergm_attributes_read(const char* path, mergm_attributes** out) {
  if (mergm_status s = require(path && out, "path and out must be non-null")) return s;
  return guarded([&] { *out = new mergm_attributes{mergm::read_attributes(path)}; });
}

void mergm_attributes_free(mergm_attributes* attrs) { delete attrs; }

/* -- model ---------------------------------------------------------------------- */

mergm_status mergm_model_from_json(const char* json_text, mergm_model** out) {
  if (mergm_status s = require(json_text && out, "json_text and out must be non-null")) return s;
  return guarded([&] { *out = new mergm_model{mergm::parse_model_spec_text(json_text)}; });
}

size_t mergm_model_dim(const mergm_model* model) { return model ? model->spec.dim() : 0; }

void mergm_model_free(mergm_model* model) { delete model; }

/* -- simulation -------------------------------------------------------------------- */

mergm_status mergm_simulate_stack(const mergm_model* model, const mergm_attributes* attrs_or_null, size_t n_nodes,
                                  size_t n_layers, const double* phi, uint32_t steps_per_edge, uint64_t seed,
                                  mergm_stack** out) {
  if (mergm_status s = require(model && phi && out, "model, phi and out must be non-null")) return s;
  return guarded([&] {
    if (n_layers == 0) mergm::fail_usage("need at least one layer");
    const std::size_t r = model->spec.dim();
    std::vector<Eigen::VectorXd> params;
    params.reserve(n_layers);
    for (std::size_t w = 0; w < n_layers; ++w) {
      Eigen::VectorXd v(r);
      for (std::size_t k = 0; k < r; ++k) v[static_cast<Eigen::Index>(k)] = phi[w * r + k];
      params.push_back(std::move(v));
    }
    mergm::SimControl ctrl;
    ctrl.steps_per_edge = steps_per_edge == 0 ? 50 : steps_per_edge;
    ctrl.seed = seed;
    mergm::Rng rng(seed);
    const mergm::NodeAttributes* attrs = attrs_or_null ? &attrs_or_null->attrs : nullptr;
    *out = new mergm_stack{mergm::simulate_stack(params, model->spec, attrs, n_nodes, ctrl, rng)};
  });
}

mergm_status mergm_sample_mvn(size_t dim, const double* mean, const double* cov, size_t n_draws, uint64_t seed,
                              double* out) {
  if (mergm_status s = require(mean && cov && out && dim > 0, "null argument or zero dimension")) return s;
  return guarded([&] {
    Eigen::VectorXd mu(dim);
    Eigen::MatrixXd sigma(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      mu[static_cast<Eigen::Index>(i)] = mean[i];
      for (std::size_t j = 0; j < dim; ++j)
        sigma(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = cov[i * dim + j];
    }
    const mergm::MvnDensity density(mu, sigma);
    mergm::Rng rng(seed);
    for (std::size_t d = 0; d < n_draws; ++d) {
      const Eigen::VectorXd draw = density.sample(rng);
      for (std::size_t k = 0; k < dim; ++k) out[d * dim + k] = draw[static_cast<Eigen::Index>(k)];
    }
  });
}

/* -- inference ------------------------------------------------------------------------ */

mergm_status mergm_fit(const mergm_stack* observed, const mergm_attributes* attrs_or_null, const char* config_json,
                       uint64_t seed, mergm_posterior** out) {
  if (mergm_status s = require(observed && config_json && out, "observed, config_json and out must be non-null"))
    return s;
  return guarded([&] {
    mergm::FitConfig cfg = mergm::parse_fit_config_text(config_json);
    cfg.run.seed = seed;
    const mergm::NodeAttributes* attrs = attrs_or_null ? &attrs_or_null->attrs : nullptr;
    *out = new mergm_posterior{mergm::run_inference(observed->stack, cfg.model, attrs, cfg.prior, cfg.run)};
  });
}

mergm_status mergm_config_resolve(const char* config_json, char** out_json) {
  if (mergm_status s = require(config_json && out_json, "null argument")) return s;
  return guarded([&] {
    const mergm::FitConfig cfg = mergm::parse_fit_config_text(config_json);
    const std::string text = mergm::fit_config_to_json(cfg).dump(2);
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out_json = buf;
  });
}

void mergm_string_free(char* s) { delete[] s; }

mergm_status mergm_posterior_write(const mergm_posterior* post, const char* phi_path, const char* hyper_path) {
  if (mergm_status s = require(post && phi_path && hyper_path, "null argument")) return s;
  return guarded([&] { mergm::write_posterior(post->samples, phi_path, hyper_path); });
}

mergm_status mergm_posterior_write_acceptance(const mergm_posterior* post, const char* path) {
  if (mergm_status s = require(post && path, "null argument")) return s;
  return guarded([&] { mergm::write_acceptance_report(post->samples, path); });
}

mergm_status mergm_posterior_read(const char* phi_path, const char* hyper_path, mergm_posterior** out) {
  if (mergm_status s = require(phi_path && out, "phi_path and out must be non-null")) return s;
  return guarded([&] {
    *out = new mergm_posterior{hyper_path ? mergm::read_posterior(phi_path, hyper_path)
                                          : mergm::read_posterior_phi_only(phi_path)};
  });
}

size_t mergm_posterior_draws(const mergm_posterior* post) { return post ? post->samples.draws.size() : 0; }
size_t mergm_posterior_layers(const mergm_posterior* post) { return post ? post->samples.n_layers : 0; }
size_t mergm_posterior_dim(const mergm_posterior* post) { return post ? post->samples.dim : 0; }

void mergm_posterior_free(mergm_posterior* post) { delete post; }

/* -- GOF --------------------------------------------------------------------------------- */

mergm_status mergm_gof_run(const mergm_posterior* post, const mergm_model* model,
                           const mergm_attributes* attrs_or_null, const mergm_network* observed, size_t replicates,
                           uint32_t steps_per_edge, uint64_t seed, size_t threads, mergm_gof** out) {
  if (mergm_status s = require(post && model && observed && out, "null argument")) return s;
  return guarded([&] {
    mergm::SimControl ctrl;
    ctrl.steps_per_edge = steps_per_edge == 0 ? 50 : steps_per_edge;
    const mergm::NodeAttributes* attrs = attrs_or_null ? &attrs_or_null->attrs : nullptr;
    *out = new mergm_gof{mergm::posterior_predictive_gof(post->samples, model->spec, attrs, observed->net,
                                                         replicates, ctrl, seed, threads < 1 ? 1 : threads)};
  });
}

mergm_status mergm_gof_write(const mergm_gof* gof, const char* envelope_path, const char* replicates_path,
                             const char* summary_path) {
  if (mergm_status s = require(gof && envelope_path && replicates_path && summary_path, "null argument")) return s;
  return guarded([&] { mergm::write_gof_report(gof->report, envelope_path, replicates_path, summary_path); });
}

double mergm_gof_coverage(const mergm_gof* gof) { return gof ? gof->report.coverage : 0.0; }

void mergm_gof_free(mergm_gof* gof) { delete gof; }

/* -- summaries ------------------------------------------------------------------------------ */

mergm_status mergm_summary_write(const mergm_posterior* post, const mergm_model* model_or_null, const char* csv_path,
                                 const char* text_path) {
  if (mergm_status s = require(post && csv_path && text_path, "null argument")) return s;
  return guarded([&] {
    const mergm::ModelSpec* spec = model_or_null ? &model_or_null->spec : nullptr;
    const mergm::PosteriorSummary summary = mergm::summarize_posterior(post->samples, spec);
    mergm::write_summary_csv(summary, csv_path);
    mergm::atomic_write_text(text_path, mergm::format_summary_text(summary));
  });
}

}  // extern "C"
