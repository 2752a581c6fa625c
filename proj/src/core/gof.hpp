#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/inference.hpp"
#include "core/network.hpp"
#include "core/simulate.hpp"

namespace mergm {

// Sum of incident edge weights (strength).
std::uint64_t weighted_degree(const WeightedNetwork& y, NodeId node);

struct GofReport {
  std::vector<std::uint64_t> observed;                  // per node
  std::vector<std::vector<std::uint64_t>> replicates;   // [replicate][node]
  std::vector<double> quantile_levels;                  // e.g. 0.025, 0.5, 0.975
  std::vector<std::vector<double>> envelope;            // [node][quantile]
  double coverage = 0.0;  // fraction of nodes inside [first, last] quantile band
};

// Posterior-predictive weighted-degree diagnostic: per replicate, one
// posterior draw picked uniformly, a full stack simulated, recomposed and
// reduced to weighted degrees. Deterministic per (samples, seed), independent
// of the thread count.
GofReport posterior_predictive_gof(const PosteriorSamples& samples, const ModelSpec& spec,
                                   const NodeAttributes* attrs, const WeightedNetwork& observed,
                                   std::size_t n_replicates, const SimControl& ctrl, std::uint64_t seed,
                                   std::size_t threads = 1,
                                   std::vector<double> quantile_levels = {0.025, 0.5, 0.975});

struct SummaryRow {
  std::string group;   // "phi" or "hyper"
  std::string name;    // statistic label or mu_k / sigma_ij
  std::uint32_t layer = 0;  // 1..W for phi rows, 0 for hyper rows
  std::uint32_t index = 0;  // parameter index within the layer
  double mean = 0.0;
  double sd = 0.0;
  std::vector<double> quantiles;
};

struct PosteriorSummary {
  std::vector<double> quantile_levels;
  std::vector<SummaryRow> rows;
};

// Mean/SD/quantile tables per layer parameter and for the hierarchical state.
// Labels come from the model spec when given.
PosteriorSummary summarize_posterior(const PosteriorSamples& samples, const ModelSpec* spec = nullptr,
                                     std::vector<double> quantile_levels = {0.025, 0.5, 0.975});

// Type-7 (linear interpolation) empirical quantile of a sorted sample.
double empirical_quantile(const std::vector<double>& sorted, double level);

std::string format_summary_text(const PosteriorSummary& summary);

}  // namespace mergm
