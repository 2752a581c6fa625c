#include "core/gof.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace mergm {

std::uint64_t weighted_degree(const WeightedNetwork& y, NodeId node) {
  if (node >= y.n_nodes()) fail_data("node id " + std::to_string(node) + " out of range");
  std::uint64_t sum = 0;
  for (NodeId j = 0; j < y.n_nodes(); ++j)
    if (j != node) sum += y.weight(node, j);
  return sum;
}

double empirical_quantile(const std::vector<double>& sorted, double level) {
  if (sorted.empty()) fail_usage("quantile of an empty sample");
  if (!(level >= 0.0 && level <= 1.0)) fail_usage("quantile level must lie in [0, 1]");
  const double pos = level * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = static_cast<std::size_t>(std::ceil(pos));
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

GofReport posterior_predictive_gof(const PosteriorSamples& samples, const ModelSpec& spec,
                                   const NodeAttributes* attrs, const WeightedNetwork& observed,
                                   std::size_t n_replicates, const SimControl& ctrl, std::uint64_t seed,
                                   std::size_t threads, std::vector<double> quantile_levels) {
  if (samples.draws.empty()) fail_usage("posterior sample set is empty");
  if (n_replicates < 1) fail_usage("need at least one replicate");
  if (samples.dim != spec.dim())
    fail_usage("posterior dimension " + std::to_string(samples.dim) + " does not match model dimension " +
               std::to_string(spec.dim()));
  if (!std::is_sorted(quantile_levels.begin(), quantile_levels.end()))
    fail_usage("quantile levels must be increasing");

  const std::size_t n = observed.n_nodes();
  GofReport report;
  report.quantile_levels = quantile_levels;
  report.observed.resize(n);
  for (NodeId v = 0; v < n; ++v) report.observed[v] = weighted_degree(observed, v);

  report.replicates.assign(n_replicates, {});
  const Rng root(seed);
  auto run_replicate = [&](std::size_t rep) {
    Rng rng = root.spawn(rep);
    const PosteriorDraw& draw = samples.draws[rng.uniform_int(samples.draws.size())];
    const LayerStack stack = simulate_stack(draw.phi, spec, attrs, n, ctrl, rng);
    const WeightedNetwork net = recompose(stack);
    std::vector<std::uint64_t> degrees(n);
    for (NodeId v = 0; v < n; ++v) degrees[v] = weighted_degree(net, v);
    report.replicates[rep] = std::move(degrees);
  };

  if (threads <= 1) {
    for (std::size_t rep = 0; rep < n_replicates; ++rep) run_replicate(rep);
  } else {
    const std::size_t n_workers = std::min(threads, n_replicates);
    std::vector<std::thread> workers;
    workers.reserve(n_workers);
    for (std::size_t t = 0; t < n_workers; ++t)
      workers.emplace_back([&, t]() {
        for (std::size_t rep = t; rep < n_replicates; rep += n_workers) run_replicate(rep);
      });
    for (auto& th : workers) th.join();
  }

  report.envelope.assign(n, std::vector<double>(quantile_levels.size(), 0.0));
  std::size_t inside = 0;
  std::vector<double> column(n_replicates);
  for (NodeId v = 0; v < n; ++v) {
    for (std::size_t rep = 0; rep < n_replicates; ++rep)
      column[rep] = static_cast<double>(report.replicates[rep][v]);
    std::sort(column.begin(), column.end());
    for (std::size_t q = 0; q < quantile_levels.size(); ++q)
      report.envelope[v][q] = empirical_quantile(column, quantile_levels[q]);
    const double obs = static_cast<double>(report.observed[v]);
    if (obs >= report.envelope[v].front() && obs <= report.envelope[v].back()) ++inside;
  }
  report.coverage = static_cast<double>(inside) / static_cast<double>(n);
  return report;
}

namespace {

SummaryRow make_row(std::string group, std::string name, std::uint32_t layer, std::uint32_t index,
                    std::vector<double> values, const std::vector<double>& levels) {
  SummaryRow row;
  row.group = std::move(group);
  row.name = std::move(name);
  row.layer = layer;
  row.index = index;
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  row.mean = mean;
  row.sd = values.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  std::sort(values.begin(), values.end());
  for (double level : levels) row.quantiles.push_back(empirical_quantile(values, level));
  return row;
}

}  // namespace

PosteriorSummary summarize_posterior(const PosteriorSamples& samples, const ModelSpec* spec,
                                     std::vector<double> quantile_levels) {
  if (samples.draws.empty()) fail_usage("posterior sample set is empty");
  PosteriorSummary summary;
  summary.quantile_levels = quantile_levels;

  std::vector<std::string> labels;
  if (spec != nullptr) {
    if (spec->dim() != samples.dim) fail_usage("model dimension does not match the posterior sample");
    labels = spec->labels();
  } else {
    for (std::size_t k = 0; k < samples.dim; ++k) labels.push_back("p" + std::to_string(k));
  }

  std::vector<double> values(samples.draws.size());
  for (std::size_t w = 0; w < samples.n_layers; ++w)
    for (std::size_t k = 0; k < samples.dim; ++k) {
      for (std::size_t d = 0; d < samples.draws.size(); ++d) values[d] = samples.draws[d].phi[w][k];
      summary.rows.push_back(make_row("phi", labels[k], static_cast<std::uint32_t>(w + 1),
                                      static_cast<std::uint32_t>(k), values, quantile_levels));
    }
  for (std::size_t k = 0; k < samples.dim; ++k) {
    for (std::size_t d = 0; d < samples.draws.size(); ++d) values[d] = samples.draws[d].mu[k];
    summary.rows.push_back(
        make_row("hyper", "mu_" + std::to_string(k) + "(" + labels[k] + ")", 0, static_cast<std::uint32_t>(k),
                 values, quantile_levels));
  }
  for (std::size_t i = 0; i < samples.dim; ++i)
    for (std::size_t j = i; j < samples.dim; ++j) {
      for (std::size_t d = 0; d < samples.draws.size(); ++d) values[d] = samples.draws[d].sigma(i, j);
      summary.rows.push_back(make_row("hyper", "sigma_" + std::to_string(i) + std::to_string(j), 0,
                                      static_cast<std::uint32_t>(i * samples.dim + j), values, quantile_levels));
    }
  return summary;
}

std::string format_summary_text(const PosteriorSummary& summary) {
  std::ostringstream os;
  os << "group layer parameter mean sd";
  for (double q : summary.quantile_levels) os << " q" << q;
  os << "\n";
  os.setf(std::ios::fixed);
  os.precision(3);
  for (const SummaryRow& row : summary.rows) {
    os << row.group << " ";
    if (row.group == "phi")
      os << row.layer << " ";
    else
      os << "- ";
    os << row.name << " " << row.mean << " " << row.sd;
    for (double q : row.quantiles) os << " " << q;
    os << "\n";
  }
  return os.str();
}

}  // namespace mergm
