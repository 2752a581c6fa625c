#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "core/network.hpp"
#include "core/niw.hpp"
#include "core/rng.hpp"
#include "core/simulate.hpp"
#include "core/statistics.hpp"

namespace mergm {

struct ProposalConfig {
  enum class Kind { ads, random_walk };
  Kind kind = Kind::ads;
  double ads_gamma = 0.5;
  double ads_sigma = 0.025;
  double rw_sigma = 0.1;
};

struct RunConfig {
  std::size_t chains = 4;
  std::size_t iterations = 10000;
  double burn_in = 0.5;        // fraction of iterations discarded
  std::size_t thinning = 100;  // keep every k-th post-burn-in sweep
  SimControl aux;              // auxiliary-network simulation budget
  ProposalConfig proposal;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  double init_spread = 1.0;  // sd of the overdispersed chain initialization
  // When set, (mu, Sigma) stay fixed at this value and the Gibbs step is
  // skipped; used to target p(phi | y, mu, Sigma) directly.
  std::optional<HyperState> fixed_hyper;

  void validate() const;
};

struct PosteriorDraw {
  std::uint32_t chain = 0;      // 0-based
  std::uint64_t iteration = 0;  // 1-based sweep index
  std::vector<Eigen::VectorXd> phi;
  Eigen::VectorXd mu;
  Eigen::MatrixXd sigma;
};

struct PosteriorSamples {
  std::size_t n_layers = 0;
  std::size_t dim = 0;
  std::size_t n_chains = 0;
  std::vector<PosteriorDraw> draws;
  // proposals/accepts per (chain, layer); prior-redraws at empty conditioning
  // layers count as accepted proposals.
  std::vector<std::vector<std::uint64_t>> proposals;
  std::vector<std::vector<std::uint64_t>> accepts;
  std::uint64_t nonfinite_rejects = 0;

  double acceptance_rate(std::size_t chain, std::size_t layer) const;
};

// Parallel adaptive-direction move: current + gamma * (a - b) + N(0, sigma^2 I).
Eigen::VectorXd ads_propose(const Eigen::VectorXd& current, const Eigen::VectorXd& other_a,
                            const Eigen::VectorXd& other_b, double gamma, double sigma, Rng& rng);

struct ExchangeResult {
  Eigen::VectorXd phi;
  bool accepted = false;
  bool nonfinite = false;
};

// One exchange update of phi_w given a proposal: simulate an auxiliary layer
// at the proposed value conditional on the observed lower layer, then accept
// with the exchange ratio in log space. The prior ratio uses the single-layer
// normal factor, which the factorized joint prior reduces to.
ExchangeResult exchange_update_layer(const Eigen::VectorXd& phi_current, const Eigen::VectorXd& phi_proposed,
                                     LayerChain& aux_chain, const Eigen::VectorXd& observed_stats,
                                     const MvnDensity& hyper_density, const SimControl& aux, Rng& rng);

// Full posterior sweep (Algorithm 1 interleaved with the conjugate Gibbs
// update of (mu, Sigma)). Deterministic for a fixed (config, seed, data),
// independent of the thread count.
PosteriorSamples run_inference(const LayerStack& observed, const ModelSpec& spec, const NodeAttributes* attrs,
                               const NIWParams& prior, const RunConfig& cfg);

// Paper defaults: mu0 = 0, kappa0 = 1, Lambda0 = I, nu0 = r + 2.
NIWParams default_prior(std::size_t dim);

}  // namespace mergm
