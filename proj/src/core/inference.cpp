#include "core/inference.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

namespace mergm {

void RunConfig::validate() const {
  if (chains < 1) fail_usage("need at least one chain");
  if (proposal.kind == ProposalConfig::Kind::ads && chains < 3)
    fail_usage("the adaptive-direction proposal needs at least 3 chains (two distinct partners)");
  if (iterations < 1) fail_usage("need at least one iteration");
  if (!(burn_in >= 0.0 && burn_in < 1.0)) fail_usage("burn_in must lie in [0, 1)");
  if (thinning < 1) fail_usage("thinning must be >= 1");
  if (aux.steps_per_edge < 1) fail_usage("aux steps_per_edge must be >= 1");
  if (!(proposal.ads_sigma > 0.0) || !(proposal.rw_sigma > 0.0)) fail_usage("proposal jitter must be > 0");
  if (!(proposal.ads_gamma >= 0.0)) fail_usage("ads gamma must be >= 0");
  if (threads < 1) fail_usage("threads must be >= 1");
}

double PosteriorSamples::acceptance_rate(std::size_t chain, std::size_t layer) const {
  const std::uint64_t p = proposals.at(chain).at(layer);
  return p == 0 ? 0.0 : static_cast<double>(accepts.at(chain).at(layer)) / static_cast<double>(p);
}

NIWParams default_prior(std::size_t dim) {
  NIWParams prior;
  prior.mu = Eigen::VectorXd::Zero(dim);
  prior.kappa = 1.0;
  prior.lambda = Eigen::MatrixXd::Identity(dim, dim);
  prior.nu = static_cast<double>(dim) + 2.0;
  return prior;
}

Eigen::VectorXd ads_propose(const Eigen::VectorXd& current, const Eigen::VectorXd& other_a,
                            const Eigen::VectorXd& other_b, double gamma, double sigma, Rng& rng) {
  Eigen::VectorXd out = current + gamma * (other_a - other_b);
  for (Eigen::Index k = 0; k < out.size(); ++k) out[k] += sigma * rng.normal();
  return out;
}

ExchangeResult exchange_update_layer(const Eigen::VectorXd& phi_current, const Eigen::VectorXd& phi_proposed,
                                     LayerChain& aux_chain, const Eigen::VectorXd& observed_stats,
                                     const MvnDensity& hyper_density, const SimControl& aux, Rng& rng) {
  ExchangeResult result;

  aux_chain.set_params(phi_proposed);
  aux_chain.reset(false);
  aux_chain.run(static_cast<std::size_t>(aux.steps_per_edge) * aux_chain.candidate_count(), rng);
  const Eigen::VectorXd aux_stats = eval_statistics(aux_chain.state(), aux_chain.spec(), aux_chain.attrs());

  const double log_ratio = (phi_current - phi_proposed).dot(aux_stats - observed_stats) +
                           hyper_density.logpdf(phi_proposed) - hyper_density.logpdf(phi_current);
  if (!std::isfinite(log_ratio)) {
    result.phi = phi_current;
    result.nonfinite = true;
    return result;
  }
  if (std::log(rng.uniform_pos()) < log_ratio) {
    result.phi = phi_proposed;
    result.accepted = true;
  } else {
    result.phi = phi_current;
  }
  return result;
}

namespace {

struct ChainWorkspace {
  Rng rng;
  std::vector<Eigen::VectorXd> phi;  // W vectors
  HyperState hyper;
  std::vector<LayerChain> aux;  // one constrained chain per layer, reused
};

void pick_two_others(std::size_t self, std::size_t n_chains, Rng& rng, std::size_t& a, std::size_t& b) {
  a = rng.uniform_int(n_chains - 1);
  if (a >= self) ++a;
  b = rng.uniform_int(n_chains - 2);
  for (std::size_t taken : {std::min(self, a), std::max(self, a)})
    if (b >= taken) ++b;
}

}  // namespace

PosteriorSamples run_inference(const LayerStack& observed, const ModelSpec& spec, const NodeAttributes* attrs,
                               const NIWParams& prior, const RunConfig& cfg) {
  cfg.validate();
  prior.validate();
  const std::size_t r = spec.dim();
  if (prior.dim() != r) fail_usage("prior dimension " + std::to_string(prior.dim()) +
                                   " does not match model dimension " + std::to_string(r));
  const std::size_t W = observed.n_layers();
  const std::size_t H = cfg.chains;

  // Observed transition statistics and conditioning layers; layer 1 is
  // conditioned on the complete graph.
  const BinaryLayer complete = BinaryLayer::complete(observed.n_nodes());
  std::vector<const BinaryLayer*> lower(W);
  std::vector<Eigen::VectorXd> observed_stats(W);
  for (std::size_t w = 0; w < W; ++w) {
    lower[w] = (w == 0) ? &complete : &observed.layer(w);
    observed_stats[w] = transition_statistics(observed.layer(w + 1), *lower[w], spec, attrs);
  }

  // Chains start overdispersed around a crude data-informed center: the
  // edges coordinate (when present) at the smoothed survival logit
  // ln(p/(1-p)), p = (E_w + 1) / (E_{w-1} + 2), everything else at the prior
  // mean. This only seeds the walkers; the target is untouched.
  std::vector<Eigen::VectorXd> init_center(W, prior.mu);
  Eigen::Index edges_coord = -1;
  for (std::size_t k = 0; k < spec.statistics().size(); ++k)
    if (spec.statistics()[k].kind == StatKind::edges) edges_coord = static_cast<Eigen::Index>(k);
  if (edges_coord >= 0) {
    for (std::size_t w = 0; w < W; ++w) {
      const double lower_edges = static_cast<double>(lower[w]->edge_count());
      if (lower_edges == 0.0) continue;
      const double p = (static_cast<double>(observed.layer(w + 1).edge_count()) + 1.0) / (lower_edges + 2.0);
      init_center[w][edges_coord] = std::log(p / (1.0 - p));
    }
  }

  const Rng root(cfg.seed);
  std::vector<ChainWorkspace> chains;
  chains.reserve(H);
  for (std::size_t h = 0; h < H; ++h) {
    ChainWorkspace ws{root.spawn(h), {}, {}, {}};
    ws.phi.reserve(W);
    for (std::size_t w = 0; w < W; ++w) {
      Eigen::VectorXd init = init_center[w];
      for (Eigen::Index k = 0; k < init.size(); ++k) init[k] += cfg.init_spread * ws.rng.normal();
      ws.phi.push_back(std::move(init));
    }
    if (cfg.fixed_hyper) {
      ws.hyper = *cfg.fixed_hyper;
    } else {
      ws.hyper.mu = prior.mu;
      ws.hyper.sigma = (prior.nu > static_cast<double>(r) + 1.0)
                           ? Eigen::MatrixXd(prior.lambda / (prior.nu - static_cast<double>(r) - 1.0))
                           : prior.lambda;
    }
    ws.aux.reserve(W);
    for (std::size_t w = 0; w < W; ++w) ws.aux.emplace_back(*lower[w], spec, attrs);
    chains.push_back(std::move(ws));
  }

  PosteriorSamples out;
  out.n_layers = W;
  out.dim = r;
  out.n_chains = H;
  out.proposals.assign(H, std::vector<std::uint64_t>(W, 0));
  out.accepts.assign(H, std::vector<std::uint64_t>(W, 0));

  const std::uint64_t burn = static_cast<std::uint64_t>(std::floor(cfg.burn_in * static_cast<double>(cfg.iterations)));
  std::vector<std::vector<Eigen::VectorXd>> snapshot(H);
  std::vector<std::uint64_t> nonfinite_per_chain(H, 0);

  auto advance_chain = [&](std::size_t h) {
    ChainWorkspace& ws = chains[h];
    const MvnDensity hyper_density(ws.hyper.mu, ws.hyper.sigma);
    for (std::size_t w = 0; w < W; ++w) {
      if (lower[w]->edge_count() == 0) {
        // No free dyads: the likelihood is flat in phi_w, so the full
        // conditional is the N(mu, Sigma) prior and we draw it directly.
        ws.phi[w] = hyper_density.sample(ws.rng);
        ++out.proposals[h][w];
        ++out.accepts[h][w];
        continue;
      }
      Eigen::VectorXd proposed;
      if (cfg.proposal.kind == ProposalConfig::Kind::ads) {
        std::size_t a, b;
        pick_two_others(h, H, ws.rng, a, b);
        proposed = ads_propose(ws.phi[w], snapshot[a][w], snapshot[b][w], cfg.proposal.ads_gamma,
                               cfg.proposal.ads_sigma, ws.rng);
      } else {
        proposed = ws.phi[w];
        for (Eigen::Index k = 0; k < proposed.size(); ++k) proposed[k] += cfg.proposal.rw_sigma * ws.rng.normal();
      }
      const ExchangeResult res =
          exchange_update_layer(ws.phi[w], proposed, ws.aux[w], observed_stats[w], hyper_density, cfg.aux, ws.rng);
      ws.phi[w] = res.phi;
      ++out.proposals[h][w];
      if (res.accepted) ++out.accepts[h][w];
      if (res.nonfinite) ++nonfinite_per_chain[h];
    }
    if (!cfg.fixed_hyper) ws.hyper = sample_hyper(niw_full_conditional(prior, ws.phi), ws.rng);
    if (std::getenv("MERGM_TRACE") != nullptr) {
      double phimax = 0.0;
      for (const auto& p : ws.phi) phimax = std::max(phimax, p.cwiseAbs().maxCoeff());
      std::fprintf(stderr, "chain %zu phimax %.3g sigmax %.3g phi0 [%.3g %.3g] phi2 [%.3g %.3g]\n", h, phimax,
                   ws.hyper.sigma.cwiseAbs().maxCoeff(), ws.phi[0][0], ws.phi[0][1], ws.phi[W - 1][0],
                   ws.phi[W - 1][1]);
    }
  };

  for (std::uint64_t iter = 1; iter <= cfg.iterations; ++iter) {
    for (std::size_t h = 0; h < H; ++h) snapshot[h] = chains[h].phi;

    if (cfg.threads <= 1 || H == 1) {
      for (std::size_t h = 0; h < H; ++h) advance_chain(h);
    } else {
      // Each chain reads only the start-of-iteration snapshot and writes only
      // its own state and counter rows, so a fork-join over chain indices is
      // race-free and gives the same result as the sequential path.
      const std::size_t n_workers = std::min(cfg.threads, H);
      std::vector<std::thread> workers;
      workers.reserve(n_workers);
      for (std::size_t t = 0; t < n_workers; ++t) {
        workers.emplace_back([&, t]() {
          for (std::size_t h = t; h < H; h += n_workers) advance_chain(h);
        });
      }
      for (auto& th : workers) th.join();
    }

    if (iter > burn && (iter - burn) % cfg.thinning == 0) {
      for (std::size_t h = 0; h < H; ++h) {
        PosteriorDraw draw;
        draw.chain = static_cast<std::uint32_t>(h);
        draw.iteration = iter;
        draw.phi = chains[h].phi;
        draw.mu = chains[h].hyper.mu;
        draw.sigma = chains[h].hyper.sigma;
        out.draws.push_back(std::move(draw));
      }
    }
  }
  for (std::uint64_t nf : nonfinite_per_chain) out.nonfinite_rejects += nf;
  return out;
}

}  // namespace mergm
