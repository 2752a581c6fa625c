#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "core/network.hpp"
#include "core/rng.hpp"
#include "core/statistics.hpp"

namespace mergm {

// Controls for the constrained MH simulation. The chain runs
// steps_per_edge * |candidate set| proposals, initialized at the lower layer.
// init_empty is a diagnostics-only cold start; burn_in_fraction adds that
// fraction of extra up-front steps and only applies to cold starts.
struct SimControl {
  std::uint32_t steps_per_edge = 50;
  std::uint64_t seed = 0;
  double burn_in_fraction = 0.0;
  bool init_empty = false;
};

// One conditional-ERGM chain over the free dyads of a lower layer. Exposed so
// that callers drawing many replicates can reuse the candidate bookkeeping.
class LayerChain {
 public:
  LayerChain(const BinaryLayer& lower, const ModelSpec& spec, const NodeAttributes* attrs);

  void set_params(const Eigen::VectorXd& phi);
  // Reset to the initial state (the lower layer, or empty for cold starts).
  void reset(bool init_empty);
  void step(Rng& rng);
  void run(std::size_t steps, Rng& rng);

  const BinaryLayer& state() const { return state_; }
  std::size_t candidate_count() const { return candidates_.size(); }
  const ModelSpec& spec() const { return *spec_; }
  const NodeAttributes* attrs() const { return attrs_; }

 private:
  void toggle_lists(std::uint32_t cand_idx);

  const ModelSpec* spec_;  // not owned; must outlive the chain
  const NodeAttributes* attrs_;
  BinaryLayer lower_;
  BinaryLayer state_;
  std::vector<Dyad> candidates_;
  std::vector<std::uint32_t> present_, absent_;   // candidate indices by current value
  std::vector<std::uint32_t> slot_;               // candidate index -> position in its list
  std::vector<std::uint8_t> is_present_;
  ChangeStatCalculator delta_calc_;
  Eigen::VectorXd phi_;
  Eigen::VectorXd delta_;
};

// Algorithm-2 draw of layer y_{w+1} conditional on y_w. Dyads absent from
// `lower` are structural zeros; an empty lower layer returns an empty layer.
BinaryLayer simulate_layer(const BinaryLayer& lower, const Eigen::VectorXd& phi, const ModelSpec& spec,
                           const NodeAttributes* attrs, const SimControl& ctrl, Rng& rng);

// Full generative draw: layer 1 conditional on the complete graph, each
// further layer conditional on its predecessor. phi.size() determines W.
LayerStack simulate_stack(const std::vector<Eigen::VectorXd>& phi, const ModelSpec& spec,
                          const NodeAttributes* attrs, std::size_t n_nodes, const SimControl& ctrl, Rng& rng);

// Edges-only reparameterization phi = theta - ln(1 - e^theta), theta < 0.
double phi_from_theta(double theta);

// Conditional log-odds of dyad weight w_star vs 0 with the rest of the stack
// fixed: sum over w = 1..w_star of phi_w . change statistics in layer w.
double weighted_edge_logodds(Dyad dyad, std::uint32_t w_star, const std::vector<Eigen::VectorXd>& phi,
                             const LayerStack& stack, const ModelSpec& spec, const NodeAttributes* attrs);

}  // namespace mergm
