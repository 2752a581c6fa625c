#include "core/simulate.hpp"

#include <cmath>

namespace mergm {

LayerChain::LayerChain(const BinaryLayer& lower, const ModelSpec& spec, const NodeAttributes* attrs)
    : spec_(&spec),
      attrs_(attrs),
      lower_(lower),
      state_(lower),
      candidates_(lower.edges()),
      delta_calc_(spec, attrs, lower.n_nodes()),
      phi_(Eigen::VectorXd::Zero(spec.dim())),
      delta_(spec.dim()) {
  slot_.resize(candidates_.size());
  is_present_.resize(candidates_.size());
  reset(false);
}

void LayerChain::set_params(const Eigen::VectorXd& phi) {
  if (phi.size() != phi_.size()) fail_usage("parameter vector has wrong dimension");
  phi_ = phi;
}

void LayerChain::reset(bool init_empty) {
  state_ = BinaryLayer(lower_.n_nodes());
  present_.clear();
  absent_.clear();
  for (std::uint32_t c = 0; c < candidates_.size(); ++c) {
    if (init_empty) {
      is_present_[c] = 0;
      slot_[c] = static_cast<std::uint32_t>(absent_.size());
      absent_.push_back(c);
    } else {
      state_.add_edge(candidates_[c].i, candidates_[c].j);
      is_present_[c] = 1;
      slot_[c] = static_cast<std::uint32_t>(present_.size());
      present_.push_back(c);
    }
  }
}

void LayerChain::toggle_lists(std::uint32_t cand_idx) {
  std::vector<std::uint32_t>& from = is_present_[cand_idx] ? present_ : absent_;
  std::vector<std::uint32_t>& to = is_present_[cand_idx] ? absent_ : present_;
  const std::uint32_t pos = slot_[cand_idx];
  const std::uint32_t moved = from.back();
  from[pos] = moved;
  slot_[moved] = pos;
  from.pop_back();
  slot_[cand_idx] = static_cast<std::uint32_t>(to.size());
  to.push_back(cand_idx);
  is_present_[cand_idx] ^= 1;
}

void LayerChain::step(Rng& rng) {
  const std::size_t m = candidates_.size();
  if (m == 0) return;
  const std::size_t e = present_.size();

  // Tie-no-tie: a fair coin picks the edge set or the vacant candidate set,
  // falling back to the non-empty one; the Hastings factor below carries the
  // exact proposal masses, including the degenerate cases.
  bool pick_present;
  if (e == 0)
    pick_present = false;
  else if (e == m)
    pick_present = true;
  else
    pick_present = rng.uniform01() < 0.5;

  double log_ratio;
  std::uint32_t cand_idx;
  if (pick_present) {
    cand_idx = present_[rng.uniform_int(e)];
    const Dyad d = candidates_[cand_idx];
    const double log_fwd = std::log((e < m ? 0.5 : 1.0) / static_cast<double>(e));
    state_.remove_edge(d.i, d.j);
    delta_calc_.compute(state_, d.i, d.j, delta_);
    const std::size_t e_new = e - 1;
    const double log_rev = std::log((e_new > 0 ? 0.5 : 1.0) / static_cast<double>(m - e_new));
    log_ratio = -phi_.dot(delta_) + log_rev - log_fwd;
    if (std::log(rng.uniform_pos()) < log_ratio) {
      toggle_lists(cand_idx);
    } else {
      state_.add_edge(d.i, d.j);
    }
  } else {
    cand_idx = absent_[rng.uniform_int(m - e)];
    const Dyad d = candidates_[cand_idx];
    const double log_fwd = std::log((e > 0 ? 0.5 : 1.0) / static_cast<double>(m - e));
    delta_calc_.compute(state_, d.i, d.j, delta_);
    const std::size_t e_new = e + 1;
    const double log_rev = std::log((e_new < m ? 0.5 : 1.0) / static_cast<double>(e_new));
    log_ratio = phi_.dot(delta_) + log_rev - log_fwd;
    if (std::log(rng.uniform_pos()) < log_ratio) {
      state_.add_edge(d.i, d.j);
      toggle_lists(cand_idx);
    }
  }
}

void LayerChain::run(std::size_t steps, Rng& rng) {
  for (std::size_t s = 0; s < steps; ++s) step(rng);
}

BinaryLayer simulate_layer(const BinaryLayer& lower, const Eigen::VectorXd& phi, const ModelSpec& spec,
                           const NodeAttributes* attrs, const SimControl& ctrl, Rng& rng) {
  if (ctrl.steps_per_edge == 0) fail_usage("steps_per_edge must be >= 1");
  if (lower.edge_count() == 0) return BinaryLayer(lower.n_nodes());

  LayerChain chain(lower, spec, attrs);
  chain.set_params(phi);
  std::size_t steps = static_cast<std::size_t>(ctrl.steps_per_edge) * chain.candidate_count();
  if (ctrl.init_empty) {
    chain.reset(true);
    steps += static_cast<std::size_t>(std::ceil(static_cast<double>(steps) * ctrl.burn_in_fraction));
  }
  chain.run(steps, rng);
  return chain.state();
}

LayerStack simulate_stack(const std::vector<Eigen::VectorXd>& phi, const ModelSpec& spec,
                          const NodeAttributes* attrs, std::size_t n_nodes, const SimControl& ctrl, Rng& rng) {
  if (phi.empty()) fail_usage("need one parameter vector per layer");
  std::vector<BinaryLayer> layers;
  layers.reserve(phi.size());
  BinaryLayer lower = BinaryLayer::complete(n_nodes);
  for (const Eigen::VectorXd& phi_w : phi) {
    BinaryLayer layer = simulate_layer(lower, phi_w, spec, attrs, ctrl, rng);
    lower = layer;
    layers.push_back(std::move(layer));
  }
  return LayerStack(std::move(layers));
}

double phi_from_theta(double theta) {
  if (!(theta < 0.0)) fail_usage("theta must be negative (p = e^theta < 1)");
  return theta - std::log1p(-std::exp(theta));
}

double weighted_edge_logodds(Dyad dyad, std::uint32_t w_star, const std::vector<Eigen::VectorXd>& phi,
                             const LayerStack& stack, const ModelSpec& spec, const NodeAttributes* attrs) {
  if (w_star < 1 || w_star > stack.n_layers()) fail_usage("target weight out of range 1..W");
  if (phi.size() != stack.n_layers()) fail_usage("need one parameter vector per layer");

  double sum = 0.0;
  for (std::uint32_t w = 1; w <= w_star; ++w) {
    BinaryLayer layer = stack.layer(w);
    layer.remove_edge(dyad.i, dyad.j);  // no-op when already absent
    sum += phi[w - 1].dot(change_statistics(layer, dyad, spec, attrs));
  }
  return sum;
}

}  // namespace mergm
