#include "core/network.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace mergm {

namespace {
std::string node_str(NodeId v) { return std::to_string(v); }
}  // namespace

WeightedNetwork::WeightedNetwork(std::size_t n_nodes) : n_(n_nodes), w_(n_nodes * n_nodes, 0) {
  if (n_nodes == 0) fail_data("weighted network needs at least one node");
}

void WeightedNetwork::check_node(NodeId v) const {
  if (v >= n_) fail_data("node id " + node_str(v) + " out of range [0, " + std::to_string(n_) + ")");
}

void WeightedNetwork::set_weight(NodeId i, NodeId j, std::uint32_t w) {
  check_node(i);
  check_node(j);
  if (i == j) fail_data("self-loop at node " + node_str(i) + " is not allowed");
  if (w > kMaxWeight) fail_data("weight " + std::to_string(w) + " exceeds the cap of " + std::to_string(kMaxWeight));
  w_[idx(i, j)] = static_cast<std::uint8_t>(w);
  w_[idx(j, i)] = static_cast<std::uint8_t>(w);
}

std::uint32_t WeightedNetwork::max_weight() const {
  std::uint8_t m = 0;
  for (std::uint8_t x : w_) m = std::max(m, x);
  return m;
}

std::size_t WeightedNetwork::edge_count() const {
  std::size_t count = 0;
  for (NodeId i = 0; i < n_; ++i)
    for (NodeId j = i + 1; j < n_; ++j)
      if (weight(i, j) > 0) ++count;
  return count;
}

std::vector<Dyad> WeightedNetwork::edges() const {
  std::vector<Dyad> out;
  for (NodeId i = 0; i < n_; ++i)
    for (NodeId j = i + 1; j < n_; ++j)
      if (weight(i, j) > 0) out.emplace_back(i, j);
  return out;
}

SymmetricRealMatrix::SymmetricRealMatrix(std::size_t n_nodes) : n_(n_nodes), v_(n_nodes * n_nodes, 0.0) {
  if (n_nodes == 0) fail_data("matrix needs at least one node");
}

void SymmetricRealMatrix::set_value(NodeId i, NodeId j, double x) {
  if (i >= n_ || j >= n_) fail_data("node id out of range");
  if (i == j && x != 0.0) fail_data("diagonal must stay zero");
  if (!std::isfinite(x)) fail_data("non-finite entry");
  v_[static_cast<std::size_t>(i) * n_ + j] = x;
  v_[static_cast<std::size_t>(j) * n_ + i] = x;
}

BinaryLayer::BinaryLayer(std::size_t n_nodes)
    : n_(n_nodes), blocks_((n_nodes + 63) / 64), edge_count_(0), adj_(n_nodes * blocks_, 0) {
  if (n_nodes == 0) fail_data("layer needs at least one node");
}

BinaryLayer BinaryLayer::complete(std::size_t n_nodes) {
  BinaryLayer layer(n_nodes);
  for (NodeId i = 0; i < n_nodes; ++i)
    for (NodeId j = i + 1; j < n_nodes; ++j) layer.add_edge(i, j);
  return layer;
}

void BinaryLayer::check_dyad(NodeId i, NodeId j) const {
  if (i >= n_ || j >= n_) fail_data("node id out of range [0, " + std::to_string(n_) + ")");
  if (i == j) fail_data("self-loop at node " + node_str(i) + " is not allowed");
}

bool BinaryLayer::has_edge(NodeId i, NodeId j) const {
  check_dyad(i, j);
  return (row(i)[j >> 6] >> (j & 63)) & 1u;
}

void BinaryLayer::add_edge(NodeId i, NodeId j) {
  check_dyad(i, j);
  if (has_edge(i, j)) return;
  mutable_row(i)[j >> 6] |= std::uint64_t{1} << (j & 63);
  mutable_row(j)[i >> 6] |= std::uint64_t{1} << (i & 63);
  ++edge_count_;
}

void BinaryLayer::remove_edge(NodeId i, NodeId j) {
  check_dyad(i, j);
  if (!has_edge(i, j)) return;
  mutable_row(i)[j >> 6] &= ~(std::uint64_t{1} << (j & 63));
  mutable_row(j)[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  --edge_count_;
}

std::vector<Dyad> BinaryLayer::edges() const {
  std::vector<Dyad> out;
  out.reserve(edge_count_);
  for (NodeId i = 0; i < n_; ++i) {
    const std::uint64_t* r = row(i);
    for (NodeId j = i + 1; j < n_; ++j)
      if ((r[j >> 6] >> (j & 63)) & 1u) out.emplace_back(i, j);
  }
  return out;
}

std::uint32_t BinaryLayer::degree(NodeId v) const {
  if (v >= n_) fail_data("node id out of range");
  std::uint32_t d = 0;
  const std::uint64_t* r = row(v);
  for (std::size_t b = 0; b < blocks_; ++b) d += static_cast<std::uint32_t>(std::popcount(r[b]));
  return d;
}

std::uint32_t BinaryLayer::common_neighbors(NodeId i, NodeId j) const {
  check_dyad(i, j);
  const std::uint64_t* ri = row(i);
  const std::uint64_t* rj = row(j);
  std::uint32_t c = 0;
  for (std::size_t b = 0; b < blocks_; ++b) c += static_cast<std::uint32_t>(std::popcount(ri[b] & rj[b]));
  return c;
}

bool BinaryLayer::subgraph_of(const BinaryLayer& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t k = 0; k < adj_.size(); ++k)
    if (adj_[k] & ~other.adj_[k]) return false;
  return true;
}

LayerStack::LayerStack(std::vector<BinaryLayer> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) fail_data("layer stack needs at least one layer");
  for (std::size_t w = 0; w + 1 < layers_.size(); ++w) {
    if (layers_[w].n_nodes() != layers_[w + 1].n_nodes()) fail_data("layers disagree on node count");
    if (!layers_[w + 1].subgraph_of(layers_[w]))
      fail_data("nesting violated: layer " + std::to_string(w + 2) + " has an edge absent from layer " +
                std::to_string(w + 1));
  }
}

void NodeAttributes::add(const std::string& name, const std::vector<std::string>& labels) {
  if (labels.size() != n_)
    fail_data("attribute '" + name + "' has " + std::to_string(labels.size()) + " values, expected " +
              std::to_string(n_));
  std::vector<std::string> levels;
  std::vector<std::int32_t> codes(labels.size());
  for (std::size_t k = 0; k < labels.size(); ++k) {
    auto it = std::find(levels.begin(), levels.end(), labels[k]);
    if (it == levels.end()) {
      codes[k] = static_cast<std::int32_t>(levels.size());
      levels.push_back(labels[k]);
    } else {
      codes[k] = static_cast<std::int32_t>(it - levels.begin());
    }
  }
  codes_[name] = std::move(codes);
  level_names_[name] = std::move(levels);
}

const std::vector<std::int32_t>& NodeAttributes::codes(const std::string& name) const {
  auto it = codes_.find(name);
  if (it == codes_.end()) fail_data("unknown attribute '" + name + "'");
  return it->second;
}

std::vector<std::string> NodeAttributes::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : codes_) out.push_back(k);
  return out;
}

WeightedNetwork ordinalize(const SymmetricRealMatrix& raw, const std::vector<double>& thresholds) {
  if (thresholds.empty()) fail_usage("ordinalize needs at least one threshold");
  if (thresholds.size() > kMaxWeight) fail_usage("more than " + std::to_string(kMaxWeight) + " thresholds");
  for (std::size_t k = 0; k + 1 < thresholds.size(); ++k)
    if (!(thresholds[k] < thresholds[k + 1]))
      fail_usage("thresholds must be strictly increasing (violated at position " + std::to_string(k + 1) + ")");

  const std::size_t n = raw.n_nodes();
  WeightedNetwork y(n);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      const double x = raw.value(i, j);
      std::uint32_t w = 0;
      for (double t : thresholds)
        if (x >= t) ++w;
      if (w > 0) y.set_weight(i, j, w);
    }
  }
  return y;
}

LayerStack decompose(const WeightedNetwork& y, std::uint32_t n_layers) {
  if (n_layers == 0) fail_usage("need at least one layer");
  if (n_layers > kMaxWeight) fail_usage("layer count exceeds the cap of " + std::to_string(kMaxWeight));
  const std::uint32_t observed_max = y.max_weight();
  if (observed_max > n_layers)
    fail_data("max observed weight " + std::to_string(observed_max) + " exceeds layer count " +
              std::to_string(n_layers));

  std::vector<BinaryLayer> layers;
  layers.reserve(n_layers);
  for (std::uint32_t w = 1; w <= n_layers; ++w) {
    BinaryLayer layer(y.n_nodes());
    for (NodeId i = 0; i < y.n_nodes(); ++i)
      for (NodeId j = i + 1; j < y.n_nodes(); ++j)
        if (y.weight(i, j) >= w) layer.add_edge(i, j);
    layers.push_back(std::move(layer));
  }
  return LayerStack(std::move(layers));
}

WeightedNetwork recompose(const LayerStack& stack) {
  WeightedNetwork y(stack.n_nodes());
  for (NodeId i = 0; i < stack.n_nodes(); ++i) {
    for (NodeId j = i + 1; j < stack.n_nodes(); ++j) {
      std::uint32_t w = 0;
      for (const BinaryLayer& layer : stack.layers())
        if (layer.has_edge(i, j)) ++w;
      if (w > 0) y.set_weight(i, j, w);
    }
  }
  return y;
}

}  // namespace mergm
