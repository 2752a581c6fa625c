#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/common.hpp"

namespace mergm {

using NodeId = std::uint32_t;

// Unordered node pair, normalized so that i < j.
struct Dyad {
  NodeId i;
  NodeId j;
  Dyad(NodeId a, NodeId b) : i(a < b ? a : b), j(a < b ? b : a) {}
  friend bool operator==(const Dyad&, const Dyad&) = default;
  friend auto operator<=>(const Dyad&, const Dyad&) = default;
};

// Ordinal categories are few by construction; weights are capped here.
inline constexpr std::uint32_t kMaxWeight = 64;

// Symmetric ordinal-valued adjacency on n nodes, zero diagonal.
class WeightedNetwork {
 public:
  explicit WeightedNetwork(std::size_t n_nodes);

  std::size_t n_nodes() const { return n_; }
  std::uint32_t weight(NodeId i, NodeId j) const { return w_[idx(i, j)]; }
  // Writes both (i,j) and (j,i); rejects self-loops and weights over kMaxWeight.
  void set_weight(NodeId i, NodeId j, std::uint32_t w);

  std::uint32_t max_weight() const;
  std::size_t edge_count() const;  // dyads with weight >= 1
  std::vector<Dyad> edges() const;

  friend bool operator==(const WeightedNetwork&, const WeightedNetwork&) = default;

 private:
  std::size_t idx(NodeId i, NodeId j) const { return static_cast<std::size_t>(i) * n_ + j; }
  void check_node(NodeId v) const;

  std::size_t n_;
  std::vector<std::uint8_t> w_;
};

// Real-valued symmetric matrix, the ordinalize() input.
class SymmetricRealMatrix {
 public:
  explicit SymmetricRealMatrix(std::size_t n_nodes);

  std::size_t n_nodes() const { return n_; }
  double value(NodeId i, NodeId j) const { return v_[static_cast<std::size_t>(i) * n_ + j]; }
  void set_value(NodeId i, NodeId j, double x);

 private:
  std::size_t n_;
  std::vector<double> v_;
};

// Binary layer with bitset adjacency rows; immutable once built.
class BinaryLayer {
 public:
  explicit BinaryLayer(std::size_t n_nodes);
  static BinaryLayer complete(std::size_t n_nodes);

  std::size_t n_nodes() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  bool has_edge(NodeId i, NodeId j) const;
  void add_edge(NodeId i, NodeId j);
  void remove_edge(NodeId i, NodeId j);

  std::vector<Dyad> edges() const;
  std::uint32_t degree(NodeId v) const;
  // |N(i) & N(j)|, excluding i and j themselves.
  std::uint32_t common_neighbors(NodeId i, NodeId j) const;
  // true iff every edge of this layer is an edge of `other`.
  bool subgraph_of(const BinaryLayer& other) const;

  std::size_t row_blocks() const { return blocks_; }
  const std::uint64_t* row(NodeId v) const { return adj_.data() + static_cast<std::size_t>(v) * blocks_; }

  friend bool operator==(const BinaryLayer&, const BinaryLayer&) = default;

 private:
  std::uint64_t* mutable_row(NodeId v) { return adj_.data() + static_cast<std::size_t>(v) * blocks_; }
  void check_dyad(NodeId i, NodeId j) const;

  std::size_t n_;
  std::size_t blocks_;
  std::size_t edge_count_;
  std::vector<std::uint64_t> adj_;
};

// Ordered nested layers y_1 .. y_W over a common node set.
class LayerStack {
 public:
  // Validates the nesting invariant edges(w+1) subset-of edges(w).
  explicit LayerStack(std::vector<BinaryLayer> layers);

  std::size_t n_layers() const { return layers_.size(); }
  std::size_t n_nodes() const { return layers_.empty() ? 0 : layers_.front().n_nodes(); }
  const BinaryLayer& layer(std::size_t w) const { return layers_.at(w - 1); }  // w in 1..W
  const std::vector<BinaryLayer>& layers() const { return layers_; }

 private:
  std::vector<BinaryLayer> layers_;
};

// Named per-node categorical labels, stored as integer codes.
class NodeAttributes {
 public:
  NodeAttributes() = default;
  explicit NodeAttributes(std::size_t n_nodes) : n_(n_nodes) {}

  std::size_t n_nodes() const { return n_; }
  bool has(const std::string& name) const { return codes_.count(name) != 0; }
  void add(const std::string& name, const std::vector<std::string>& labels);
  const std::vector<std::int32_t>& codes(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::size_t n_ = 0;
  std::map<std::string, std::vector<std::int32_t>> codes_;
  std::map<std::string, std::vector<std::string>> level_names_;
};

// weight(i,j) = #{k : raw[i][j] >= t_k} for strictly increasing thresholds.
WeightedNetwork ordinalize(const SymmetricRealMatrix& raw, const std::vector<double>& thresholds);

// Layer w holds (i,j) iff y[i][j] >= w; requires W >= max observed weight.
LayerStack decompose(const WeightedNetwork& y, std::uint32_t n_layers);

// weight(i,j) = number of layers containing (i,j); requires nesting.
WeightedNetwork recompose(const LayerStack& stack);

}  // namespace mergm
