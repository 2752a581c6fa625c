#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "core/network.hpp"

namespace mergm {

enum class StatKind { edges, gwdegree, gwesp, gwnsp, nodematch };

const char* stat_kind_name(StatKind kind);
StatKind stat_kind_from_name(const std::string& name);

// One sufficient statistic. Decay applies to the gw* kinds only and defaults
// to ln 2; attribute names the categorical column for nodematch.
struct StatisticDescriptor {
  StatKind kind;
  double decay = 0.6931471805599453;
  std::string attribute;

  friend bool operator==(const StatisticDescriptor&, const StatisticDescriptor&) = default;
};

class ModelSpec {
 public:
  explicit ModelSpec(std::vector<StatisticDescriptor> stats);

  std::size_t dim() const { return stats_.size(); }
  const std::vector<StatisticDescriptor>& statistics() const { return stats_; }
  bool needs_attributes() const;
  // Human-readable labels, e.g. "edges", "gwesp", "nodematch(faction)".
  std::vector<std::string> labels() const;

 private:
  std::vector<StatisticDescriptor> stats_;
};

// Geometric weight g_d(alpha) = e^alpha * (1 - (1 - e^-alpha)^d).
double gw_weight(std::uint32_t d, double decay);

// Change in every model statistic when `dyad` toggles 0 -> 1 with the rest of
// the layer fixed. Kept as a reusable object: the simulator calls it once per
// MH step and the scratch histograms would otherwise churn.
class ChangeStatCalculator {
 public:
  ChangeStatCalculator(const ModelSpec& spec, const NodeAttributes* attrs, std::size_t n_nodes);

  // Requires (i,j) absent from `layer`; writes spec.dim() values into `out`.
  void compute(const BinaryLayer& layer, NodeId i, NodeId j, Eigen::Ref<Eigen::VectorXd> out);

 private:
  struct Column {
    StatKind kind;
    std::vector<double> g;                     // gw* kinds
    const std::vector<std::int32_t>* codes = nullptr;  // nodematch
  };

  double gw_delta(const std::vector<double>& g);
  void bump(std::uint32_t d, std::int64_t by);

  std::vector<Column> columns_;
  std::vector<std::int64_t> delta_;
  std::vector<std::uint32_t> touched_;
  std::vector<NodeId> scratch_nodes_;
};

Eigen::VectorXd eval_statistics(const BinaryLayer& layer, const ModelSpec& spec, const NodeAttributes* attrs);

Eigen::VectorXd change_statistics(const BinaryLayer& layer, Dyad dyad, const ModelSpec& spec,
                                  const NodeAttributes* attrs);

// s(y_upper; y_lower) for the dissolution transition. Nesting makes every
// configuration of the upper layer a configuration of both layers, so this
// reduces to eval_statistics(upper); the reduction's precondition is checked
// here rather than assumed.
Eigen::VectorXd transition_statistics(const BinaryLayer& upper, const BinaryLayer& lower, const ModelSpec& spec,
                                      const NodeAttributes* attrs);

}  // namespace mergm
