#include "core/statistics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace mergm {

namespace {

constexpr double kDefaultDecay = 0.6931471805599453;

// Fixed-order accumulation: ascending d, zero counts skipped. The brute-force
// test oracle uses the same convention, which is what makes incremental and
// full-reevaluation results comparable with zero tolerance.
double dot_g(const std::vector<double>& g, const std::vector<std::int64_t>& counts, std::uint32_t max_d) {
  double s = 0.0;
  for (std::uint32_t d = 0; d <= max_d; ++d)
    if (counts[d] != 0) s += g[d] * static_cast<double>(counts[d]);
  return s;
}

std::vector<double> build_gw_table(double decay, std::size_t n_nodes) {
  std::vector<double> g(n_nodes + 2);
  const double ea = std::exp(decay);
  const double base = 1.0 - std::exp(-decay);
  for (std::size_t d = 0; d < g.size(); ++d) g[d] = ea * (1.0 - std::pow(base, static_cast<double>(d)));
  return g;
}

const std::vector<std::int32_t>* nodematch_codes(const StatisticDescriptor& s, const NodeAttributes* attrs,
                                                 std::size_t n_nodes) {
  if (attrs == nullptr || !attrs->has(s.attribute))
    fail_data("statistic nodematch requires attribute '" + s.attribute + "', which is missing");
  if (attrs->n_nodes() != n_nodes) fail_data("attribute table covers " + std::to_string(attrs->n_nodes()) +
                                             " nodes, network has " + std::to_string(n_nodes));
  return &attrs->codes(s.attribute);
}

// Visits every set bit of (a op b) over `blocks` words.
template <typename Op, typename Fn>
void for_each_bit(const std::uint64_t* a, const std::uint64_t* b, std::size_t blocks, Op op, Fn fn) {
  for (std::size_t blk = 0; blk < blocks; ++blk) {
    std::uint64_t word = op(a[blk], b[blk]);
    while (word) {
      const int bit = std::countr_zero(word);
      fn(static_cast<NodeId>(blk * 64 + bit));
      word &= word - 1;
    }
  }
}

}  // namespace

const char* stat_kind_name(StatKind kind) {
  switch (kind) {
    case StatKind::edges: return "edges";
    case StatKind::gwdegree: return "gwdegree";
    case StatKind::gwesp: return "gwesp";
    case StatKind::gwnsp: return "gwnsp";
    case StatKind::nodematch: return "nodematch";
  }
  return "?";
}

StatKind stat_kind_from_name(const std::string& name) {
  if (name == "edges") return StatKind::edges;
  if (name == "gwdegree") return StatKind::gwdegree;
  if (name == "gwesp") return StatKind::gwesp;
  if (name == "gwnsp") return StatKind::gwnsp;
  if (name == "nodematch") return StatKind::nodematch;
  fail_usage("unknown statistic kind '" + name + "' (expected edges|gwdegree|gwesp|gwnsp|nodematch)");
}

ModelSpec::ModelSpec(std::vector<StatisticDescriptor> stats) : stats_(std::move(stats)) {
  if (stats_.empty()) fail_usage("model needs at least one statistic");
  for (auto& s : stats_) {
    const bool is_gw = s.kind == StatKind::gwdegree || s.kind == StatKind::gwesp || s.kind == StatKind::gwnsp;
    if (is_gw) {
      if (!(s.decay >= 0.0) || !std::isfinite(s.decay))
        fail_usage(std::string(stat_kind_name(s.kind)) + " decay must be a finite value >= 0");
    } else {
      s.decay = kDefaultDecay;  // canonical, so uniqueness ignores it
    }
    if (s.kind == StatKind::nodematch) {
      if (s.attribute.empty()) fail_usage("nodematch needs an attribute name");
    } else if (!s.attribute.empty()) {
      fail_usage(std::string(stat_kind_name(s.kind)) + " does not take an attribute");
    }
  }
  for (std::size_t a = 0; a < stats_.size(); ++a)
    for (std::size_t b = a + 1; b < stats_.size(); ++b)
      if (stats_[a] == stats_[b]) fail_usage("duplicate statistic '" + labels()[a] + "' in model");
}

bool ModelSpec::needs_attributes() const {
  return std::any_of(stats_.begin(), stats_.end(),
                     [](const StatisticDescriptor& s) { return s.kind == StatKind::nodematch; });
}

std::vector<std::string> ModelSpec::labels() const {
  std::vector<std::string> out;
  out.reserve(stats_.size());
  for (const auto& s : stats_) {
    std::string label = stat_kind_name(s.kind);
    if (s.kind == StatKind::nodematch) label += "(" + s.attribute + ")";
    out.push_back(std::move(label));
  }
  return out;
}

double gw_weight(std::uint32_t d, double decay) {
  if (!(decay >= 0.0)) fail_usage("decay must be >= 0");
  return std::exp(decay) * (1.0 - std::pow(1.0 - std::exp(-decay), static_cast<double>(d)));
}

ChangeStatCalculator::ChangeStatCalculator(const ModelSpec& spec, const NodeAttributes* attrs, std::size_t n_nodes)
    : delta_(n_nodes + 2, 0) {
  scratch_nodes_.reserve(n_nodes);
  for (const auto& s : spec.statistics()) {
    Column col;
    col.kind = s.kind;
    switch (s.kind) {
      case StatKind::gwdegree:
      case StatKind::gwesp:
      case StatKind::gwnsp:
        col.g = build_gw_table(s.decay, n_nodes);
        break;
      case StatKind::nodematch:
        col.codes = nodematch_codes(s, attrs, n_nodes);
        break;
      case StatKind::edges:
        break;
    }
    columns_.push_back(std::move(col));
  }
}

void ChangeStatCalculator::bump(std::uint32_t d, std::int64_t by) {
  if (delta_[d] == 0) touched_.push_back(d);
  delta_[d] += by;
}

double ChangeStatCalculator::gw_delta(const std::vector<double>& g) {
  std::sort(touched_.begin(), touched_.end());
  double s = 0.0;
  for (std::size_t k = 0; k < touched_.size(); ++k) {
    const std::uint32_t d = touched_[k];
    if (k > 0 && d == touched_[k - 1]) continue;
    if (delta_[d] != 0) s += g[d] * static_cast<double>(delta_[d]);
    delta_[d] = 0;
  }
  touched_.clear();
  return s;
}

void ChangeStatCalculator::compute(const BinaryLayer& layer, NodeId i, NodeId j, Eigen::Ref<Eigen::VectorXd> out) {
  const std::size_t blocks = layer.row_blocks();
  const std::uint64_t* ri = layer.row(i);
  const std::uint64_t* rj = layer.row(j);

  for (std::size_t c = 0; c < columns_.size(); ++c) {
    Column& col = columns_[c];
    switch (col.kind) {
      case StatKind::edges:
        out[c] = 1.0;
        break;
      case StatKind::nodematch:
        out[c] = ((*col.codes)[i] == (*col.codes)[j]) ? 1.0 : 0.0;
        break;
      case StatKind::gwdegree: {
        const std::uint32_t di = layer.degree(i);
        const std::uint32_t dj = layer.degree(j);
        bump(di, -1);
        bump(di + 1, +1);
        bump(dj, -1);
        bump(dj + 1, +1);
        out[c] = gw_delta(col.g);
        break;
      }
      case StatKind::gwesp: {
        // The new edge enters with cn(i,j) shared partners; every edge to a
        // common neighbor gains one.
        bump(layer.common_neighbors(i, j), +1);
        for_each_bit(ri, rj, blocks, [](std::uint64_t a, std::uint64_t b) { return a & b; },
                     [&](NodeId k) {
                       const std::uint32_t sp_ik = layer.common_neighbors(i, k);
                       bump(sp_ik, -1);
                       bump(sp_ik + 1, +1);
                       const std::uint32_t sp_jk = layer.common_neighbors(j, k);
                       bump(sp_jk, -1);
                       bump(sp_jk + 1, +1);
                     });
        out[c] = gw_delta(col.g);
        break;
      }
      case StatKind::gwnsp: {
        // (i,j) leaves the non-edge set; non-edges (i,k) with k ~ j but k !~ i
        // gain a shared partner, and symmetrically for (j,k).
        bump(layer.common_neighbors(i, j), -1);
        for_each_bit(rj, ri, blocks, [](std::uint64_t a, std::uint64_t b) { return a & ~b; },
                     [&](NodeId k) {
                       if (k == i) return;
                       const std::uint32_t sp_ik = layer.common_neighbors(i, k);
                       bump(sp_ik, -1);
                       bump(sp_ik + 1, +1);
                     });
        for_each_bit(ri, rj, blocks, [](std::uint64_t a, std::uint64_t b) { return a & ~b; },
                     [&](NodeId k) {
                       if (k == j) return;
                       const std::uint32_t sp_jk = layer.common_neighbors(j, k);
                       bump(sp_jk, -1);
                       bump(sp_jk + 1, +1);
                     });
        out[c] = gw_delta(col.g);
        break;
      }
    }
  }
}

Eigen::VectorXd eval_statistics(const BinaryLayer& layer, const ModelSpec& spec, const NodeAttributes* attrs) {
  const std::size_t n = layer.n_nodes();
  const auto& stats = spec.statistics();

  bool need_deg = false, need_esp = false, need_nsp = false;
  for (const auto& s : stats) {
    need_deg |= s.kind == StatKind::gwdegree;
    need_esp |= s.kind == StatKind::gwesp;
    need_nsp |= s.kind == StatKind::gwnsp;
  }

  std::vector<std::int64_t> deg_hist, esp_hist, nsp_hist;
  if (need_deg) {
    deg_hist.assign(n + 1, 0);
    for (NodeId v = 0; v < n; ++v) ++deg_hist[layer.degree(v)];
  }
  if (need_esp || need_nsp) {
    esp_hist.assign(n + 1, 0);
    nsp_hist.assign(n + 1, 0);
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = i + 1; j < n; ++j) {
        const std::uint32_t sp = layer.common_neighbors(i, j);
        if (layer.has_edge(i, j))
          ++esp_hist[sp];
        else
          ++nsp_hist[sp];
      }
  }

  Eigen::VectorXd out(spec.dim());
  for (std::size_t c = 0; c < stats.size(); ++c) {
    const auto& s = stats[c];
    switch (s.kind) {
      case StatKind::edges:
        out[c] = static_cast<double>(layer.edge_count());
        break;
      case StatKind::gwdegree:
        out[c] = dot_g(build_gw_table(s.decay, n), deg_hist, static_cast<std::uint32_t>(n));
        break;
      case StatKind::gwesp:
        out[c] = dot_g(build_gw_table(s.decay, n), esp_hist, static_cast<std::uint32_t>(n));
        break;
      case StatKind::gwnsp:
        out[c] = dot_g(build_gw_table(s.decay, n), nsp_hist, static_cast<std::uint32_t>(n));
        break;
      case StatKind::nodematch: {
        const auto* codes = nodematch_codes(s, attrs, n);
        std::int64_t count = 0;
        for (const Dyad& d : layer.edges())
          if ((*codes)[d.i] == (*codes)[d.j]) ++count;
        out[c] = static_cast<double>(count);
        break;
      }
    }
  }
  return out;
}

Eigen::VectorXd change_statistics(const BinaryLayer& layer, Dyad dyad, const ModelSpec& spec,
                                  const NodeAttributes* attrs) {
  if (layer.has_edge(dyad.i, dyad.j))
    fail_data("change statistic is defined for an absent dyad; (" + std::to_string(dyad.i) + "," +
              std::to_string(dyad.j) + ") is present");
  ChangeStatCalculator calc(spec, attrs, layer.n_nodes());
  Eigen::VectorXd out(spec.dim());
  calc.compute(layer, dyad.i, dyad.j, out);
  return out;
}

Eigen::VectorXd transition_statistics(const BinaryLayer& upper, const BinaryLayer& lower, const ModelSpec& spec,
                                      const NodeAttributes* attrs) {
  if (upper.n_nodes() != lower.n_nodes()) fail_data("transition layers disagree on node count");
  if (!upper.subgraph_of(lower)) fail_data("nesting violated: upper layer is not a subgraph of the lower layer");
  // Every configuration of the upper layer lies in both layers, hence
  // s(upper; lower) == s(upper). The subgraph check above is what licenses
  // this reduction.
  return eval_statistics(upper, spec, attrs);
}

}  // namespace mergm
