#include "core/io.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace mergm {

namespace {

struct CsvReader {
  std::ifstream in;
  std::string path;
  std::size_t line_no = 0;

  explicit CsvReader(const std::string& p) : in(p), path(p) {
    if (!in) fail_data("cannot open '" + p + "': " + std::strerror(errno));
  }

  [[noreturn]] void fail(const std::string& msg) const {
    fail_data(path + ":" + std::to_string(line_no) + ": " + msg);
  }

  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return true;
    }
    return false;
  }
};

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

std::uint64_t parse_uint(const CsvReader& r, const std::string& field, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) r.fail(std::string("malformed ") + what + " '" + field + "'");
  return value;
}

double parse_double(const CsvReader& r, const std::string& field, const char* what) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(field.c_str(), &end);
  if (end != field.c_str() + field.size() || field.empty() || errno == ERANGE)
    r.fail(std::string("malformed ") + what + " '" + field + "'");
  return value;
}

// Directive line "# mergm edgelist nodes=N" followed by the column header.
std::size_t read_edgelist_prolog(CsvReader& r, const std::string& expected_header) {
  std::string line;
  if (!r.next(line)) r.fail("empty file; expected the edge-list directive line");
  const std::string prefix = "# mergm edgelist nodes=";
  if (line.rfind(prefix, 0) != 0) r.fail("expected directive '" + prefix + "N' on the first line");
  const std::string count = line.substr(prefix.size());
  std::uint64_t n = 0;
  const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
  if (ec != std::errc{} || ptr != count.data() + count.size() || n == 0) r.fail("bad node count '" + count + "'");
  if (!r.next(line)) r.fail("missing column header");
  if (line != expected_header) r.fail("expected header '" + expected_header + "', got '" + line + "'");
  return static_cast<std::size_t>(n);
}

}  // namespace

WeightedNetwork read_weighted_edgelist(const std::string& path) {
  CsvReader r(path);
  const std::size_t n = read_edgelist_prolog(r, "i,j,weight");
  WeightedNetwork y(n);

  std::string line;
  while (r.next(line)) {
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 3) r.fail("expected 3 fields, got " + std::to_string(fields.size()));
    const std::uint64_t i = parse_uint(r, fields[0], "node id");
    const std::uint64_t j = parse_uint(r, fields[1], "node id");
    const std::uint64_t w = parse_uint(r, fields[2], "weight");
    if (i >= n || j >= n) r.fail("node id out of range [0, " + std::to_string(n) + ")");
    if (i == j) r.fail("self-loop at node " + std::to_string(i));
    if (w == 0) r.fail("explicit zero weight; omit absent dyads instead");
    if (w > kMaxWeight) r.fail("weight " + std::to_string(w) + " exceeds the cap of " + std::to_string(kMaxWeight));
    const std::uint32_t existing = y.weight(static_cast<NodeId>(i), static_cast<NodeId>(j));
    if (existing != 0 && existing != w)
      r.fail("dyad (" + std::to_string(i) + "," + std::to_string(j) + ") repeated with conflicting weights " +
             std::to_string(existing) + " and " + std::to_string(w) + "; directed data is not supported");
    y.set_weight(static_cast<NodeId>(i), static_cast<NodeId>(j), static_cast<std::uint32_t>(w));
  }
  return y;
}

void write_weighted_edgelist(const WeightedNetwork& y, const std::string& path) {
  std::ostringstream os;
  os << "# mergm edgelist nodes=" << y.n_nodes() << "\n";
  os << "i,j,weight\n";
  for (NodeId i = 0; i < y.n_nodes(); ++i)
    for (NodeId j = i + 1; j < y.n_nodes(); ++j)
      if (y.weight(i, j) > 0) os << i << "," << j << "," << y.weight(i, j) << "\n";
  atomic_write_text(path, os.str());
}

SymmetricRealMatrix read_real_edgelist(const std::string& path) {
  CsvReader r(path);
  const std::size_t n = read_edgelist_prolog(r, "i,j,weight");
  SymmetricRealMatrix m(n);

  std::string line;
  while (r.next(line)) {
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 3) r.fail("expected 3 fields, got " + std::to_string(fields.size()));
    const std::uint64_t i = parse_uint(r, fields[0], "node id");
    const std::uint64_t j = parse_uint(r, fields[1], "node id");
    const double w = parse_double(r, fields[2], "weight");
    if (i >= n || j >= n) r.fail("node id out of range [0, " + std::to_string(n) + ")");
    if (i == j) r.fail("self-loop at node " + std::to_string(i));
    const double existing = m.value(static_cast<NodeId>(i), static_cast<NodeId>(j));
    if (existing != 0.0 && existing != w)
      r.fail("dyad (" + std::to_string(i) + "," + std::to_string(j) + ") repeated with conflicting values");
    m.set_value(static_cast<NodeId>(i), static_cast<NodeId>(j), w);
  }
  return m;
}

void write_layer_edgelist(const BinaryLayer& layer, const std::string& path) {
  std::ostringstream os;
  os << "# mergm edgelist nodes=" << layer.n_nodes() << "\n";
  os << "i,j,weight\n";
  for (const Dyad& d : layer.edges()) os << d.i << "," << d.j << ",1\n";
  atomic_write_text(path, os.str());
}

NodeAttributes read_attributes(const std::string& path) {
  CsvReader r(path);
  std::string line;
  if (!r.next(line)) r.fail("empty file; expected attribute header");
  const auto header = split_csv(line);
  if (header.size() < 2 || header[0] != "node")
    r.fail("expected header 'node,<attr>[,<attr>...]', got '" + line + "'");

  std::vector<std::vector<std::string>> columns(header.size() - 1);
  std::vector<bool> seen;
  std::size_t rows = 0;
  std::vector<std::vector<std::string>> raw_rows;
  std::vector<std::uint64_t> ids;
  while (r.next(line)) {
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != header.size())
      r.fail("expected " + std::to_string(header.size()) + " fields, got " + std::to_string(fields.size()));
    ids.push_back(parse_uint(r, fields[0], "node id"));
    raw_rows.push_back(fields);
    ++rows;
  }
  if (rows == 0) r.fail("attribute file has no rows");

  NodeAttributes attrs(rows);
  seen.assign(rows, false);
  for (auto& col : columns) col.assign(rows, {});
  for (std::size_t k = 0; k < rows; ++k) {
    const std::uint64_t id = ids[k];
    if (id >= rows) fail_data(path + ": node id " + std::to_string(id) + " out of range [0, " +
                              std::to_string(rows) + ") implied by the row count");
    if (seen[id]) fail_data(path + ": node " + std::to_string(id) + " appears twice");
    seen[id] = true;
    for (std::size_t c = 0; c + 1 < raw_rows[k].size(); ++c) columns[c][id] = raw_rows[k][c + 1];
  }
  for (std::size_t c = 0; c < columns.size(); ++c) attrs.add(header[c + 1], columns[c]);
  return attrs;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_posterior(const PosteriorSamples& samples, const std::string& phi_path, const std::string& hyper_path) {
  std::ostringstream phi_os;
  phi_os << "chain,iteration,layer,param_index,value\n";
  for (const PosteriorDraw& d : samples.draws)
    for (std::size_t w = 0; w < d.phi.size(); ++w)
      for (Eigen::Index k = 0; k < d.phi[w].size(); ++k)
        phi_os << d.chain << "," << d.iteration << "," << (w + 1) << "," << k << ","
               << format_double(d.phi[w][k]) << "\n";
  atomic_write_text(phi_path, phi_os.str());

  std::ostringstream hyper_os;
  hyper_os << "chain,iteration,component,row,col,value\n";
  for (const PosteriorDraw& d : samples.draws) {
    for (Eigen::Index k = 0; k < d.mu.size(); ++k)
      hyper_os << d.chain << "," << d.iteration << ",mu," << k << ",0," << format_double(d.mu[k]) << "\n";
    for (Eigen::Index i = 0; i < d.sigma.rows(); ++i)
      for (Eigen::Index j = i; j < d.sigma.cols(); ++j)
        hyper_os << d.chain << "," << d.iteration << ",sigma," << i << "," << j << ","
                 << format_double(d.sigma(i, j)) << "\n";
  }
  atomic_write_text(hyper_path, hyper_os.str());
}

namespace {

// Ordered (iteration, chain) to reproduce the writer's draw order exactly.
struct DrawKey {
  std::uint64_t iteration;
  std::uint64_t chain;
  friend auto operator<=>(const DrawKey&, const DrawKey&) = default;
};

}  // namespace

PosteriorSamples read_posterior_phi_only(const std::string& phi_path) {
  CsvReader r(phi_path);
  std::string line;
  if (!r.next(line)) r.fail("empty posterior file");
  if (line != "chain,iteration,layer,param_index,value")
    r.fail("expected header 'chain,iteration,layer,param_index,value'");

  std::map<DrawKey, std::map<std::pair<std::uint64_t, std::uint64_t>, double>> cells;
  std::uint64_t max_layer = 0, max_param = 0, max_chain = 0;
  while (r.next(line)) {
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 5) r.fail("expected 5 fields");
    const std::uint64_t chain = parse_uint(r, fields[0], "chain");
    const std::uint64_t iter = parse_uint(r, fields[1], "iteration");
    const std::uint64_t layer = parse_uint(r, fields[2], "layer");
    const std::uint64_t param = parse_uint(r, fields[3], "param_index");
    const double value = parse_double(r, fields[4], "value");
    if (layer == 0) r.fail("layer indices are 1-based");
    cells[{iter, chain}][{layer, param}] = value;
    max_layer = std::max(max_layer, layer);
    max_param = std::max(max_param, param);
    max_chain = std::max(max_chain, chain);
  }
  if (cells.empty()) r.fail("posterior file has no rows");

  PosteriorSamples samples;
  samples.n_layers = max_layer;
  samples.dim = max_param + 1;
  samples.n_chains = max_chain + 1;
  for (const auto& [key, values] : cells) {
    PosteriorDraw draw;
    draw.chain = static_cast<std::uint32_t>(key.chain);
    draw.iteration = key.iteration;
    draw.phi.assign(samples.n_layers, Eigen::VectorXd::Zero(samples.dim));
    if (values.size() != samples.n_layers * samples.dim)
      fail_data(phi_path + ": draw (chain " + std::to_string(key.chain) + ", iteration " +
                std::to_string(key.iteration) + ") has " + std::to_string(values.size()) + " cells, expected " +
                std::to_string(samples.n_layers * samples.dim));
    for (const auto& [lp, v] : values) draw.phi[lp.first - 1][static_cast<Eigen::Index>(lp.second)] = v;
    draw.mu = Eigen::VectorXd::Zero(samples.dim);
    draw.sigma = Eigen::MatrixXd::Identity(samples.dim, samples.dim);
    samples.draws.push_back(std::move(draw));
  }
  samples.proposals.assign(samples.n_chains, std::vector<std::uint64_t>(samples.n_layers, 0));
  samples.accepts = samples.proposals;
  return samples;
}

PosteriorSamples read_posterior(const std::string& phi_path, const std::string& hyper_path) {
  PosteriorSamples samples = read_posterior_phi_only(phi_path);

  CsvReader r(hyper_path);
  std::string line;
  if (!r.next(line)) r.fail("empty hyper-sample file");
  if (line != "chain,iteration,component,row,col,value")
    r.fail("expected header 'chain,iteration,component,row,col,value'");

  std::map<DrawKey, std::size_t> index;
  for (std::size_t d = 0; d < samples.draws.size(); ++d)
    index[{samples.draws[d].iteration, samples.draws[d].chain}] = d;

  while (r.next(line)) {
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 6) r.fail("expected 6 fields");
    const std::uint64_t chain = parse_uint(r, fields[0], "chain");
    const std::uint64_t iter = parse_uint(r, fields[1], "iteration");
    const std::string& component = fields[2];
    const std::uint64_t row = parse_uint(r, fields[3], "row");
    const std::uint64_t col = parse_uint(r, fields[4], "col");
    const double value = parse_double(r, fields[5], "value");
    const auto it = index.find({iter, chain});
    if (it == index.end())
      r.fail("hyper draw (chain " + std::to_string(chain) + ", iteration " + std::to_string(iter) +
             ") has no matching layer-parameter draw");
    PosteriorDraw& draw = samples.draws[it->second];
    if (component == "mu") {
      if (row >= samples.dim) r.fail("mu index out of range");
      draw.mu[static_cast<Eigen::Index>(row)] = value;
    } else if (component == "sigma") {
      if (row >= samples.dim || col >= samples.dim || row > col) r.fail("sigma index out of range");
      draw.sigma(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = value;
      draw.sigma(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(row)) = value;
    } else {
      r.fail("unknown component '" + component + "' (expected mu|sigma)");
    }
  }
  return samples;
}

void write_acceptance_report(const PosteriorSamples& samples, const std::string& path) {
  std::ostringstream os;
  os << "chain,layer,proposals,accepted,rate\n";
  for (std::size_t h = 0; h < samples.n_chains; ++h)
    for (std::size_t w = 0; w < samples.n_layers; ++w)
      os << h << "," << (w + 1) << "," << samples.proposals[h][w] << "," << samples.accepts[h][w] << ","
         << format_double(samples.acceptance_rate(h, w)) << "\n";
  atomic_write_text(path, os.str());
}

void write_gof_report(const GofReport& report, const std::string& envelope_path, const std::string& replicates_path,
                      const std::string& summary_path) {
  std::ostringstream env;
  env << "node,quantile,value\n";
  for (std::size_t v = 0; v < report.observed.size(); ++v)
    env << v << ",observed," << report.observed[v] << "\n";
  for (std::size_t q = 0; q < report.quantile_levels.size(); ++q)
    for (std::size_t v = 0; v < report.observed.size(); ++v)
      env << v << "," << format_double(report.quantile_levels[q]) << "," << format_double(report.envelope[v][q])
          << "\n";
  atomic_write_text(envelope_path, env.str());

  std::ostringstream rep;
  rep << "replicate,node,weighted_degree\n";
  for (std::size_t r = 0; r < report.replicates.size(); ++r)
    for (std::size_t v = 0; v < report.replicates[r].size(); ++v)
      rep << r << "," << v << "," << report.replicates[r][v] << "\n";
  atomic_write_text(replicates_path, rep.str());

  std::ostringstream sum;
  sum << "metric,value\n";
  sum << "replicates," << report.replicates.size() << "\n";
  sum << "band_low," << format_double(report.quantile_levels.front()) << "\n";
  sum << "band_high," << format_double(report.quantile_levels.back()) << "\n";
  sum << "coverage," << format_double(report.coverage) << "\n";
  atomic_write_text(summary_path, sum.str());
}

void write_summary_csv(const PosteriorSummary& summary, const std::string& path) {
  std::ostringstream os;
  os << "group,layer,parameter,index,mean,sd";
  for (double q : summary.quantile_levels) os << ",q" << format_double(q);
  os << "\n";
  for (const SummaryRow& row : summary.rows) {
    os << row.group << "," << row.layer << "," << row.name << "," << row.index << "," << format_double(row.mean)
       << "," << format_double(row.sd);
    for (double q : row.quantiles) os << "," << format_double(q);
    os << "\n";
  }
  atomic_write_text(path, os.str());
}

std::string fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_data("cannot open '" + path + "': " + std::strerror(errno));
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    for (std::streamsize k = 0; k < in.gcount(); ++k) {
      hash ^= static_cast<unsigned char>(buf[k]);
      hash *= 0x100000001b3ULL;
    }
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016" PRIx64, hash);
  return out;
}

void atomic_write_text(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail_data("cannot write '" + tmp.string() + "': " + std::strerror(errno));
    out << content;
    out.flush();
    if (!out) fail_data("short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) fail_data("cannot rename '" + tmp.string() + "' to '" + target.string() + "': " + ec.message());
}

}  // namespace mergm
