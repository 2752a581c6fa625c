#pragma once

#include <string>

#include "core/gof.hpp"
#include "core/inference.hpp"
#include "core/network.hpp"

namespace mergm {

// Weighted edge list: a directive line "# mergm edgelist nodes=N", a header
// "i,j,weight", then one row per dyad with weight >= 1 (0-based ids). Node
// count lives in the directive so isolates survive round trips. Symmetric
// duplicates are accepted; conflicting duplicates are a parse error.
WeightedNetwork read_weighted_edgelist(const std::string& path);
void write_weighted_edgelist(const WeightedNetwork& y, const std::string& path);

// Same container with real-valued weights, the ordinalize() input.
SymmetricRealMatrix read_real_edgelist(const std::string& path);

// A single binary layer, written as an edge list with weight 1.
void write_layer_edgelist(const BinaryLayer& layer, const std::string& path);

// Attribute table: header "node,name1,name2,...", one row per node; every
// node 0..N-1 must appear exactly once.
NodeAttributes read_attributes(const std::string& path);

// Posterior sample files: "chain,iteration,layer,param_index,value" for the
// layer parameters and "chain,iteration,component,row,col,value" for the
// hierarchical draws (component mu uses col 0; sigma stores the upper
// triangle). Layers are 1-based; chains and parameter indices 0-based.
void write_posterior(const PosteriorSamples& samples, const std::string& phi_path, const std::string& hyper_path);
PosteriorSamples read_posterior(const std::string& phi_path, const std::string& hyper_path);
PosteriorSamples read_posterior_phi_only(const std::string& phi_path);

void write_acceptance_report(const PosteriorSamples& samples, const std::string& path);

// GOF output: envelope rows "node,quantile,value" (the observed degrees ride
// along under quantile label "observed"), a plot-ready long replicate file
// "replicate,node,weighted_degree", and a "metric,value" summary.
void write_gof_report(const GofReport& report, const std::string& envelope_path, const std::string& replicates_path,
                      const std::string& summary_path);

void write_summary_csv(const PosteriorSummary& summary, const std::string& path);

// Shortest decimal text that round-trips the exact double.
std::string format_double(double v);

// FNV-1a 64-bit digest of a file's bytes, as hex; used by run manifests.
std::string fnv1a64_file(const std::string& path);

// Write-to-temp + rename so readers never observe a partial file.
void atomic_write_text(const std::string& path, const std::string& content);

}  // namespace mergm
