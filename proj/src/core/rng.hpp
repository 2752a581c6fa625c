#pragma once

#include <cstdint>
#include <random>

namespace mergm {

// Deterministic RNG built on std::mt19937_64 with hand-rolled distributions.
// The std:: distribution adaptors are implementation-defined, which would make
// "same seed => byte-identical outputs" depend on the standard library; the
// transforms below are pinned here instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; safe as a log() argument.
  double uniform_pos() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

  // Uniform integer in [0, n), n >= 1. Rejection sampling, no modulo bias.
  std::uint64_t uniform_int(std::uint64_t n);

  // Standard normal via Box-Muller (two uniforms per call, no cached spare).
  double normal();

  // Gamma(shape, scale=1) via Marsaglia-Tsang; shape < 1 boosted through
  // Gamma(shape + 1) * U^(1/shape).
  double gamma(double shape);

  double chi_squared(double dof) { return 2.0 * gamma(0.5 * dof); }

  // Independent substream keyed by (root seed, stream id); call order and
  // thread placement do not affect the derived stream.
  Rng spawn(std::uint64_t stream) const;

 private:
  std::uint64_t root_seed_;
  std::mt19937_64 engine_;
};

// SplitMix64 step; used for seed derivation.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace mergm
