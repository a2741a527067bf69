#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pbr/classical.hpp"
#include "pbr/pbr.hpp"

namespace pbr {

  using Rng = std::mt19937_64;

  // Labels "0", ..., "n-1".
  Labels numbered_labels(std::size_t n);

  // Each of the n² (resp. (2n)²) possible edges is present independently with
  // probability 1/2, on the set numbered_labels(n).
  BinaryRelation sample_relation(std::size_t n, Rng& rng);
  Pbr            sample_pbr(std::size_t n, Rng& rng);

  // Generator for trial `trial` at size n; depends only on its arguments.
  Rng trial_rng(std::uint64_t seed, std::size_t n, std::uint64_t trial);

  enum class ExperimentMode { binary_pair, binary_triple, pbr_pair };

  std::string_view              to_string(ExperimentMode mode);
  std::optional<ExperimentMode> parse_mode(std::string_view text);

  struct ExperimentConfig {
    std::vector<std::size_t> sizes;
    std::size_t              samples_per_size = 1000;
    std::uint64_t            seed             = 0;
    ExperimentMode           mode             = ExperimentMode::binary_pair;
    // 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
  };

  struct SizeRecord {
    std::size_t n          = 0;
    std::size_t trials     = 0;
    std::size_t full_count = 0;
    double      fraction   = 0;
    double      ci_low     = 0;
    double      ci_high    = 0;

    friend bool operator==(SizeRecord const&, SizeRecord const&) = default;
  };

  struct ExperimentResult {
    ExperimentConfig        config;
    std::string             rng_algorithm;
    std::vector<SizeRecord> records;
    // pbr-pair: samples where all four block conditions hold, and how many of
    // those failed to give the full product.
    std::size_t sufficiency_fired      = 0;
    std::size_t sufficiency_violations = 0;
    // binary-triple: samples where both adjacent pair products are full, and
    // how many of those failed to give the full triple product.
    std::size_t mechanism_fired      = 0;
    std::size_t mechanism_violations = 0;
  };

  // 95% Wilson score interval for k successes in n trials.
  std::pair<double, double> wilson_interval(std::size_t k, std::size_t n);

  // Throws AssertionFailure on an invalid config.
  ExperimentResult run_experiment(ExperimentConfig const& cfg);

  // Header `mode,n,trials,full_count,fraction,ci_low,ci_high,seed` then one
  // row per size.
  void write_csv(std::ostream& out, ExperimentResult const& result);

}  // namespace pbr
