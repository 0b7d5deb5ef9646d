#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "dlbf/deletable_bloom_filter.hpp"
#include "dlbf/filter_params.hpp"

namespace dlbf::sim {

struct SyntheticSource {};

/// Distinct entries of a newline-delimited UTF-8 file, in file order.
struct WordlistSource {
  std::filesystem::path path;
  std::shared_ptr<const std::vector<std::string>> entries;

  /// Throws ConfigError if the file cannot be read.
  static WordlistSource load(const std::filesystem::path& path);
};

using ElementSource = std::variant<SyntheticSource, WordlistSource>;

/// `count` distinct elements, a pure function of (source, count, seed).
/// Synthetic elements are 16-character alphanumeric strings. Throws
/// ConfigError if a wordlist holds fewer than `count` distinct entries.
std::vector<std::string> generate_elements(const ElementSource& source, std::size_t count,
                                           std::uint64_t seed);

enum class RemovalPolicy { kRemoveAllInRandomOrder };

struct ExperimentConfig {
  FilterParams params{240, 24, 5, 42};
  std::uint32_t n = 22;
  std::uint32_t trials = 2000;
  std::uint32_t probes = 500;
  std::uint64_t master_seed = 42;
  ElementSource source = SyntheticSource{};
  RemovalPolicy removal_policy = RemovalPolicy::kRemoveAllInRandomOrder;
  /// Worker threads; 0 picks hardware concurrency. Never affects results.
  unsigned threads = 0;

  /// Throws ConfigError.
  void validate() const;
};

/// Seed of trial `trial_index`, derived from the master seed.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) noexcept;

struct TrialResult {
  double deletable_fraction = 0.0;   // share of the n elements whose removal cleared a bit
  double bits_reset_fraction = 0.0;  // cleared data bits / data bits set before removal
  double fpr_before = 0.0;
  double fpr_after = 0.0;
  std::size_t data_bits_set_before = 0;
  double bitmap_saturation = 0.0;  // marked regions / r
};

struct MetricSummary {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  double ci95 = 0.0;    // 1.96 * stddev / sqrt(trials)
};

MetricSummary summarize(const std::vector<double>& values);

struct AggregateResult {
  ExperimentConfig config;
  MetricSummary deletable;
  MetricSummary bits_reset;
  MetricSummary fpr_before;
  MetricSummary fpr_after;
  MetricSummary data_bits_set_before;
  MetricSummary bitmap_saturation;
};

/// One trial: insert n elements into a fresh filter, measure fpr over the
/// probes, remove all n in a seeded random order, measure again.
/// With n == 0 the deletable fraction is reported as 1 and bits reset as 0.
TrialResult run_trial(const ExperimentConfig& config, std::uint32_t trial_index);

/// Same, returning each element's removal outcome in insertion order, with
/// the removal order drawn from `order_seed` instead of the trial seed.
struct TrialTrace {
  std::vector<std::string> inserted;
  std::vector<RemoveOutcome> outcomes;
};
TrialTrace trace_trial(const ExperimentConfig& config, std::uint32_t trial_index,
                       std::uint64_t order_seed);

/// Runs config.trials trials and reduces them in trial-index order, so the
/// result does not depend on config.threads.
AggregateResult run_experiment(const ExperimentConfig& config);

/// Same protocol with a StandardBloomFilter of the full m bits and no
/// removals. Only fpr_before is populated.
AggregateResult run_sbf_baseline(const ExperimentConfig& config);

}  // namespace dlbf::sim
