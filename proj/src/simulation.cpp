#include "dlbf/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>

#include "dlbf/errors.hpp"
#include "dlbf/hashing.hpp"
#include "dlbf/standard_bloom_filter.hpp"

namespace dlbf::sim {
namespace {

constexpr std::string_view kAlphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
constexpr std::size_t kSyntheticLength = 16;

// Uniform integer in [0, bound) by rejection; independent of the standard
// library's distribution implementations so results are portable.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
  }
}

std::vector<std::string> synthetic_elements(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  out.reserve(count);
  std::unordered_set<std::string> seen;
  seen.reserve(count);
  while (out.size() < count) {
    std::string s(kSyntheticLength, ' ');
    for (char& c : s) c = kAlphabet[uniform_below(rng, kAlphabet.size())];
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> wordlist_elements(const WordlistSource& source, std::size_t count,
                                           std::uint64_t seed) {
  if (!source.entries) throw ConfigError("wordlist source not loaded");
  const auto& entries = *source.entries;
  if (entries.size() < count) {
    throw ConfigError("wordlist " + source.path.string() + " has " +
                      std::to_string(entries.size()) + " distinct entries, need " +
                      std::to_string(count));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  out.reserve(count);
  if (count * 2 <= entries.size()) {
    std::unordered_set<std::size_t> taken;
    while (out.size() < count) {
      const std::size_t i = uniform_below(rng, entries.size());
      if (taken.insert(i).second) out.push_back(entries[i]);
    }
  } else {
    std::vector<std::size_t> idx(entries.size());
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i < count; ++i) {
      std::swap(idx[i], idx[i + uniform_below(rng, idx.size() - i)]);
      out.push_back(entries[idx[i]]);
    }
  }
  return out;
}

double fraction(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

// Elements and removal-order RNG for one trial. The first n elements are
// inserted, the rest are probes.
struct TrialSetup {
  std::vector<std::string> elements;
  std::mt19937_64 rng;
};

TrialSetup setup_trial(const ExperimentConfig& config, std::uint32_t trial_index) {
  TrialSetup setup{{}, std::mt19937_64(trial_seed(config.master_seed, trial_index))};
  setup.elements = generate_elements(config.source, std::size_t{config.n} + config.probes,
                                     setup.rng());
  return setup;
}

template <typename Filter>
double probe_rate(const Filter& filter, const std::vector<std::string>& elements, std::size_t n) {
  std::size_t hits = 0;
  for (std::size_t i = n; i < elements.size(); ++i) hits += filter.contains(elements[i]) ? 1 : 0;
  return fraction(hits, elements.size() - n);
}

template <typename TrialFn>
std::vector<TrialResult> run_trials(const ExperimentConfig& config, TrialFn&& fn) {
  std::vector<TrialResult> results(config.trials);
  unsigned workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, config.trials);

  std::atomic<std::uint32_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::uint32_t t = next++; t < config.trials; t = next++) results[t] = fn(t);
    } catch (...) {
      errors[w] = std::current_exception();
      next = config.trials;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

AggregateResult aggregate(const ExperimentConfig& config, const std::vector<TrialResult>& trials) {
  auto column = [&](auto member) {
    std::vector<double> values;
    values.reserve(trials.size());
    for (const TrialResult& t : trials) values.push_back(static_cast<double>(t.*member));
    return summarize(values);
  };
  AggregateResult out;
  out.config = config;
  out.deletable = column(&TrialResult::deletable_fraction);
  out.bits_reset = column(&TrialResult::bits_reset_fraction);
  out.fpr_before = column(&TrialResult::fpr_before);
  out.fpr_after = column(&TrialResult::fpr_after);
  out.data_bits_set_before = column(&TrialResult::data_bits_set_before);
  out.bitmap_saturation = column(&TrialResult::bitmap_saturation);
  return out;
}

void validate_protocol(const ExperimentConfig& config) {
  if (config.trials == 0) throw ConfigError("trials must be >= 1");
  if (config.probes == 0) throw ConfigError("probes must be >= 1");
  if (const auto* words = std::get_if<WordlistSource>(&config.source)) {
    const std::size_t need = std::size_t{config.n} + config.probes;
    if (!words->entries) throw ConfigError("wordlist source not loaded");
    if (words->entries->size() < need) {
      throw ConfigError("wordlist " + words->path.string() + " has " +
                        std::to_string(words->entries->size()) +
                        " distinct entries, need n + probes = " + std::to_string(need));
    }
  }
}

}  // namespace

WordlistSource WordlistSource::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read wordlist " + path.string());
  auto entries = std::make_shared<std::vector<std::string>>();
  std::unordered_set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (seen.insert(line).second) entries->push_back(line);
  }
  if (in.bad()) throw ConfigError("error reading wordlist " + path.string());
  return {path, std::move(entries)};
}

std::vector<std::string> generate_elements(const ElementSource& source, std::size_t count,
                                           std::uint64_t seed) {
  if (const auto* words = std::get_if<WordlistSource>(&source)) {
    return wordlist_elements(*words, count, seed);
  }
  return synthetic_elements(count, seed);
}

void ExperimentConfig::validate() const {
  params.validate();
  validate_protocol(*this);
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) noexcept {
  return mix64(master_seed + 0x9e3779b97f4a7c15ULL * (trial_index + 1));
}

MetricSummary summarize(const std::vector<double>& values) {
  MetricSummary s;
  if (values.empty()) return s;
  const double count = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / count;
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / (count - 1.0));
    s.ci95 = 1.96 * s.stddev / std::sqrt(count);
  }
  return s;
}

TrialResult run_trial(const ExperimentConfig& config, std::uint32_t trial_index) {
  TrialSetup setup = setup_trial(config, trial_index);
  const std::size_t n = config.n;

  DeletableBloomFilter filter(config.params);
  for (std::size_t i = 0; i < n; ++i) filter.insert(setup.elements[i]);

  TrialResult result;
  const BitCounts before = filter.bit_counts();
  result.data_bits_set_before = before.data_bits_set;
  result.bitmap_saturation = fraction(before.bitmap_bits_set, config.params.r);
  result.fpr_before = probe_rate(filter, setup.elements, n);

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  shuffle(order, setup.rng);
  std::size_t deleted = 0;
  for (std::uint32_t i : order) {
    if (filter.remove(setup.elements[i]) == RemoveOutcome::kDeleted) ++deleted;
  }

  const BitCounts after = filter.bit_counts();
  result.deletable_fraction = n == 0 ? 1.0 : fraction(deleted, n);
  result.bits_reset_fraction = fraction(before.data_bits_set - after.data_bits_set, before.data_bits_set);
  result.fpr_after = probe_rate(filter, setup.elements, n);
  return result;
}

TrialTrace trace_trial(const ExperimentConfig& config, std::uint32_t trial_index,
                       std::uint64_t order_seed) {
  TrialSetup setup = setup_trial(config, trial_index);
  const std::size_t n = config.n;
  DeletableBloomFilter filter(config.params);
  for (std::size_t i = 0; i < n; ++i) filter.insert(setup.elements[i]);

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  std::mt19937_64 order_rng(order_seed);
  shuffle(order, order_rng);

  TrialTrace trace;
  trace.inserted.assign(setup.elements.begin(), setup.elements.begin() + static_cast<std::ptrdiff_t>(n));
  trace.outcomes.resize(n);
  for (std::uint32_t i : order) trace.outcomes[i] = filter.remove(setup.elements[i]);
  return trace;
}

AggregateResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  return aggregate(config, run_trials(config, [&](std::uint32_t t) { return run_trial(config, t); }));
}

AggregateResult run_sbf_baseline(const ExperimentConfig& config) {
  validate_protocol(config);
  // Constructing once checks m and k; r plays no part in the baseline.
  static_cast<void>(StandardBloomFilter(config.params.m, config.params.k, config.params.seed));
  auto trial = [&](std::uint32_t t) {
    TrialSetup setup = setup_trial(config, t);
    StandardBloomFilter filter(config.params.m, config.params.k, config.params.seed);
    for (std::size_t i = 0; i < config.n; ++i) filter.insert(setup.elements[i]);
    TrialResult result;
    result.data_bits_set_before = filter.bits().count();
    result.fpr_before = probe_rate(filter, setup.elements, config.n);
    return result;
  };
  return aggregate(config, run_trials(config, trial));
}

}  // namespace dlbf::sim
