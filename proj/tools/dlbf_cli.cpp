// dlbf: command-line front end for the Deletable Bloom filter library.
//
//   dlbf model    closed-form deletability / fpr rows or m/r x m/n sweeps
//   dlbf simulate Monte-Carlo insert/remove experiment, optional SBF baseline
//   dlbf figure   datasets for the deletability and fpr figures
//   dlbf filter   create/insert/query/remove on a filter file

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dlbf/analysis.hpp"
#include "dlbf/deletable_bloom_filter.hpp"
#include "dlbf/errors.hpp"
#include "dlbf/figures.hpp"
#include "dlbf/serialization.hpp"
#include "dlbf/simulation.hpp"
#include "dlbf/table.hpp"

namespace {

using dlbf::ConfigError;

struct OutputOptions {
  std::string format = "csv";
  std::string out;

  void add_to(CLI::App& app) {
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", out, "Write to this file instead of standard output");
  }

  // The table is rendered in full before anything is written.
  void emit(const dlbf::Table& table) const {
    std::ostringstream buf;
    if (format == "json") {
      dlbf::write_json(buf, table);
    } else {
      dlbf::write_csv(buf, table);
    }
    if (out.empty()) {
      std::cout << buf.str() << std::flush;
      return;
    }
    std::ofstream file(out, std::ios::trunc);
    file << buf.str();
    file.close();
    if (!file) throw dlbf::Error("cannot write " + out);
  }
};

void warn_model_assumption(const dlbf::FilterParams& p) {
  if (!p.satisfies_model_assumption()) {
    std::cerr << "warning: r = " << p.r << " < k = " << p.k
              << "; the deletability model assumes r >= k\n";
  }
}

void check_dimensions(std::uint32_t m, std::uint32_t r, std::uint32_t k) {
  if (k == 0) throw ConfigError("--k must be >= 1");
  if (r == 0) throw ConfigError("--r must be >= 1");
  if (r >= m) {
    throw ConfigError("--r must be less than --m (got r = " + std::to_string(r) +
                      " >= m = " + std::to_string(m) + ")");
  }
}

// "lo:hi" or "lo:hi:step", inclusive.
std::vector<std::uint64_t> parse_range(const std::string& spec) {
  std::vector<std::uint64_t> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("--n-range: '" + spec + "' is not lo:hi[:step]");
    }
  }
  if (parts.size() < 2 || parts.size() > 3 || parts[0] > parts[1] ||
      (parts.size() == 3 && parts[2] == 0)) {
    throw ConfigError("--n-range: '" + spec + "' is not lo:hi[:step] with lo <= hi, step >= 1");
  }
  const std::uint64_t step = parts.size() == 3 ? parts[2] : 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = parts[0]; n <= parts[1]; n += step) out.push_back(n);
  return out;
}

struct ModelCommand {
  std::uint32_t m = 240;
  std::uint32_t r = 24;
  std::uint32_t k = 5;
  std::vector<std::uint64_t> n{22};
  std::string n_range;
  std::vector<double> ratios;
  std::vector<double> densities;
  OutputOptions output;

  void add_to(CLI::App& parent) {
    auto* cmd = parent.add_subcommand("model", "Evaluate the closed-form model");
    cmd->add_option("--m", m, "Total bits")->capture_default_str();
    cmd->add_option("--r", r, "Collision bitmap bits (regions)")->capture_default_str();
    cmd->add_option("--k", k, "Hash indices per element")->capture_default_str();
    cmd->add_option("--n", n, "Inserted elements (repeatable)")->capture_default_str();
    cmd->add_option("--n-range", n_range, "Inclusive n range lo:hi[:step]");
    cmd->add_option("--ratios", ratios, "m/r ratios for a sweep (replaces --r)");
    cmd->add_option("--densities", densities, "m/n densities for a sweep (replaces --n)");
    output.add_to(*cmd);
    cmd->callback([this] { run(); });
  }

  void run() {
    if (k == 0) throw ConfigError("--k must be >= 1");
    if (!ratios.empty() || !densities.empty()) {
      if (ratios.empty()) ratios = {2, 4, 10, 20, 40};
      if (densities.empty()) {
        for (int d = 2; d <= 32; ++d) densities.push_back(d);
      }
      output.emit(dlbf::model_table(dlbf::analysis::deletability_curve(m, ratios, k, densities)));
      return;
    }
    check_dimensions(m, r, k);
    warn_model_assumption({m, r, k, 0});
    const std::vector<std::uint64_t> ns = n_range.empty() ? n : parse_range(n_range);
    std::vector<dlbf::analysis::ModelPoint> points;
    for (std::uint64_t count : ns) points.push_back(dlbf::analysis::evaluate({m, r, k, count}));
    output.emit(dlbf::model_table(points));
  }
};

struct SimulateCommand {
  dlbf::sim::ExperimentConfig config;
  std::uint64_t hash_seed = 42;
  std::string source = "synthetic";
  std::string wordlist;
  std::string baseline;
  OutputOptions output;

  void add_to(CLI::App& parent) {
    auto* cmd = parent.add_subcommand("simulate", "Run the Monte-Carlo insert/remove experiment");
    cmd->add_option("--m", config.params.m, "Total bits")->capture_default_str();
    cmd->add_option("--r", config.params.r, "Collision bitmap bits (regions)")->capture_default_str();
    cmd->add_option("--k", config.params.k, "Hash indices per element")->capture_default_str();
    cmd->add_option("--n", config.n, "Inserted elements per trial")->capture_default_str();
    cmd->add_option("--trials", config.trials, "Independent trials")->capture_default_str();
    cmd->add_option("--probes", config.probes, "Non-member probes per trial")->capture_default_str();
    cmd->add_option("--seed", config.master_seed, "Master seed")
        ->envname("DLBF_SEED")
        ->capture_default_str();
    cmd->add_option("--hash-seed", hash_seed, "Filter hashing seed")->capture_default_str();
    cmd->add_option("--source", source, "Element source")
        ->check(CLI::IsMember({"synthetic", "wordlist"}))
        ->capture_default_str();
    cmd->add_option("--wordlist", wordlist, "Newline-delimited word file (implies --source wordlist)");
    cmd->add_option("--baseline", baseline, "Also run a baseline filter")
        ->check(CLI::IsMember({"sbf"}));
    cmd->add_option("--threads", config.threads, "Worker threads (0 = all cores)");
    output.add_to(*cmd);
    cmd->callback([this] { run(); });
  }

  void run() {
    check_dimensions(config.params.m, config.params.r, config.params.k);
    config.params.seed = hash_seed;
    if (config.trials == 0) throw ConfigError("--trials must be >= 1");
    if (config.probes == 0) throw ConfigError("--probes must be >= 1");
    if (!wordlist.empty()) source = "wordlist";
    if (source == "wordlist") {
      if (wordlist.empty()) throw ConfigError("--source wordlist needs --wordlist PATH");
      config.source = dlbf::sim::WordlistSource::load(wordlist);
    }
    warn_model_assumption(config.params);

    std::vector<dlbf::sim::AggregateResult> rows{dlbf::sim::run_experiment(config)};
    if (baseline == "sbf") {
      // The baseline row carries r = 0: the whole m bits hold data.
      dlbf::sim::AggregateResult sbf = dlbf::sim::run_sbf_baseline(config);
      sbf.config.params.r = 0;
      rows.push_back(sbf);
    }
    output.emit(dlbf::aggregate_table(rows));
  }
};

struct FigureCommand {
  std::string id;
  dlbf::sim::FigureOverrides overrides;
  std::uint32_t trials = 2000;
  std::uint32_t probes = 500;
  std::uint64_t seed = 42;
  std::uint32_t m = 240;
  std::uint32_t k = 5;
  OutputOptions output;

  void add_to(CLI::App& parent) {
    auto* cmd = parent.add_subcommand("figure", "Emit a figure dataset (fig2, fig3, fig4)");
    cmd->add_option("--id", id, "Figure id: fig2, fig3 or fig4")->required();
    cmd->add_option("--trials", trials, "Trials per point (fig3, fig4)")->capture_default_str();
    cmd->add_option("--probes", probes, "Probes per trial (fig3, fig4)")->capture_default_str();
    cmd->add_option("--seed", seed, "Master seed")->envname("DLBF_SEED")->capture_default_str();
    cmd->add_option("--m", m, "Total bits")->capture_default_str();
    cmd->add_option("--k", k, "Hash indices per element")->capture_default_str();
    cmd->add_option("--n", overrides.n_values, "n sweep (fig3, fig4)");
    cmd->add_option("--r", overrides.r_values, "r sweep (fig3) or r (fig4)");
    cmd->add_option("--ratios", overrides.ratios, "m/r ratios (fig2)");
    cmd->add_option("--densities", overrides.densities, "m/n densities (fig2)");
    cmd->add_option("--threads", overrides.threads, "Worker threads (0 = all cores)");
    output.add_to(*cmd);
    cmd->callback([this] { run(); });
  }

  void run() {
    const dlbf::sim::FigureId which = dlbf::sim::parse_figure_id(id);
    if (trials == 0) throw ConfigError("--trials must be >= 1");
    if (probes == 0) throw ConfigError("--probes must be >= 1");
    if (k == 0) throw ConfigError("--k must be >= 1");
    overrides.trials = trials;
    overrides.probes = probes;
    overrides.seed = seed;
    overrides.m = m;
    overrides.k = k;
    output.emit(dlbf::sim::figure_dataset(which, overrides));
  }
};

struct FilterCommand {
  std::string file;
  std::optional<std::uint32_t> m;
  std::optional<std::uint32_t> r;
  std::optional<std::uint32_t> k;
  std::optional<std::uint64_t> seed;
  std::string element;
  bool force = false;

  void add_params(CLI::App& cmd) {
    cmd.add_option("--file", file, "Filter file")->required();
    cmd.add_option("--m", m, "Total bits");
    cmd.add_option("--r", r, "Collision bitmap bits (regions)");
    cmd.add_option("--k", k, "Hash indices per element");
    cmd.add_option("--seed", seed, "Hashing seed");
  }

  void add_to(CLI::App& parent) {
    auto* cmd = parent.add_subcommand("filter", "Manipulate a filter file");
    cmd->require_subcommand(1);

    auto* create = cmd->add_subcommand("create", "Write an empty filter");
    add_params(*create);
    create->add_flag("--force", force, "Overwrite an existing file");
    create->callback([this] { run_create(); });

    for (const char* action : {"insert", "query", "remove"}) {
      auto* sub = cmd->add_subcommand(action, std::string(action) + " an element");
      add_params(*sub);
      sub->add_option("element", element, "Element (raw bytes of the argument)")->required();
      const std::string name = action;
      sub->callback([this, name] { run_action(name); });
    }
  }

  void run_create() {
    const dlbf::FilterParams params{m.value_or(240), r.value_or(24), k.value_or(5), seed.value_or(42)};
    check_dimensions(params.m, params.r, params.k);
    params.validate();
    warn_model_assumption(params);
    if (!force && std::filesystem::exists(file)) {
      throw dlbf::Error(file + " already exists (use --force to overwrite)");
    }
    dlbf::save_filter(file, dlbf::DeletableBloomFilter(params));
  }

  // Flags given alongside an existing file must agree with its header.
  void check_matches(const dlbf::FilterParams& p) const {
    auto mismatch = [&](const char* flag, auto given, auto stored) {
      throw ConfigError(std::string("dimension mismatch: ") + flag + " " + std::to_string(given) +
                        " but " + file + " has " + std::to_string(stored));
    };
    if (m && *m != p.m) mismatch("--m", *m, p.m);
    if (r && *r != p.r) mismatch("--r", *r, p.r);
    if (k && *k != p.k) mismatch("--k", *k, p.k);
    if (seed && *seed != p.seed) mismatch("--seed", *seed, p.seed);
  }

  void run_action(const std::string& action) {
    dlbf::DeletableBloomFilter filter = dlbf::load_filter(file);
    check_matches(filter.params());
    if (action == "insert") {
      filter.insert(element);
      dlbf::save_filter(file, filter);
    } else if (action == "query") {
      std::cout << (filter.contains(element) ? "true" : "false") << '\n';
    } else {
      const dlbf::RemoveOutcome outcome = filter.remove(element);
      if (outcome == dlbf::RemoveOutcome::kDeleted) dlbf::save_filter(file, filter);
      std::cout << dlbf::to_string(outcome) << '\n';
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deletable Bloom filter: model, simulator and filter files"};
  app.require_subcommand(1);

  ModelCommand model;
  SimulateCommand simulate;
  FigureCommand figure;
  FilterCommand filter;
  model.add_to(app);
  simulate.add_to(app);
  figure.add_to(app);
  filter.add_to(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const dlbf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
