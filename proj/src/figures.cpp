#include "dlbf/figures.hpp"

#include "dlbf/analysis.hpp"
#include "dlbf/errors.hpp"
#include "dlbf/simulation.hpp"

namespace dlbf::sim {
namespace {

constexpr std::uint32_t kDefaultM = 240;
constexpr std::uint32_t kDefaultK = 5;
constexpr std::uint32_t kDefaultTrials = 2000;
constexpr std::uint32_t kDefaultProbes = 500;
constexpr std::uint64_t kDefaultSeed = 42;
constexpr std::uint32_t kFig4Regions = 24;

std::vector<std::uint32_t> default_n_values() {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = 2; n <= 50; n += 2) out.push_back(n);
  return out;
}

ExperimentConfig base_config(const FigureOverrides& o) {
  ExperimentConfig c;
  c.params.m = o.m.value_or(kDefaultM);
  c.params.k = o.k.value_or(kDefaultK);
  c.params.seed = o.hash_seed.value_or(kDefaultSeed);
  c.trials = o.trials.value_or(kDefaultTrials);
  c.probes = o.probes.value_or(kDefaultProbes);
  c.master_seed = o.seed.value_or(kDefaultSeed);
  c.threads = o.threads;
  return c;
}

Table fig2(const FigureOverrides& o) {
  std::vector<double> ratios = o.ratios;
  if (ratios.empty()) ratios = {2, 4, 10, 20, 40};
  std::vector<double> densities = o.densities;
  if (densities.empty()) {
    for (int d = 2; d <= 32; ++d) densities.push_back(d);
  }
  const auto points =
      analysis::deletability_curve(o.m.value_or(kDefaultM), ratios, o.k.value_or(kDefaultK), densities);
  return model_table(points);
}

Table fig3(const FigureOverrides& o) {
  std::vector<std::uint32_t> regions = o.r_values;
  if (regions.empty()) regions = {12, 24, 60, 120};
  const std::vector<std::uint32_t> ns = o.n_values.empty() ? default_n_values() : o.n_values;
  std::vector<AggregateResult> results;
  for (std::uint32_t r : regions) {
    for (std::uint32_t n : ns) {
      ExperimentConfig c = base_config(o);
      c.params.r = r;
      c.n = n;
      results.push_back(run_experiment(c));
    }
  }
  return aggregate_table(results);
}

Table fig4(const FigureOverrides& o) {
  const std::uint32_t r = o.r_values.empty() ? kFig4Regions : o.r_values.front();
  const std::vector<std::uint32_t> ns = o.n_values.empty() ? default_n_values() : o.n_values;
  Table t{kFig4Columns, {}};
  for (std::uint32_t n : ns) {
    ExperimentConfig c = base_config(o);
    c.params.r = r;
    c.n = n;
    const AggregateResult dl = run_experiment(c);
    const AggregateResult sbf = run_sbf_baseline(c);
    t.rows.push_back({std::uint64_t{c.params.m}, std::uint64_t{r}, std::uint64_t{c.params.k},
                      std::uint64_t{n}, std::uint64_t{c.trials}, std::uint64_t{c.probes},
                      c.master_seed, dl.fpr_before.mean, dl.fpr_before.ci95, dl.fpr_after.mean,
                      dl.fpr_after.ci95, sbf.fpr_before.mean, sbf.fpr_before.ci95});
  }
  return t;
}

}  // namespace

FigureId parse_figure_id(std::string_view id) {
  if (id == "fig2") return FigureId::kFig2;
  if (id == "fig3") return FigureId::kFig3;
  if (id == "fig4") return FigureId::kFig4;
  throw ConfigError("unknown figure id '" + std::string(id) + "'; valid ids: fig2, fig3, fig4");
}

std::string_view to_string(FigureId id) noexcept {
  switch (id) {
    case FigureId::kFig2:
      return "fig2";
    case FigureId::kFig3:
      return "fig3";
    case FigureId::kFig4:
      return "fig4";
  }
  return "?";
}

Table figure_dataset(FigureId id, const FigureOverrides& overrides) {
  switch (id) {
    case FigureId::kFig2:
      return fig2(overrides);
    case FigureId::kFig3:
      return fig3(overrides);
    case FigureId::kFig4:
      return fig4(overrides);
  }
  throw ConfigError("invalid figure id");
}

}  // namespace dlbf::sim
