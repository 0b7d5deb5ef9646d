#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dlbf/table.hpp"

namespace dlbf::sim {

enum class FigureId { kFig2, kFig3, kFig4 };

/// Throws ConfigError listing the valid ids.
FigureId parse_figure_id(std::string_view id);
std::string_view to_string(FigureId id) noexcept;

// Unset fields fall back to the defaults: m=240, k=5, 2000 trials, 500
// probes, seed 42, r in {12, 24, 60, 120} for fig3 and r=24 for fig4,
// n in {2, 4, ..., 50}, m/r in {2, 4, 10, 20, 40} and m/n in {2, 3, ..., 32}.
struct FigureOverrides {
  std::optional<std::uint32_t> m;
  std::optional<std::uint32_t> k;
  std::optional<std::uint32_t> trials;
  std::optional<std::uint32_t> probes;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> hash_seed;
  unsigned threads = 0;
  std::vector<std::uint32_t> n_values;
  std::vector<std::uint32_t> r_values;
  std::vector<double> ratios;
  std::vector<double> densities;
};

inline const std::vector<std::string> kFig4Columns = {
    "m",           "r",           "k",        "n",
    "trials",      "probes",      "master_seed", "mean_fpr_before",
    "ci95_fpr_before", "mean_fpr_after", "ci95_fpr_after", "mean_fpr_sbf",
    "ci95_fpr_sbf"};

// fig2: closed-form sweep, model columns.
// fig3: simulated aggregates over r x n, aggregate columns.
// fig4: DlBF before/after removal and the SBF baseline per n, fig4 columns.
Table figure_dataset(FigureId id, const FigureOverrides& overrides = {});

}  // namespace dlbf::sim
