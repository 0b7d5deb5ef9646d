#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dlbf/analysis.hpp"
#include "dlbf/simulation.hpp"

namespace dlbf {

// Column-oriented result table shared by the CLI and the Python module.
// Doubles are rendered with 6 significant digits; std::monostate renders as
// an empty CSV field or JSON null.
using Cell = std::variant<std::monostate, std::uint64_t, double>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_cell(const Cell& cell);

void write_csv(std::ostream& out, const Table& table);
/// JSON array, one object per row with the CSV column names as keys.
void write_json(std::ostream& out, const Table& table);

inline const std::vector<std::string> kModelColumns = {
    "m", "r", "k", "n", "density", "p0", "p1", "pc", "pd", "fpr_dlbf", "fpr_sbf"};

inline const std::vector<std::string> kAggregateColumns = {
    "m",           "r",         "k",               "n",
    "trials",      "probes",    "master_seed",     "mean_deletable",
    "std_deletable", "ci95_deletable", "mean_bits_reset", "mean_fpr_before",
    "ci95_fpr_before", "mean_fpr_after", "ci95_fpr_after", "mean_bitmap_saturation"};

Table model_table(std::span<const analysis::ModelPoint> points);
Table aggregate_table(std::span<const sim::AggregateResult> results);

}  // namespace dlbf
