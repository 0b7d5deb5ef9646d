#include "dlbf/table.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace dlbf {
namespace {

std::uint64_t as_int(std::uint64_t v) { return v; }

}  // namespace

std::string format_cell(const Cell& cell) {
  if (const auto* i = std::get_if<std::uint64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", *d);
    return buf;
  }
  return {};
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_cell(row[c]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      const Cell& cell = row[c];
      if (const auto* i = std::get_if<std::uint64_t>(&cell)) {
        obj[table.columns[c]] = *i;
      } else if (const auto* d = std::get_if<double>(&cell); d && std::isfinite(*d)) {
        // Same rounding as the CSV output.
        obj[table.columns[c]] = std::stod(format_cell(cell));
      } else {
        obj[table.columns[c]] = nullptr;
      }
    }
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << '\n';
}

Table model_table(std::span<const analysis::ModelPoint> points) {
  Table t{kModelColumns, {}};
  for (const auto& p : points) {
    Cell density = std::monostate{};
    if (p.density) density = *p.density;
    t.rows.push_back({as_int(p.params.m), as_int(p.params.r), as_int(p.params.k), as_int(p.params.n),
                      density, p.p0, p.p1, p.pc, p.pd, p.fpr_dlbf, p.fpr_sbf});
  }
  return t;
}

Table aggregate_table(std::span<const sim::AggregateResult> results) {
  Table t{kAggregateColumns, {}};
  for (const auto& a : results) {
    const auto& c = a.config;
    t.rows.push_back({as_int(c.params.m), as_int(c.params.r), as_int(c.params.k), as_int(c.n),
                      as_int(c.trials), as_int(c.probes), c.master_seed,
                      a.deletable.mean, a.deletable.stddev, a.deletable.ci95, a.bits_reset.mean,
                      a.fpr_before.mean, a.fpr_before.ci95, a.fpr_after.mean, a.fpr_after.ci95,
                      a.bitmap_saturation.mean});
  }
  return t;
}

}  // namespace dlbf
