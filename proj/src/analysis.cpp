#include "dlbf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dlbf/errors.hpp"

namespace dlbf::analysis {
namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// (1 - 1/cells)^events evaluated in log space; cells >= 1.
double pow_miss(std::uint64_t cells, double events) {
  if (events == 0.0) return 1.0;
  if (cells == 1) return 0.0;
  return std::exp(events * std::log1p(-1.0 / static_cast<double>(cells)));
}

// 1 - (1 - 1/cells)^events without cancellation for small events/cells.
double fill_fraction(std::uint64_t cells, double events) {
  if (events == 0.0) return 0.0;
  if (cells == 1) return 1.0;
  return -std::expm1(events * std::log1p(-1.0 / static_cast<double>(cells)));
}

}  // namespace

void ModelParams::validate() const {
  if (r == 0) throw DomainError("model requires r >= 1");
  if (k == 0) throw DomainError("model requires k >= 1");
  if (m <= r) {
    throw DomainError("model requires m > r (got m = " + std::to_string(m) +
                      ", r = " + std::to_string(r) + ")");
  }
}

CellProbabilities cell_probabilities(std::uint64_t m_prime, std::uint32_t k, std::uint64_t n) {
  if (m_prime == 0) throw DomainError("cell probabilities require m' >= 1");
  if (k == 0) throw DomainError("cell probabilities require k >= 1");
  const double events = static_cast<double>(k) * static_cast<double>(n);
  CellProbabilities out;
  out.p0 = pow_miss(m_prime, events);
  if (events == 0.0) {
    out.p1 = 0.0;
  } else if (m_prime == 1) {
    out.p1 = events == 1.0 ? 1.0 : 0.0;
  } else {
    out.p1 = events / static_cast<double>(m_prime) * pow_miss(m_prime, events - 1.0);
  }
  out.p0 = clamp01(out.p0);
  out.p1 = clamp01(out.p1);
  out.pc = clamp01(1.0 - out.p0 - out.p1);
  return out;
}

double deletability_probability(const ModelParams& params) {
  params.validate();
  const CellProbabilities cells = cell_probabilities(params.data_bits(), params.k, params.n);
  if (cells.pc >= 1.0) return 0.0;
  const double exponent = static_cast<double>(params.data_bits()) / static_cast<double>(params.r);
  // log of the probability that a region is collision-free
  const double log_free = exponent * std::log1p(-cells.pc);
  // probability that a region has collided
  const double collided = -std::expm1(log_free);
  if (collided <= 0.0) return 1.0;
  // 1 - collided^k
  return clamp01(-std::expm1(static_cast<double>(params.k) * std::log(collided)));
}

double fpr_dlbf(const ModelParams& params) {
  if (params.m <= params.r) {
    throw DomainError("fpr requires m > r (got m = " + std::to_string(params.m) +
                      ", r = " + std::to_string(params.r) + ")");
  }
  return fpr_sbf(params.m - params.r, params.k, params.n);
}

double fpr_sbf(std::uint64_t m, std::uint32_t k, std::uint64_t n) {
  if (m == 0) throw DomainError("fpr requires m >= 1");
  if (k == 0) throw DomainError("fpr requires k >= 1");
  const double fill = fill_fraction(m, static_cast<double>(k) * static_cast<double>(n));
  return clamp01(std::pow(fill, static_cast<double>(k)));
}

ModelPoint evaluate(const ModelParams& params) {
  params.validate();
  ModelPoint point;
  point.params = params;
  const CellProbabilities cells = cell_probabilities(params.data_bits(), params.k, params.n);
  point.p0 = cells.p0;
  point.p1 = cells.p1;
  point.pc = cells.pc;
  point.pd = deletability_probability(params);
  point.fpr_dlbf = fpr_dlbf(params);
  point.fpr_sbf = fpr_sbf(params.m, params.k, params.n);
  if (params.n > 0) point.density = static_cast<double>(params.m) / static_cast<double>(params.n);
  return point;
}

std::vector<ModelPoint> deletability_curve(std::uint32_t m, std::span<const double> m_over_r,
                                           std::uint32_t k, std::span<const double> densities) {
  if (m_over_r.empty()) throw DomainError("deletability curve needs at least one m/r ratio");
  if (densities.empty()) throw DomainError("deletability curve needs at least one m/n density");

  std::vector<double> ratios(m_over_r.begin(), m_over_r.end());
  std::vector<double> dens(densities.begin(), densities.end());
  std::sort(ratios.begin(), ratios.end());
  std::sort(dens.begin(), dens.end());

  std::vector<ModelPoint> rows;
  rows.reserve(ratios.size() * dens.size());
  for (double ratio : ratios) {
    if (!(ratio > 0.0)) throw DomainError("m/r ratio must be positive");
    const double r = std::round(static_cast<double>(m) / ratio);
    if (r < 1.0 || r >= static_cast<double>(m)) {
      throw DomainError("m/r ratio " + std::to_string(ratio) + " gives r outside [1, m)");
    }
    for (double density : dens) {
      if (!(density > 0.0)) throw DomainError("m/n density must be positive");
      const double n = std::round(static_cast<double>(m) / density);
      if (n < 1.0) {
        throw DomainError("m/n density " + std::to_string(density) + " gives n < 1");
      }
      rows.push_back(evaluate({m, static_cast<std::uint32_t>(r), k, static_cast<std::uint64_t>(n)}));
    }
  }
  return rows;
}

}  // namespace dlbf::analysis
