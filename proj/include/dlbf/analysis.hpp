#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dlbf::analysis {

struct ModelParams {
  std::uint32_t m = 0;
  std::uint32_t r = 0;
  std::uint32_t k = 0;
  std::uint64_t n = 0;

  /// Requires m > r >= 1 and k >= 1; throws DomainError otherwise.
  void validate() const;
  [[nodiscard]] std::uint32_t data_bits() const noexcept { return m - r; }
};

struct CellProbabilities {
  double p0 = 1.0;  // cell never set
  double p1 = 0.0;  // cell set exactly once
  double pc = 0.0;  // cell set two or more times
};

struct ModelPoint {
  ModelParams params;
  double p0 = 1.0;
  double p1 = 0.0;
  double pc = 0.0;
  double pd = 1.0;
  double fpr_dlbf = 0.0;
  double fpr_sbf = 0.0;
  std::optional<double> density;  // m / n; empty when n == 0
};

/// Occupancy of one of `m_prime` cells after k * n uniform set-events.
/// Throws DomainError if m_prime == 0 or k == 0.
CellProbabilities cell_probabilities(std::uint64_t m_prime, std::uint32_t k, std::uint64_t n);

/// Probability that an inserted element has at least one of its k bits in a
/// collision-free region:
///
///   pd = 1 - (1 - (1 - pc)^((m - r) / r))^k
///
/// with a real-valued exponent. This is the complement of the expression
/// sometimes quoted for this quantity; that form gives the probability that
/// every bit lands in a collided region (about 0.07 at m=240, r=24, k=5,
/// n=22 where the intended value is about 0.93).
double deletability_probability(const ModelParams& params);

/// Textbook false-positive rate with the data array shrunk to m - r bits:
///   [1 - (1 - 1/(m - r))^(k n)]^k.
/// r = 0 is accepted and reduces to fpr_sbf. Throws DomainError if m <= r.
double fpr_dlbf(const ModelParams& params);

/// [1 - (1 - 1/m)^(k n)]^k. Throws DomainError if m == 0.
double fpr_sbf(std::uint64_t m, std::uint32_t k, std::uint64_t n);

ModelPoint evaluate(const ModelParams& params);

/// Sweeps r = round(m / ratio) and n = round(m / density). Rows are ordered
/// by ascending ratio, then ascending density.
/// Throws DomainError on empty ranges or when a ratio/density maps to r or n
/// outside the model's domain.
std::vector<ModelPoint> deletability_curve(std::uint32_t m, std::span<const double> m_over_r,
                                           std::uint32_t k, std::span<const double> densities);

}  // namespace dlbf::analysis
