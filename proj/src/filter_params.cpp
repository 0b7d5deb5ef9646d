#include "dlbf/filter_params.hpp"

#include "dlbf/errors.hpp"

namespace dlbf {

void FilterParams::validate() const {
  if (r == 0) throw ConfigError("invalid dimensions: r must be >= 1 (got r = 0)");
  if (k == 0) throw ConfigError("invalid dimensions: k must be >= 1 (got k = 0)");
  if (r >= m) {
    throw ConfigError("invalid dimensions: r must be < m (got r = " + std::to_string(r) +
                      ", m = " + std::to_string(m) + "; m' = m - r would be " +
                      (r == m ? "0" : "negative") + ")");
  }
  if (m - r < r) {
    throw ConfigError("invalid dimensions: m' = m - r must be >= r (got m' = " +
                      std::to_string(m - r) + ", r = " + std::to_string(r) + ")");
  }
}

std::string FilterParams::to_string() const {
  return "m=" + std::to_string(m) + " r=" + std::to_string(r) + " k=" + std::to_string(k) +
         " seed=" + std::to_string(seed);
}

}  // namespace dlbf
