#include "zonal/quadrature.hpp"

#include "zonal/errors.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

namespace zonal {

namespace {

// Newton iteration on P_m from the Tricomi-type initial guess; nodes come in
// symmetric pairs, so only the positive half is solved.
GaussLegendreRule build_rule(int m)
{
  GaussLegendreRule rule;
  rule.nodes.assign(m, 0.0);
  rule.weights.assign(m, 0.0);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 1; k < m; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      derivative = m * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / derivative;
      x -= step;
      if (std::abs(step) < 1e-16)
        break;
    }
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    rule.nodes[i] = -x;
    rule.nodes[m - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[m - 1 - i] = w;
  }
  return rule;
}

} // namespace

const GaussLegendreRule& gauss_legendre_rule(int m)
{
  if (m < 1 || m > 4096)
    throw DomainError("gauss_legendre_rule: node count must lie in [1, 4096], got " + std::to_string(m));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const GaussLegendreRule>> cache;
  const std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot)
    slot = std::make_unique<const GaussLegendreRule>(build_rule(m));
  return *slot;
}

} // namespace zonal
