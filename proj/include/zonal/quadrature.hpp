#pragma once

#include <vector>

namespace zonal {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// m-point rule; cached, so repeated requests return the same immutable object.
const GaussLegendreRule& gauss_legendre_rule(int m);

/// Integrate f over [a, b] with the m-point rule.
template <class F>
double integrate(const GaussLegendreRule& rule, F&& f, double a, double b)
{
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k)
    sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  return half * sum;
}

} // namespace zonal
