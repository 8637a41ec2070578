#include "zonal/norms.hpp"

#include "zonal/errors.hpp"
#include "zonal/quadrature.hpp"
#include "zonal/summation.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace zonal {

namespace {

constexpr int kMaxRefinements = 3;

void require_exponent(double p)
{
  if (!(p > 0.0) || !std::isfinite(p))
    throw DomainError("exponent p must be positive and finite, got " + std::to_string(p));
}

struct CellIntegral {
  double value;
  double error;
};

// Integral of |P_n|^p over a cell on which P_n has constant sign. For
// non-integer p the integrand behaves like |x - zero|^p at the cell ends,
// so the cell is mapped through the cubic x = a + (b - a)(3t^2 - 2t^3),
// which flattens both endpoints.
CellIntegral integrate_cell(Degree n, double p, double a, double b, const QuadratureConfig& cfg)
{
  const bool smooth = p == std::floor(p);
  const double width = b - a;
  auto integrand = [&](double t) {
    if (smooth)
      return std::pow(std::abs(eval_legendre(n, t)), p);
    const double x = a + width * t * t * (3.0 - 2.0 * t);
    const double jacobian = 6.0 * width * t * (1.0 - t);
    return std::pow(std::abs(eval_legendre(n, x)), p) * jacobian;
  };
  const double lo = smooth ? a : 0.0;
  const double hi = smooth ? b : 1.0;

  int nodes = cfg.base_nodes;
  double previous = integrate(gauss_legendre_rule(nodes), integrand, lo, hi);
  for (int level = 0; level < kMaxRefinements; ++level) {
    nodes *= cfg.refinement_factor;
    const double current = integrate(gauss_legendre_rule(nodes), integrand, lo, hi);
    const double change = std::abs(current - previous);
    if (change <= cfg.rel_tol * std::abs(current))
      return {current, change};
    previous = current;
  }
  throw ConvergenceError("quadrature did not reach rel_tol on [" + std::to_string(a) + ", " +
                         std::to_string(b) + "] for n = " + std::to_string(n.value()) +
                         ", p = " + std::to_string(p));
}

// Cell boundaries in ascending order: 0, z_{m}, ..., z_1, 1.
std::vector<double> partition_unit_interval(Degree n)
{
  const auto table = legendre_zeros(n);
  std::vector<double> cuts;
  cuts.reserve(table.zeros.size() + 2);
  cuts.push_back(0.0);
  for (auto it = table.zeros.rbegin(); it != table.zeros.rend(); ++it)
    cuts.push_back(it->value);
  cuts.push_back(1.0);
  return cuts;
}

struct Accumulator {
  CompensatedSum plus;
  CompensatedSum minus;
  CompensatedSum error;

  void add(Degree n, double p, double a, double b, const QuadratureConfig& cfg)
  {
    if (!(b > a))
      return;
    const auto cell = integrate_cell(n, p, a, b, cfg);
    if (eval_legendre(n, 0.5 * (a + b)) >= 0.0)
      plus += cell.value;
    else
      minus += cell.value;
    error += cell.error;
  }

  SignedIntegrals result() const { return {plus.value(), minus.value(), error.value()}; }
};

} // namespace

void QuadratureConfig::validate() const
{
  if (base_nodes < 8)
    throw UsageError("base_nodes must be at least 8, got " + std::to_string(base_nodes));
  if (refinement_factor < 2)
    throw UsageError("refinement_factor must be at least 2, got " + std::to_string(refinement_factor));
  if (!(rel_tol > 0.0 && rel_tol <= 1e-4))
    throw UsageError("rel_tol must lie in (0, 1e-4], got " + std::to_string(rel_tol));
  long long top = base_nodes;
  for (int level = 0; level < kMaxRefinements; ++level)
    top *= refinement_factor;
  if (top > 4096)
    throw UsageError("base_nodes * refinement_factor^3 must not exceed 4096");
}

SignedIntegrals signed_lp_integrals(Degree n, double p, const QuadratureConfig& cfg)
{
  cfg.validate();
  require_exponent(p);
  if (n.value() < 1)
    throw DomainError("signed_lp_integrals: degree must be at least 1");
  const auto cuts = partition_unit_interval(n);
  Accumulator acc;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
    acc.add(n, p, cuts[k], cuts[k + 1], cfg);
  return acc.result();
}

SignedIntegrals sphere_lp_integrals(Degree n, double p, const QuadratureConfig& cfg)
{
  cfg.validate();
  require_exponent(p);
  if (n.value() < 1)
    throw DomainError("sphere_lp_integrals: degree must be at least 1");
  const auto cuts = partition_unit_interval(n);
  Accumulator acc;
  // Negative half, cells mirrored and integrated at their actual location.
  for (std::size_t k = cuts.size() - 1; k > 0; --k)
    acc.add(n, p, -cuts[k], -cuts[k - 1], cfg);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
    acc.add(n, p, cuts[k], cuts[k + 1], cfg);
  return acc.result();
}

NormReport norm_ratio(Degree n, double p, const QuadratureConfig& cfg)
{
  if (n.value() < 2)
    throw DomainError("norm_ratio: degree must be at least 2");
  const auto integrals = signed_lp_integrals(n, p, cfg);
  NormReport report;
  report.n = n.value();
  report.p = p;
  report.integral_plus = integrals.plus;
  report.integral_minus = integrals.minus;
  report.norm_ratio = std::pow(integrals.plus / integrals.minus, 1.0 / p);
  report.quad_error_estimate = integrals.error;
  return report;
}

double sphere_norm_ratio(Degree n, double p, const QuadratureConfig& cfg)
{
  if (n.value() < 1)
    throw DomainError("sphere_norm_ratio: degree must be at least 1");
  const auto integrals = sphere_lp_integrals(n, p, cfg);
  return std::pow(integrals.plus / integrals.minus, 1.0 / p);
}

double upper_lobe_integral(Degree n, double p, const QuadratureConfig& cfg)
{
  cfg.validate();
  require_exponent(p);
  return integrate_cell(n, p, largest_zero(n), 1.0, cfg).value;
}

double triangle_lower_bound(Degree n, double p)
{
  require_exponent(p);
  if (n.value() < 1)
    throw DomainError("triangle_lower_bound: degree must be at least 1");
  const double nn = n.value();
  return 2.0 / ((p + 1.0) * nn * (nn + 1.0));
}

double triangle_foot(Degree n)
{
  if (n.value() < 1)
    throw DomainError("triangle_foot: degree must be at least 1");
  const double nn = n.value();
  return 1.0 - 2.0 / (nn * (nn + 1.0));
}

double positive_part_lower_bound(int n_q, double p)
{
  require_exponent(p);
  if (n_q < 1)
    throw DomainError("positive_part_lower_bound: n_q must be at least 1");
  return 1.0 / (2.0 * (p + 1.0) * n_q * (4.0 * n_q + 1.0));
}

double darboux_upper_bound(int n_q, double p)
{
  if (n_q < 1)
    throw DomainError("darboux_upper_bound: n_q must be at least 1");
  if (n_q > kDefaultDegreeCap / 4)
    throw CapError("darboux_upper_bound: degree 4 n_q exceeds the degree cap");
  require_exponent(p);
  return darboux_upper_bound(legendre_extrema(Degree{4 * n_q}), p);
}

double darboux_upper_bound(const ExtremaTable& extrema, double p)
{
  require_exponent(p);
  if (extrema.n < 4 || extrema.n % 4 != 0)
    throw DomainError("darboux_upper_bound: extrema table must be for a degree divisible by 4");
  const int n_q = extrema.n / 4;
  CompensatedSum sum;
  for (int i = 1; i <= n_q; ++i)
    sum += i * std::pow(extrema.extrema[2 * i - 2].y, p);
  const double denom = 4.0 * n_q + 0.5;
  return 3.0 * std::numbers::pi * std::numbers::pi / (denom * denom) * sum.value();
}

} // namespace zonal
