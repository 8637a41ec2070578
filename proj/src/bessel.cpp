#include "zonal/bessel.hpp"

#include "zonal/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace zonal {

namespace {

// Below this point the ascending series is summed in extended precision;
// above it the Hankel expansion's smallest term is already below 1e-17.
constexpr double kSeriesLimit = 20.0;

void require_argument(double x, const char* what)
{
  if (!(x >= 0.0 && x <= kBesselArgumentMax))
    throw DomainError(std::string(what) + ": argument must lie in [0, 1e6], got " + std::to_string(x));
}

// J_order(x) = (x/2)^order sum_k (-x^2/4)^k / (k! (k + order)!), order in {0, 1}.
double ascending_series(int order, double x)
{
  const long double quarter_x2 = 0.25L * static_cast<long double>(x) * x;
  long double term = order == 0 ? 1.0L : 0.5L * static_cast<long double>(x);
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -quarter_x2 / (static_cast<long double>(k) * (k + order));
    sum += term;
    if (std::abs(term) < 1e-22L && k > quarter_x2)
      break;
  }
  return static_cast<double>(sum);
}

// Hankel asymptotic expansion J_nu(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi),
// chi = x - (nu/2 + 1/4) pi, truncated before the terms start to grow.
double hankel_expansion(int order, double x)
{
  const double mu = 4.0 * order * order;
  const double eight_x = 8.0 * x;
  double p_sum = 1.0;
  double q_sum = 0.0;
  double term = 1.0;
  double previous_abs = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (mu - odd * odd) / (k * eight_x);
    if (std::abs(next) > previous_abs)
      break;
    term = next;
    previous_abs = std::abs(term);
    // a_k / x^k alternates between Q (odd k) and P (even k) with sign (-1)^{floor(k/2)}.
    const double signed_term = ((k / 2) % 2 == 0) ? term : -term;
    if (k % 2 == 1)
      q_sum += signed_term;
    else
      p_sum += signed_term;
    if (previous_abs < 1e-18)
      break;
  }
  const double c = std::cos(x);
  const double s = std::sin(x);
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  // cos/sin of x - pi/4 (order 0) and x - 3pi/4 (order 1) without reducing a shifted argument.
  const double cos_chi = order == 0 ? (c + s) * inv_sqrt2 : (s - c) * inv_sqrt2;
  const double sin_chi = order == 0 ? (s - c) * inv_sqrt2 : -(s + c) * inv_sqrt2;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p_sum * cos_chi - q_sum * sin_chi);
}

double bessel(int order, double x)
{
  return x <= kSeriesLimit ? ascending_series(order, x) : hankel_expansion(order, x);
}

} // namespace

double eval_j0(double x)
{
  require_argument(x, "eval_j0");
  return bessel(0, x);
}

double eval_j1(double x)
{
  require_argument(x, "eval_j1");
  return bessel(1, x);
}

double szego_envelope(double x)
{
  if (!(x > 0.0))
    throw DomainError("szego_envelope: argument must be positive, got " + std::to_string(x));
  return std::sqrt(2.0 / (std::numbers::pi * x));
}

Bracket watson_bracket(int i)
{
  if (i < 1)
    throw IndexError("Bessel zero index must be at least 1, got " + std::to_string(i));
  return {i * std::numbers::pi, (i + 0.5) * std::numbers::pi};
}

BesselZero j1_zero(int i)
{
  const Bracket bracket = watson_bracket(i);
  if (bracket.hi > kBesselArgumentMax)
    throw CapError("Bessel zero index " + std::to_string(i) + " exceeds the evaluation range");

  // Safeguarded Newton: J1' = J0 - J1/x. The sign-changing bracket is kept
  // throughout; any step that leaves it or stalls falls back to bisection.
  double lo = bracket.lo;
  double hi = bracket.hi;
  double f_lo = bessel(1, lo);
  if (std::signbit(f_lo) == std::signbit(bessel(1, hi)))
    throw InternalError("j1_zero: Watson bracket does not change sign");

  // McMahon's leading terms as the starting point.
  const double beta = (i + 0.25) * std::numbers::pi;
  double x = beta - 3.0 / (8.0 * beta);
  if (!bracket.strictly_contains(x))
    x = 0.5 * (lo + hi);

  for (int iter = 0; iter < 100; ++iter) {
    const double f = bessel(1, x);
    if (f == 0.0)
      break;
    if (std::signbit(f) == std::signbit(f_lo)) {
      lo = x;
      f_lo = f;
    } else {
      hi = x;
    }
    const double slope = bessel(0, x) - f / x;
    double next = x - f / slope;
    if (!(next > lo && next < hi) || !std::isfinite(next))
      next = 0.5 * (lo + hi);
    const double resolution = 4.0 * std::numeric_limits<double>::epsilon() * x;
    if (std::abs(next - x) <= resolution || hi - lo <= resolution) {
      x = next;
      break;
    }
    x = next;
  }
  return {i, x, bessel(0, x), std::abs(bessel(1, x))};
}

BesselZeroTable j1_zeros(int count)
{
  if (count < 1)
    throw DomainError("j1_zeros: count must be at least 1");
  if (count > kBesselZeroCap)
    throw CapError("j1_zeros: count " + std::to_string(count) + " exceeds cap " +
                   std::to_string(kBesselZeroCap));
  BesselZeroTable table;
  table.entries.reserve(count);
  for (int i = 1; i <= count; ++i)
    table.entries.push_back(j1_zero(i));
  return table;
}

} // namespace zonal
