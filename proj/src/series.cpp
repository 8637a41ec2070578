#include "zonal/series.hpp"

#include "zonal/bessel.hpp"
#include "zonal/errors.hpp"
#include "zonal/summation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace zonal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long kSeriesTermCap = (kSeriesZeroIndexCap + 1) / 2;

void require_tolerance(double tol, double upper, const char* what)
{
  if (!(tol > 0.0 && tol <= upper))
    throw DomainError(std::string(what) + ": tolerance out of range, got " + std::to_string(tol));
}

// Smallest N >= 1 with bound(N) <= tol for a decreasing bound, or -1 if
// none exists below `cap`.
template <class Bound>
long terms_for_tolerance(Bound&& bound, double tol, long cap)
{
  if (bound(cap) > tol)
    return -1;
  long lo = 0;
  long hi = cap;
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (bound(mid) <= tol)
      hi = mid;
    else
      lo = mid;
  }
  return std::max(hi, 1L);
}

// sum_{i > N} i (2i - 1)^{-s} <= int_N^inf t (2t - 1)^{-s} dt for s > 2;
// the integrand is decreasing on t >= 1.
double odd_power_tail(double s, long terms)
{
  const double u = 2.0 * static_cast<double>(terms) - 1.0;
  return 0.25 * (std::pow(u, 2.0 - s) / (s - 2.0) + std::pow(u, 1.0 - s) / (s - 1.0));
}

} // namespace

double bessel_extrema_tail_bound(double p, long terms)
{
  if (!(p > 4.0))
    throw DomainError("bessel_extrema_tail_bound: requires p > 4");
  if (terms < 1)
    throw DomainError("bessel_extrema_tail_bound: requires at least one term");
  const double s = 0.5 * p;
  return std::pow(2.0 / (kPi * kPi), s) * odd_power_tail(s, terms);
}

SeriesResult bessel_extrema_sum(double p, double tol)
{
  if (!(p > 4.0) || !std::isfinite(p))
    throw DomainError("bessel_extrema_sum: series converges only for p > 4, got " + std::to_string(p));
  require_tolerance(tol, 1e-2, "bessel_extrema_sum");
  const long terms =
      terms_for_tolerance([p](long n) { return bessel_extrema_tail_bound(p, std::max(n, 1L)); }, tol,
                          kSeriesTermCap);
  if (terms < 0)
    throw ConvergenceError("bessel_extrema_sum: tail bound stays above " + std::to_string(tol) +
                           " within " + std::to_string(kSeriesTermCap) + " terms for p = " +
                           std::to_string(p));
  CompensatedSum sum;
  for (long i = 1; i <= terms; ++i) {
    const auto zero = j1_zero(static_cast<int>(2 * i - 1));
    sum += static_cast<double>(i) * std::pow(std::abs(zero.extremum), p);
  }
  return {sum.value(), bessel_extrema_tail_bound(p, terms), terms};
}

SeriesResult zeta3(double tol)
{
  require_tolerance(tol, 1e-3, "zeta3");
  const long terms = static_cast<long>(std::ceil(std::sqrt(0.5 / tol)));
  CompensatedSum sum;
  for (long k = 1; k <= terms; ++k) {
    const double kk = static_cast<double>(k);
    sum += 1.0 / (kk * kk * kk);
  }
  const double n = static_cast<double>(terms);
  return {sum.value(), 0.5 / (n * n), terms};
}

HurwitzIdentity hurwitz_identity(double tol)
{
  require_tolerance(tol, 1e-6, "hurwitz_identity");
  const double pi6 = std::pow(kPi, 6);
  const double prefactor = 8.0 / pi6;
  const long cap = 200000000L;
  const long terms =
      terms_for_tolerance([&](long n) { return prefactor * odd_power_tail(3.0, std::max(n, 1L)); }, tol, cap);
  if (terms < 0)
    throw ConvergenceError("hurwitz_identity: tolerance too tight");

  CompensatedSum sum;
  for (long i = 1; i <= terms; ++i) {
    const double odd = 2.0 * static_cast<double>(i) - 1.0;
    sum += static_cast<double>(i) / (odd * odd * odd);
  }

  const auto apery = zeta3(std::min(1e-3, tol * pi6 / 3.5));
  const double zeta2 = kPi * kPi / 6.0;

  HurwitzIdentity out;
  out.lhs = prefactor * sum.value();
  out.lhs_tail = prefactor * odd_power_tail(3.0, terms);
  out.lhs_terms = terms;
  out.rhs = (3.0 * zeta2 + 3.5 * apery.value) / pi6;
  out.rhs_tail = 3.5 * apery.tail_bound / pi6;
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

double hurwitz_identity_residual(double tol)
{
  return hurwitz_identity(tol).residual;
}

double prop_limit_lower_bound(double p, double tol)
{
  const auto s = bessel_extrema_sum(p, tol);
  return (1.0 / (p + 1.0)) * (2.0 / (3.0 * kPi * kPi)) / (s.value + s.tail_bound);
}

MonotonicityReport p_monotonicity_check(double p_min)
{
  MonotonicityReport report;
  report.threshold = 1.0 / std::numbers::ln2 - 1.0;
  report.p_min = p_min;
  if (!(p_min >= report.threshold) || !std::isfinite(p_min))
    throw DomainError("p_monotonicity_check: p_min must be at least 1/ln 2 - 1, got " + std::to_string(p_min));

  constexpr int kGrid = 1001;
  constexpr int kOddExtrema = 25;
  constexpr double kSpan = 10.0;
  report.grid_points = kGrid;
  report.max_increment = -INFINITY;

  auto scan = [&](auto&& f) {
    double previous = f(p_min);
    for (int k = 1; k < kGrid; ++k) {
      const double current = f(p_min + kSpan * k / (kGrid - 1));
      const double increment = current - previous;
      report.max_increment = std::max(report.max_increment, increment);
      if (!(increment < 0.0))
        ++report.violations;
      previous = current;
    }
  };

  report.j0_first_extremum = std::abs(j1_zero(1).extremum);
  for (int i = 1; i <= kOddExtrema; ++i) {
    const double c = std::abs(j1_zero(2 * i - 1).extremum);
    scan([c](double p) { return (p + 1.0) * std::pow(c, p); });
  }

  // d/dx (x+1) c^x = c^x (1 + (x+1) ln c); negative exactly when x > 1/ln(1/c) - 1.
  for (int k = 0; k < kGrid; ++k) {
    const double x = p_min + kSpan * k / (kGrid - 1);
    const double slope = std::pow(0.5, x) * (1.0 + (x + 1.0) * std::log(0.5));
    if (!(slope < 0.0))
      ++report.violations;
  }

  if (!(report.j0_first_extremum < 0.5))
    ++report.violations;
  report.pass = report.violations == 0;
  return report;
}

double bernstein_chain_bound(int i)
{
  if (i < 1)
    throw DomainError("bernstein_chain_bound: index must be at least 1");
  const double ii = i;
  return 1.0 / std::sqrt(2.0 * kPi * ii * (4.0 * ii - 2.0) / (4.0 * ii + 0.5));
}

} // namespace zonal
