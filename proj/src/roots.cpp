#include "zonal/roots.hpp"

#include "zonal/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace zonal {

namespace {

constexpr double kBisectionWidth = 1e-12;
constexpr int kMaxNewtonSteps = 4;

// Bisection on a sign-changing bracket down to kBisectionWidth, followed by
// Newton steps that are discarded as soon as they leave the final bracket.
template <class F, class DF>
double solve_in_bracket(F&& f, DF&& df, double lo, double hi, const char* what)
{
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0)
    return lo;
  if (f_hi == 0.0)
    return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi))
    throw InternalError(std::string(what) + ": bracket does not change sign");

  while (hi - lo > kBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0)
      return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }

  double best = 0.5 * (lo + hi);
  double best_abs = std::abs(f(best));
  double x = best;
  for (int step = 0; step < kMaxNewtonSteps && best_abs > 0.0; ++step) {
    const double slope = df(x);
    if (slope == 0.0 || !std::isfinite(slope))
      break;
    const double next = x - f(x) / slope;
    if (!(next >= lo && next <= hi))
      break;
    const double next_abs = std::abs(f(next));
    if (next_abs < best_abs) {
      best = next;
      best_abs = next_abs;
    }
    if (next == x)
      break;
    x = next;
  }
  return best;
}

void require_zero_index(int i, int n)
{
  if (i < 1 || i > n / 2)
    throw IndexError("zero index " + std::to_string(i) + " out of range [1, " + std::to_string(n / 2) +
                     "] for degree " + std::to_string(n));
}

void require_extremum_index(int i, int n)
{
  if (i < 1 || i > (n - 1) / 2)
    throw IndexError("extremum index " + std::to_string(i) + " out of range [1, " +
                     std::to_string((n - 1) / 2) + "] for degree " + std::to_string(n));
}

LegendreZero solve_zero(int i, Degree n)
{
  const Bracket bracket = bruns_bracket(i, n);
  const double z = solve_in_bracket([n](double x) { return eval_legendre(n, x); },
                                    [n](double x) { return eval_legendre_derivative(n, x); },
                                    bracket.lo, bracket.hi, "legendre_zero");
  return {i, z, bracket, std::abs(eval_legendre(n, z))};
}

// Critical point inside (lo, hi), where lo/hi are consecutive zeros of P_n
// (or the origin for the innermost extremum of an odd-degree polynomial).
LegendreExtremum solve_extremum(int i, Degree n, double lo, double hi)
{
  const double x = solve_in_bracket([n](double t) { return eval_legendre_derivative(n, t); },
                                    [n](double t) { return eval_legendre_second(n, t); }, lo, hi,
                                    "legendre_extremum");
  const auto values = eval_legendre_all(n, x);
  return {i, x, std::abs(values.value), values.value < 0.0 ? -1 : 1, Bracket{lo, hi},
          std::abs(*values.derivative)};
}

} // namespace

Bracket bruns_bracket(int i, Degree n)
{
  require_zero_index(i, n.value());
  const double scale = std::numbers::pi / (n.value() + 0.5);
  return {std::cos(i * scale), std::cos((i - 0.5) * scale)};
}

LegendreZero legendre_zero(int i, Degree n)
{
  require_zero_index(i, n.value());
  return solve_zero(i, n);
}

ZeroTable legendre_zeros(Degree n)
{
  if (n.value() < 1)
    throw DomainError("legendre_zeros: degree must be at least 1");
  ZeroTable table{n.value(), {}};
  const int count = n.value() / 2;
  table.zeros.reserve(count);
  for (int i = 1; i <= count; ++i)
    table.zeros.push_back(solve_zero(i, n));
  return table;
}

double largest_zero(Degree n)
{
  if (n.value() < 1)
    throw DomainError("largest_zero: degree must be at least 1");
  return n.value() == 1 ? 0.0 : solve_zero(1, n).value;
}

LegendreExtremum legendre_extremum(int i, Degree n)
{
  require_extremum_index(i, n.value());
  const double upper = solve_zero(i, n).value;
  const double lower = (i < n.value() / 2) ? solve_zero(i + 1, n).value : 0.0;
  return solve_extremum(i, n, lower, upper);
}

ExtremaTable legendre_extrema(Degree n)
{
  if (n.value() < 2)
    throw DomainError("legendre_extrema: degree must be at least 2");
  return legendre_extrema(legendre_zeros(n));
}

ExtremaTable legendre_extrema(const ZeroTable& zeros)
{
  const Degree n{zeros.n, zeros.n};
  ExtremaTable table{zeros.n, {}};
  const int count = (zeros.n - 1) / 2;
  table.extrema.reserve(count);
  for (int i = 1; i <= count; ++i) {
    const double upper = zeros.zeros[i - 1].value;
    const double lower = (i < static_cast<int>(zeros.zeros.size())) ? zeros.zeros[i].value : 0.0;
    table.extrema.push_back(solve_extremum(i, n, lower, upper));
  }
  return table;
}

InterlacingReport check_interlacing(Degree n)
{
  if (n.value() < 2)
    throw DomainError("check_interlacing: degree must be at least 2");
  const auto zeros = legendre_zeros(n);
  const auto extrema = legendre_extrema(zeros);

  InterlacingReport report{n.value(), true, 0.0, {}, {}};
  double min_margin = 1.0;
  for (const auto& e : extrema.extrema) {
    const double upper = zeros.zeros[e.index - 1].value;
    const double lower =
        (e.index < static_cast<int>(zeros.zeros.size())) ? zeros.zeros[e.index].value : 0.0;
    const double margin = std::min(e.x - lower, upper - e.x);
    report.margins.push_back(margin);
    min_margin = std::min(min_margin, margin);
    if (!(margin > 0.0))
      report.violations.push_back(e.index);
  }
  // The largest critical point must sit below the largest zero.
  if (!extrema.extrema.empty() && !(extrema.extrema.front().x < zeros.zeros.front().value))
    report.violations.push_back(1);
  report.pass = report.violations.empty();
  report.min_margin = extrema.extrema.empty() ? 0.0 : min_margin;
  return report;
}

} // namespace zonal
