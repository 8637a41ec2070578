#include "zonal/legendre.hpp"

#include "zonal/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace zonal {

namespace {

// Distance from +-1 inside which the second derivative is refused.
constexpr double kSecondDerivativeGuard = 1e-14;

void require_closed_interval(double x, const char* what)
{
  if (!(std::abs(x) <= 1.0))
    throw DomainError(std::string(what) + ": argument must lie in [-1, 1], got " + std::to_string(x));
}

struct AdjacentValues {
  double current;  // P_n(x)
  double previous; // P_{n-1}(x), zero for n = 0
};

AdjacentValues recurrence(int n, double x) noexcept
{
  if (n == 0)
    return {1.0, 0.0};
  double prev = 1.0;
  double curr = x;
  for (int k = 1; k < n; ++k) {
    // The reciprocal depends only on k, keeping the division off the dependency chain.
    const double inv = 1.0 / (k + 1.0);
    const double next = ((2.0 * k + 1.0) * x * curr - k * prev) * inv;
    prev = curr;
    curr = next;
  }
  return {curr, prev};
}

double derivative_from(int n, double x, const AdjacentValues& v) noexcept
{
  if (n == 0)
    return 0.0;
  if (std::abs(x) == 1.0) {
    const double endpoint = 0.5 * n * (n + 1.0);
    return (x > 0.0 || n % 2 == 1) ? endpoint : -endpoint;
  }
  return n * (v.previous - x * v.current) / ((1.0 - x) * (1.0 + x));
}

double second_from(int n, double x, double value, double derivative) noexcept
{
  return (2.0 * x * derivative - n * (n + 1.0) * value) / ((1.0 - x) * (1.0 + x));
}

} // namespace

Degree::Degree(int n, int cap) : n_(n)
{
  if (n < 0)
    throw DomainError("degree must be nonnegative, got " + std::to_string(n));
  if (n > cap)
    throw CapError("degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

double eval_legendre(Degree n, double x)
{
  require_closed_interval(x, "eval_legendre");
  return recurrence(n.value(), x).current;
}

double eval_legendre_derivative(Degree n, double x)
{
  require_closed_interval(x, "eval_legendre_derivative");
  return derivative_from(n.value(), x, recurrence(n.value(), x));
}

double eval_legendre_second(Degree n, double x)
{
  if (!(std::abs(x) < 1.0 - kSecondDerivativeGuard))
    throw DomainError("eval_legendre_second: argument must satisfy |x| < 1, got " + std::to_string(x));
  const auto v = recurrence(n.value(), x);
  return second_from(n.value(), x, v.current, derivative_from(n.value(), x, v));
}

EvalResult eval_legendre_all(Degree n, double x)
{
  require_closed_interval(x, "eval_legendre_all");
  const auto v = recurrence(n.value(), x);
  EvalResult out;
  out.value = v.current;
  out.derivative = derivative_from(n.value(), x, v);
  if (std::abs(x) < 1.0 - kSecondDerivativeGuard)
    out.second_derivative = second_from(n.value(), x, out.value, *out.derivative);
  return out;
}

double bernstein_envelope(Degree n, double x)
{
  if (n.value() < 1)
    throw DomainError("bernstein_envelope: degree must be at least 1");
  if (!(std::abs(x) < 1.0))
    throw DomainError("bernstein_envelope: argument must satisfy |x| < 1, got " + std::to_string(x));
  const double one_minus_x2 = (1.0 - x) * (1.0 + x);
  return std::sqrt(2.0 / (std::numbers::pi * n.value())) * std::pow(one_minus_x2, -0.25);
}

} // namespace zonal
