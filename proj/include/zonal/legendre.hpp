#pragma once

#include <optional>

namespace zonal {

inline constexpr int kDefaultDegreeCap = 10000;

/// Polynomial degree validated against a cap at construction.
class Degree {
public:
  /// Throws DomainError for negative n and CapError for n > cap.
  explicit Degree(int n, int cap = kDefaultDegreeCap);

  int value() const noexcept { return n_; }

  friend bool operator==(Degree, Degree) = default;

private:
  int n_;
};

struct EvalResult {
  double value = 0.0;
  std::optional<double> derivative;
  std::optional<double> second_derivative;
};

/// P_n(x) by the forward three-term recurrence. Requires |x| <= 1.
double eval_legendre(Degree n, double x);

/// P_n'(x) from (1 - x^2) P_n' = n (P_{n-1} - x P_n), with the exact
/// endpoint value (+-1)^{n+1} n(n+1)/2 at x = +-1.
double eval_legendre_derivative(Degree n, double x);

/// P_n''(x) from the Legendre differential equation. Requires |x| < 1 - 1e-14.
double eval_legendre_second(Degree n, double x);

/// Value, derivative and (away from the endpoints) second derivative in one pass.
EvalResult eval_legendre_all(Degree n, double x);

/// sqrt(2 / (pi n)) (1 - x^2)^{-1/4}, an upper bound for |P_n(x)| on (-1, 1).
double bernstein_envelope(Degree n, double x);

} // namespace zonal
