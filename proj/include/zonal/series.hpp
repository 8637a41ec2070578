#pragma once

namespace zonal {

/// Partial sum of a positive series plus a rigorous bound on the omitted tail.
struct SeriesResult {
  double value = 0.0;
  double tail_bound = 0.0;
  long terms_used = 0;
};

/// Highest J1 zero index the extrema sum may reach; keeps j_i inside the
/// Bessel evaluation range.
inline constexpr int kSeriesZeroIndexCap = 300000;

/// S_p = sum_{i>=1} i |J0(j_{2i-1})|^p for p > 4, truncated once the tail
/// bound from |J0(j_k)| <= sqrt(2/(pi^2 k)) drops to tol.
SeriesResult bessel_extrema_sum(double p, double tol);

/// Analytic tail bound of bessel_extrema_sum after `terms` terms.
double bessel_extrema_tail_bound(double p, long terms);

/// Apery's constant by direct summation with the integral tail 1/(2N^2).
SeriesResult zeta3(double tol);

struct HurwitzIdentity {
  double lhs = 0.0;       // (8/pi^6) sum_{i>=1} i/(2i-1)^3, summed directly
  double rhs = 0.0;       // (3 zeta(2) + 7/2 zeta(3)) / pi^6 with zeta(2) = pi^2/6
  double lhs_tail = 0.0;
  double rhs_tail = 0.0;
  double residual = 0.0;  // |lhs - rhs|
  long lhs_terms = 0;
};

/// Both sides of the odd-reciprocal-cube identity, each truncated to tol.
HurwitzIdentity hurwitz_identity(double tol);
double hurwitz_identity_residual(double tol);

/// (1/(p+1)) (2/(3 pi^2)) / S_p, with S_p replaced by its rigorous upper
/// bound value + tail_bound so that the result stays a lower bound.
double prop_limit_lower_bound(double p, double tol);

struct MonotonicityReport {
  bool pass = false;
  double p_min = 0.0;
  double threshold = 0.0;           // 1/ln 2 - 1
  double j0_first_extremum = 0.0;   // |J0(j_1)|
  double max_increment = 0.0;       // largest f(p_{k+1}) - f(p_k) over all grids, must be < 0
  int grid_points = 0;
  int violations = 0;
};

/// Checks that (p+1) |J0(j_{2i-1})|^p decreases on [p_min, p_min + 10] for the
/// leading odd-index extrema, that |J0(j_1)| < 1/2, and that (x+1) 2^{-x} has
/// negative derivative on the same grid.
MonotonicityReport p_monotonicity_check(double p_min);

/// (2 pi i (4i - 2)/(4i + 1/2))^{-1/2}, the closed-form bound on y_{2i-1, 4i}.
double bernstein_chain_bound(int i);

} // namespace zonal
