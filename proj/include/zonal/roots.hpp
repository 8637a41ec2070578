#pragma once

#include "zonal/legendre.hpp"

#include <vector>

namespace zonal {

/// Closed interval [lo, hi] with lo < hi.
struct Bracket {
  double lo;
  double hi;

  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  bool strictly_contains(double x) const noexcept { return lo < x && x < hi; }
};

struct LegendreZero {
  int index;       // i, counted from the largest zero
  double value;    // z_{i,n}
  Bracket bracket; // Bruns enclosure
  double residual; // |P_n(z)|
};

struct ZeroTable {
  int n;
  std::vector<LegendreZero> zeros; // z_1 > z_2 > ... > 0
};

struct LegendreExtremum {
  int index;       // i, counted from the extremum nearest x = 1
  double x;        // x_{i,n}
  double y;        // y_{i,n} = |P_n(x_{i,n})|
  int sign;        // sign of P_n(x_{i,n}), -1 at i = 1
  Bracket bracket; // consecutive zeros (or (0, z_last) for the innermost one of odd n)
  double residual; // |P_n'(x)|
};

struct ExtremaTable {
  int n;
  std::vector<LegendreExtremum> extrema; // x_1 > x_2 > ... > 0
};

/// Bruns enclosure of z_{i,n}, returned ascending:
/// [cos(i pi / (n + 1/2)), cos((i - 1/2) pi / (n + 1/2))]. Requires 1 <= i <= n/2.
Bracket bruns_bracket(int i, Degree n);

/// The i-th largest positive zero of P_n.
LegendreZero legendre_zero(int i, Degree n);

/// All floor(n/2) positive zeros of P_n. Requires n >= 1.
ZeroTable legendre_zeros(Degree n);

/// Largest zero z_{1,n}; zero for n = 1, whose only root is the origin.
double largest_zero(Degree n);

/// The i-th positive critical point of P_n, 1 <= i <= floor((n-1)/2).
LegendreExtremum legendre_extremum(int i, Degree n);

/// All floor((n-1)/2) positive critical points of P_n. Requires n >= 2.
ExtremaTable legendre_extrema(Degree n);
ExtremaTable legendre_extrema(const ZeroTable& zeros);

struct InterlacingReport {
  int n;
  bool pass;
  double min_margin;                // smallest gap between an extremum and a neighbouring zero
  std::vector<double> margins;      // per extremum index
  std::vector<int> violations;      // extremum indices that failed
};

/// Checks z_{i+1,n} < x_{i,n} < z_{i,n} for every positive extremum.
InterlacingReport check_interlacing(Degree n);

} // namespace zonal
