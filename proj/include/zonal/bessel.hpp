#pragma once

#include "zonal/roots.hpp"

#include <vector>

namespace zonal {

inline constexpr double kBesselArgumentMax = 1e6;
inline constexpr int kBesselZeroCap = 100000;

/// Bessel function J0 on [0, 1e6]. Absolute error below 1e-12 up to x = 50.
double eval_j0(double x);

/// Bessel function J1 on [0, 1e6], same accuracy as eval_j0.
double eval_j1(double x);

/// sqrt(2 / (pi x)), the amplitude bound for J_nu with |nu| <= 1/2.
double szego_envelope(double x);

/// Watson enclosure (i pi, (i + 1/2) pi) of the i-th positive zero of J1.
Bracket watson_bracket(int i);

struct BesselZero {
  int index;
  double j;         // j_i, the i-th positive zero of J1 (a critical point of J0)
  double extremum;  // signed J0(j_i)
  double residual;  // |J1(j_i)|
};

struct BesselZeroTable {
  std::vector<BesselZero> entries;
};

/// The i-th positive zero of J1, certified inside its Watson bracket.
BesselZero j1_zero(int i);

/// First `count` positive zeros of J1. Throws CapError above kBesselZeroCap.
BesselZeroTable j1_zeros(int count);

} // namespace zonal
