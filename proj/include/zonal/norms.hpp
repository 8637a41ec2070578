#pragma once

#include "zonal/legendre.hpp"
#include "zonal/roots.hpp"

namespace zonal {

struct QuadratureConfig {
  int base_nodes = 48;
  int refinement_factor = 2;
  double rel_tol = 1e-10;

  /// Throws UsageError unless base_nodes >= 8, refinement_factor >= 2 and rel_tol in (0, 1e-4].
  void validate() const;
};

/// Integrals of the positive and negative parts of |P_n|^p over a domain.
struct SignedIntegrals {
  double plus = 0.0;   // integral of max(P_n, 0)^p
  double minus = 0.0;  // integral of max(-P_n, 0)^p
  double error = 0.0;  // sum of per-cell refinement changes
};

struct NormReport {
  int n = 0;
  double p = 0.0;
  double integral_plus = 0.0;
  double integral_minus = 0.0;
  double norm_ratio = 0.0; // (integral_plus / integral_minus)^{1/p}
  double quad_error_estimate = 0.0;
};

/// Sign-partitioned L^p integrals of P_n over [0, 1]. The interval is split
/// at the zeros of P_n and each sign-constant cell is integrated by Gauss
/// quadrature, refining the node count until the relative change drops below
/// cfg.rel_tol (at most three refinements, else ConvergenceError).
SignedIntegrals signed_lp_integrals(Degree n, double p, const QuadratureConfig& cfg = {});

/// Same as signed_lp_integrals but over [-1, 1]. Through x = cos(theta) this is
/// the sign-partitioned L^p mass of the zonal harmonic P_n(cos theta) on the
/// sphere, up to the constant factor 2 pi.
SignedIntegrals sphere_lp_integrals(Degree n, double p, const QuadratureConfig& cfg = {});

/// Requires n >= 2 so that both parts are nonempty.
NormReport norm_ratio(Degree n, double p, const QuadratureConfig& cfg = {});

/// Ratio of positive to negative L^p norms of P_n(cos theta) on the sphere.
double sphere_norm_ratio(Degree n, double p, const QuadratureConfig& cfg = {});

/// Integral of P_n^p over [z_{1,n}, 1], the lobe of the positive part touching x = 1.
double upper_lobe_integral(Degree n, double p, const QuadratureConfig& cfg = {});

/// 2 / ((p + 1) n (n + 1)): area under the p-th power of the tent that rises
/// from 1 - 2/(n(n+1)) to 1 with slope P_n'(1).
double triangle_lower_bound(Degree n, double p);

/// Left foot 1 - 2/(n(n+1)) of that tent.
double triangle_foot(Degree n);

/// 1 / (2 (p + 1) n_q (4 n_q + 1)), the tent bound specialised to degree 4 n_q.
double positive_part_lower_bound(int n_q, double p);

/// 3 pi^2 / (4 n_q + 1/2)^2 * sum_{i=1}^{n_q} i y_{2i-1, 4 n_q}^p, an upper
/// Darboux-sum bound on the negative-part integral of P_{4 n_q}.
double darboux_upper_bound(int n_q, double p);
double darboux_upper_bound(const ExtremaTable& extrema, double p);

} // namespace zonal
