#pragma once

#include "zonal/legendre.hpp"
#include "zonal/norms.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace zonal {

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus status) noexcept;

using DetailValue = std::variant<double, std::int64_t, std::string>;

/// Outcome of one numerical claim. Margins are oriented so that a positive
/// value means the claim holds; status is pass iff margin > 0 unless the
/// check was skipped.
struct CheckResult {
  std::string check_id;
  std::string claim;
  CheckStatus status = CheckStatus::skipped;
  double computed_margin = 0.0;
  std::vector<std::pair<std::string, DetailValue>> details;
};

struct VerifyConfig {
  int degree_cap = kDefaultDegreeCap;
  double p = 6.0;
  std::vector<int> n_list{1, 2, 5, 10, 25, 50, 100, 200};
  double series_tol = 1e-8;
  QuadratureConfig quadrature;
  int bracket_degree_max = 500;
  int inequality_degree_max = 200;
  int grid_points = 5000;
  int cooper_degree_max = 1000;
  int linfty_degree_max = 1000;
  int bessel_zero_count = 200;
  int jobs = 1;

  /// Throws UsageError on any out-of-range field.
  void validate() const;
};

struct VerificationReport {
  std::string toolkit_version;
  VerifyConfig config;
  std::vector<CheckResult> checks; // sorted by check_id
  bool overall_pass = false;
};

std::string toolkit_version();

/// Minimum of x - P_n(x) over a uniform grid on [z_{1,n}, 1). The value at
/// x = 1 is an identity and is checked separately against P_n(1) = 1.
CheckResult verify_pn_le_x(Degree n, int grid_points);

/// y_{i,n} decreasing for n = 2i+1 .. n_max and within 10/n_max of |J0(j_i)|.
CheckResult verify_cooper(int i, int n_max);

/// 1/y_{1,n} over even n up to n_max: increasing, and above 2.48 once
/// asymptotic. Values still below 2.48 are reported as skipped.
CheckResult verify_linfty_ratio(int n_max);

/// Norm ratios of P_{4 n_q}, the tent/Darboux sandwich for each n_q, and the
/// limiting lower bound built from the Bessel extrema sum. Exploratory
/// (skipped) for p < 6.
CheckResult verify_main_theorem(double p, std::span<const int> n_list, const QuadratureConfig& cfg = {},
                                double series_tol = 1e-8);

/// Runs the whole battery, up to cfg.jobs checks concurrently.
VerificationReport run_all(const VerifyConfig& cfg);

/// P_n''(x) by differentiating the three-term recurrence twice. Independent of
/// the differential-equation route used by eval_legendre_second.
double legendre_second_by_recurrence(int n, double x);

} // namespace zonal
