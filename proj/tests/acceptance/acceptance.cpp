// Acceptance suite. Runs every criterion (or one, with --criterion N) and
// prints a single PASS/FAIL line per criterion. Exit status is nonzero if
// any selected criterion fails.

#include "zonal/bessel.hpp"
#include "zonal/legendre.hpp"
#include "zonal/norms.hpp"
#include "zonal/roots.hpp"
#include "zonal/series.hpp"
#include "zonal/verify.hpp"

#include "oracles.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

using namespace zonal;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;
  std::function<Outcome()> run;
};

Outcome bessel_constant()
{
  const double target = 0.4027;
  const double magnitude = std::abs(j1_zero(1).extremum);
  const double reference = std::abs(oracle::j0(oracle::j1_zero(1)));
  const double diff = std::abs(magnitude - target);
  const bool pass = diff <= 5e-5;
  return {pass, fmt::format("|J0(j1)|={:.12f} reference={:.12f} |diff from 0.4027|={:.3e} tol=5e-5 "
                            "truncated_4sf={:.4f} rounded_4sf={:.4f}",
                            magnitude, reference, diff, std::trunc(magnitude * 1e4) / 1e4,
                            std::round(magnitude * 1e4) / 1e4)};
}

Outcome series_sandwich()
{
  const auto s = bessel_extrema_sum(6.0, 1e-8);
  const double upper = s.value + s.tail_bound;
  const double closed = 2.0 / (21.0 * pi * pi);
  const bool pass = upper < 0.00951 && closed > 0.00964;
  return {pass, fmt::format("S6={:.10f} tail={:.2e} S6+tail={:.10f} (<0.00951) 2/(21pi^2)={:.8f} (>0.00964) terms={}",
                            s.value, s.tail_bound, upper, closed, s.terms_used)};
}

Outcome limit_bound()
{
  const double bound = prop_limit_lower_bound(6.0, 1e-8);
  return {bound > 1.0, fmt::format("limit lower bound at p=6: {:.8f} (>1)", bound)};
}

Outcome hurwitz()
{
  const auto h = hurwitz_identity(1e-10);
  const auto z = zeta3(1e-10);
  const bool pass = h.residual <= 1e-9 && z.value > 1.2020 && z.value + z.tail_bound < 1.2021;
  return {pass, fmt::format("lhs={:.14f} rhs={:.14f} residual={:.3e} (<=1e-9) zeta3={:.12f} tail={:.1e}", h.lhs,
                            h.rhs, h.residual, z.value, z.tail_bound)};
}

Outcome sandwich_grid()
{
  double lower_margin = INFINITY;
  double upper_margin = INFINITY;
  for (double p : {4.5, 6.0, 8.0})
    for (int n_q : {1, 2, 5, 10, 25, 50}) {
      const auto parts = signed_lp_integrals(Degree{4 * n_q}, p);
      lower_margin = std::min(lower_margin, parts.plus - positive_part_lower_bound(n_q, p));
      upper_margin = std::min(upper_margin, darboux_upper_bound(n_q, p) - parts.minus);
    }
  // P_1 = x is its own tent, so n = 1 meets the bound with equality for every p.
  double triangle_margin = INFINITY;
  int equality_cases = 0;
  for (int n = 1; n <= 200; ++n)
    for (double p : {1.0, 2.0, 6.0}) {
      const double gap = upper_lobe_integral(Degree{n}, p) - triangle_lower_bound(Degree{n}, p);
      if (n == 1) {
        equality_cases += std::abs(gap) <= 1e-12;
        continue;
      }
      triangle_margin = std::min(triangle_margin, gap);
    }
  const bool pass = lower_margin > 0.0 && upper_margin > 0.0 && triangle_margin > 0.0 && equality_cases == 3;
  return {pass, fmt::format("min(I_plus - lower)={:.3e} min(darboux - I_minus)={:.3e} min(lobe - tent)={:.3e} "
                            "equality cases={}",
                            lower_margin, upper_margin, triangle_margin, equality_cases)};
}

Outcome pn_le_x()
{
  auto detail = [](const CheckResult& c, const std::string& key) -> double {
    for (const auto& [k, v] : c.details)
      if (k == key)
        return std::get<double>(v);
    return NAN;
  };
  int failures = 0;
  double worst = INFINITY;
  double defect = 0.0;
  for (int n = 1; n <= 200; ++n) {
    const auto c = verify_pn_le_x(Degree{n}, 5000);
    failures += c.status != CheckStatus::pass;
    if (n > 1)
      worst = std::min(worst, detail(c, "raw_min_margin"));
    defect = std::max(defect, detail(c, "endpoint_defect"));
  }
  return {failures == 0,
          fmt::format("degrees 1..200, 5000 points each: failures={} min grid margin (n>1)={:.3e} "
                      "max |P_n(1) - 1|={:.1e}",
                      failures, worst, defect)};
}

Outcome linfty()
{
  const double r200 = 1.0 / legendre_extremum(1, Degree{200}).y;
  const auto trend = verify_linfty_ratio(1000);
  const double r1000 = 1.0 / legendre_extremum(1, Degree{1000}).y;
  const bool pass = r200 > 2.48 && std::abs(r1000 - 2.483) <= 2e-3 && trend.status == CheckStatus::pass;
  return {pass, fmt::format("1/y(1,200)={:.6f} (>2.48) 1/y(1,1000)={:.6f} (2.483+-2e-3) increasing over even n: {}",
                            r200, r1000, to_string(trend.status))};
}

Outcome brackets()
{
  long legendre_checked = 0;
  int legendre_bad = 0;
  for (int n = 2; n <= 500; ++n)
    for (const auto& z : legendre_zeros(Degree{n}).zeros) {
      ++legendre_checked;
      legendre_bad += !bruns_bracket(z.index, Degree{n}).strictly_contains(z.value);
    }
  int watson_bad = 0;
  for (const auto& z : j1_zeros(200).entries)
    watson_bad += !(z.j > z.index * pi && z.j < (z.index + 0.5) * pi);
  return {legendre_bad == 0 && watson_bad == 0,
          fmt::format("Legendre zeros checked={} outside={} ; J1 zeros checked=200 outside={}", legendre_checked,
                      legendre_bad, watson_bad)};
}

Outcome figure()
{
  const auto z4 = legendre_zeros(Degree{4});
  const auto e4 = legendre_extrema(Degree{4});
  const auto z8 = legendre_zeros(Degree{8});
  const auto e8 = legendre_extrema(Degree{8});
  const std::vector<std::pair<double, double>> pairs{
      {z4.zeros[1].value, 0.34},   {z4.zeros[0].value, 0.861},  {e4.extrema[0].y, 0.429},
      {z8.zeros[3].value, 0.1834}, {z8.zeros[2].value, 0.5255}, {z8.zeros[1].value, 0.7967},
      {z8.zeros[0].value, 0.9603}, {e8.extrema[2].y, 0.2832},   {e8.extrema[0].y, 0.4097},
  };
  double worst = 0.0;
  for (const auto& [computed, plotted] : pairs)
    worst = std::max(worst, std::abs(computed - plotted));
  return {worst <= 5e-4, fmt::format("9 plotted coordinates, max deviation={:.3e} (<=5e-4)", worst)};
}

Outcome theorem_trend()
{
  std::string detail;
  bool pass = true;
  for (int n : {50, 100, 200}) {
    const auto r = norm_ratio(Degree{4 * n}, 6.0);
    pass = pass && r.norm_ratio > 1.0;
    detail += fmt::format("ratio(P_{})={:.8f} ", 4 * n, r.norm_ratio);
  }
  return {pass, detail + "(>1, consistent with the limit claim)"};
}

} // namespace

int main(int argc, char** argv)
{
  const std::vector<Criterion> criteria{
      {1, "Bessel extremum constant |J0(j_1)| = 0.4027", 1.0, bessel_constant},
      {2, "Series sandwich at p = 6", 1.0, series_sandwich},
      {3, "Limiting lower bound at p = 6 exceeds 1", 1.0, limit_bound},
      {4, "Hurwitz identity residual and zeta(3) range", 1.0, hurwitz},
      {5, "Tent and Darboux sandwich grid", 120.0, sandwich_grid},
      {6, "P_n(x) <= x on [z_1, 1] for n <= 200", 30.0, pn_le_x},
      {7, "L-infinity ratio 1/y_{1,n}", 5.0, linfty},
      {8, "Bruns and Watson bracket certificates", 60.0, brackets},
      {9, "Plotted zeros and extrema of P_4 and P_8", 1.0, figure},
      {10, "Norm ratio of P_{4n} at p = 6 exceeds 1", 120.0, theorem_trend},
  };

  int only = 0;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--criterion" && k + 1 < argc) {
      only = std::atoi(argv[++k]);
    } else {
      fmt::print(stderr, "usage: acceptance [--criterion N]\n");
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    fmt::print(stderr, "unknown criterion {}\n", only);
    return 2;
  }

  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only)
      continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = c.run();
    } catch (const std::exception& ex) {
      outcome = {false, std::string("error: ") + ex.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.time_limit_s;
    const bool pass = outcome.pass && in_time;
    failed += !pass;
    fmt::print("{} C{:<2} {} [{:.3f}s / limit {:.0f}s{}] {}\n", pass ? "PASS" : "FAIL", c.id, c.name, seconds,
               c.time_limit_s, in_time ? "" : " EXCEEDED", outcome.detail);
  }
  return failed == 0 ? 0 : 1;
}
