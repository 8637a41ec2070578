// Command-line front end for the zonal toolkit.
//
//   zonalsym eval    --n 8 --x 0.5
//   zonalsym zeros   --n 8
//   zonalsym extrema --n 8
//   zonalsym bessel  --count 20
//   zonalsym norms   --n 4,8,800 --p 6
//   zonalsym series  --p 6
//   zonalsym verify  --p 6 --n-list 1,2,5,10,25,50,100,200 --format json --out report.json
//
// Exit status: 0 on success (and an overall pass for verify), 1 when a
// verification check fails, 2 on usage or configuration errors.

#include "zonal/bessel.hpp"
#include "zonal/errors.hpp"
#include "zonal/legendre.hpp"
#include "zonal/norms.hpp"
#include "zonal/report_io.hpp"
#include "zonal/roots.hpp"
#include "zonal/series.hpp"
#include "zonal/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  double tol = 1e-8;
  int degree_cap = zonal::kDefaultDegreeCap;
  std::string format = "csv";
  std::string out = "-";
  int jobs = 1;
};

std::string eval_output(int n, double x, int cap, zonal::TableFormat format)
{
  const zonal::Degree d{n, cap};
  const auto r = zonal::eval_legendre_all(d, x);
  const bool interior = std::abs(x) < 1.0;
  const std::string second = r.second_derivative ? zonal::format_real(*r.second_derivative) : "";
  const std::string envelope = (interior && n >= 1) ? zonal::format_real(zonal::bernstein_envelope(d, x)) : "";
  if (format == zonal::TableFormat::csv)
    return fmt::format("n,x,value,derivative,second_derivative,bernstein_envelope\n{},{},{},{},{},{}\n", n,
                       zonal::format_real(x), zonal::format_real(r.value), zonal::format_real(*r.derivative),
                       second, envelope);
  return fmt::format("{{\"n\":{},\"x\":{},\"value\":{},\"derivative\":{},\"second_derivative\":{},"
                     "\"bernstein_envelope\":{}}}\n",
                     n, zonal::format_real(x), zonal::format_real(r.value), zonal::format_real(*r.derivative),
                     second.empty() ? "null" : second, envelope.empty() ? "null" : envelope);
}

std::string series_output(double p, double tol, zonal::TableFormat format)
{
  const auto sum = zonal::bessel_extrema_sum(p, tol);
  const auto apery = zonal::zeta3(std::min(tol, 1e-3));
  const auto identity = zonal::hurwitz_identity(std::min(tol, 1e-6));
  const double bound = zonal::prop_limit_lower_bound(p, tol);
  using zonal::format_real;
  if (format == zonal::TableFormat::csv)
    return fmt::format("quantity,value,tail_bound,terms_used\n"
                       "extrema_sum,{},{},{}\nzeta3,{},{},{}\nhurwitz_residual,{},,\nlimit_bound,{},,\n",
                       format_real(sum.value), format_real(sum.tail_bound), sum.terms_used,
                       format_real(apery.value), format_real(apery.tail_bound), apery.terms_used,
                       format_real(identity.residual), format_real(bound));
  auto inline_json = [](const zonal::SeriesResult& r) {
    auto text = zonal::emit_table(r, zonal::TableFormat::json);
    text.pop_back();
    return text;
  };
  return fmt::format("{{\"p\":{},\"extrema_sum\":{},\"zeta3\":{},\"hurwitz\":{{\"lhs\":{},\"rhs\":{},"
                     "\"residual\":{}}},\"limit_bound\":{}}}\n",
                     format_real(p), inline_json(sum), inline_json(apery), format_real(identity.lhs),
                     format_real(identity.rhs), format_real(identity.residual), format_real(bound));
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Legendre/Bessel toolkit for sign-partitioned L^p norms of zonal spherical harmonics"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--tol", global.tol, "Series tolerance")->check(CLI::PositiveNumber);
  app.add_option("--degree-cap", global.degree_cap, "Largest admissible polynomial degree")
      ->check(CLI::Range(1, 1000000));
  app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", global.out, "Output file, '-' for stdout");
  app.add_option("--jobs", global.jobs, "Concurrent verification checks")->check(CLI::Range(1, 256));

  int n = 0;
  double x = 0.0;
  auto* eval = app.add_subcommand("eval", "Evaluate P_n, P_n', P_n'' and the Bernstein envelope");
  eval->add_option("--n", n, "Degree")->required();
  eval->add_option("--x", x, "Argument in [-1, 1]")->required();

  auto* zeros = app.add_subcommand("zeros", "Positive zeros of P_n with Bruns brackets");
  zeros->add_option("--n", n, "Degree")->required();

  auto* extrema = app.add_subcommand("extrema", "Positive critical points and extremal magnitudes of P_n");
  extrema->add_option("--n", n, "Degree")->required();

  int count = 10;
  auto* bessel = app.add_subcommand("bessel", "Zeros of J1 and the extremal values J0(j_i)");
  bessel->add_option("--count", count, "Number of zeros")->check(CLI::PositiveNumber);

  std::vector<int> degrees;
  double p = 6.0;
  zonal::QuadratureConfig quad;
  auto* norms = app.add_subcommand("norms", "Sign-partitioned L^p integrals and norm ratios on [0, 1]");
  norms->add_option("--n", degrees, "Degrees (comma separated)")->required()->delimiter(',');
  norms->add_option("--p", p, "Exponent");
  norms->add_option("--rel-tol", quad.rel_tol, "Quadrature relative tolerance");
  norms->add_option("--base-nodes", quad.base_nodes, "Initial Gauss nodes per cell");

  auto* series = app.add_subcommand("series", "Bessel extrema sum, zeta(3), identity residual, limiting bound");
  series->add_option("--p", p, "Exponent (> 4)");

  zonal::VerifyConfig vcfg;
  auto* verify = app.add_subcommand("verify", "Run the full verification battery");
  verify->add_option("--p", vcfg.p, "Exponent for the main check");
  verify->add_option("--n-list", vcfg.n_list, "Values n_q (degree 4 n_q)")->delimiter(',');
  verify->add_option("--rel-tol", vcfg.quadrature.rel_tol, "Quadrature relative tolerance");
  verify->add_option("--base-nodes", vcfg.quadrature.base_nodes, "Initial Gauss nodes per cell");
  verify->add_option("--grid-points", vcfg.grid_points, "Grid size for P_n(x) <= x");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto format = zonal::parse_format(global.format);
    std::string text;
    int status = 0;
    if (*eval) {
      text = eval_output(n, x, global.degree_cap, format);
    } else if (*zeros) {
      text = zonal::emit_table(zonal::legendre_zeros(zonal::Degree{n, global.degree_cap}), format);
    } else if (*extrema) {
      text = zonal::emit_table(zonal::legendre_extrema(zonal::Degree{n, global.degree_cap}), format);
    } else if (*bessel) {
      text = zonal::emit_table(zonal::j1_zeros(count), format);
    } else if (*norms) {
      std::vector<zonal::NormReport> reports;
      for (int d : degrees)
        reports.push_back(zonal::norm_ratio(zonal::Degree{d, global.degree_cap}, p, quad));
      text = zonal::emit_table(std::span<const zonal::NormReport>(reports), format);
    } else if (*series) {
      text = series_output(p, global.tol, format);
    } else if (*verify) {
      vcfg.degree_cap = global.degree_cap;
      vcfg.series_tol = global.tol;
      vcfg.jobs = global.jobs;
      const auto report = zonal::run_all(vcfg);
      text = zonal::emit_table(report, format);
      status = report.overall_pass ? 0 : kExitFail;
    }
    zonal::write_output(text, global.out);
    return status;
  } catch (const zonal::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const zonal::DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const zonal::CapError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const zonal::IndexError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
