#include "zonal/report_io.hpp"

#include "zonal/errors.hpp"

#include <fmt/format.h>
#include "json.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

namespace zonal {

namespace {

std::string json_string(std::string_view s)
{
  return nlohmann::json(std::string(s)).dump();
}

std::string json_number(double v)
{
  return std::isfinite(v) ? format_real(v) : "null";
}

std::string detail_json(const DetailValue& value)
{
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>)
          return json_number(v);
        else if constexpr (std::is_same_v<T, std::int64_t>)
          return std::to_string(v);
        else
          return json_string(v);
      },
      value);
}

std::string csv_field(std::string_view s)
{
  if (s.find_first_of(",\"\n") == std::string_view::npos)
    return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + '"';
}

std::string config_json(const VerifyConfig& c)
{
  std::string n_list;
  for (std::size_t k = 0; k < c.n_list.size(); ++k)
    n_list += (k ? "," : "") + std::to_string(c.n_list[k]);
  return fmt::format(
      "{{\"degree_cap\":{},\"p\":{},\"n_list\":[{}],\"series_tol\":{},"
      "\"quadrature\":{{\"base_nodes\":{},\"refinement_factor\":{},\"rel_tol\":{}}},"
      "\"bracket_degree_max\":{},\"inequality_degree_max\":{},\"grid_points\":{},"
      "\"cooper_degree_max\":{},\"linfty_degree_max\":{},\"bessel_zero_count\":{},\"jobs\":{}}}",
      c.degree_cap, json_number(c.p), n_list, json_number(c.series_tol), c.quadrature.base_nodes,
      c.quadrature.refinement_factor, json_number(c.quadrature.rel_tol), c.bracket_degree_max,
      c.inequality_degree_max, c.grid_points, c.cooper_degree_max, c.linfty_degree_max, c.bessel_zero_count,
      c.jobs);
}

} // namespace

TableFormat parse_format(std::string_view name)
{
  if (name == "csv")
    return TableFormat::csv;
  if (name == "json")
    return TableFormat::json;
  throw UsageError("unknown format '" + std::string(name) + "', expected csv or json");
}

std::string format_real(double value)
{
  if (std::isnan(value))
    return "nan";
  if (std::isinf(value))
    return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", value);
}

std::string emit_table(const VerificationReport& report, TableFormat format)
{
  std::string out;
  if (format == TableFormat::csv) {
    out = "check_id,status,computed_margin,claim\n";
    for (const auto& c : report.checks)
      out += fmt::format("{},{},{},{}\n", csv_field(c.check_id), to_string(c.status),
                         format_real(c.computed_margin), csv_field(c.claim));
    return out;
  }
  out = "{\n";
  out += "  \"toolkit_version\": " + json_string(report.toolkit_version) + ",\n";
  out += "  \"config\": " + config_json(report.config) + ",\n";
  out += "  \"checks\": [";
  for (std::size_t k = 0; k < report.checks.size(); ++k) {
    const auto& c = report.checks[k];
    out += k ? ",\n    " : "\n    ";
    out += fmt::format("{{\"check_id\":{},\"claim\":{},\"status\":{},\"computed_margin\":{},\"details\":{{",
                       json_string(c.check_id), json_string(c.claim), json_string(to_string(c.status)),
                       json_number(c.computed_margin));
    for (std::size_t d = 0; d < c.details.size(); ++d)
      out += (d ? "," : "") + json_string(c.details[d].first) + ":" + detail_json(c.details[d].second);
    out += "}}";
  }
  out += report.checks.empty() ? "],\n" : "\n  ],\n";
  out += std::string("  \"overall\": ") + (report.overall_pass ? "\"pass\"" : "\"fail\"") + "\n}\n";
  return out;
}

std::string emit_table(std::span<const NormReport> reports, TableFormat format)
{
  std::string out;
  if (format == TableFormat::csv) {
    out = "n,p,integral_plus,integral_minus,norm_ratio,quad_error\n";
    for (const auto& r : reports)
      out += fmt::format("{},{},{},{},{},{}\n", r.n, format_real(r.p), format_real(r.integral_plus),
                         format_real(r.integral_minus), format_real(r.norm_ratio),
                         format_real(r.quad_error_estimate));
    return out;
  }
  out = "[";
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto& r = reports[k];
    out += fmt::format("{}\n  {{\"n\":{},\"p\":{},\"integral_plus\":{},\"integral_minus\":{},"
                       "\"norm_ratio\":{},\"quad_error\":{}}}",
                       k ? "," : "", r.n, json_number(r.p), json_number(r.integral_plus),
                       json_number(r.integral_minus), json_number(r.norm_ratio),
                       json_number(r.quad_error_estimate));
  }
  out += reports.empty() ? "]\n" : "\n]\n";
  return out;
}

std::string emit_table(const ZeroTable& table, TableFormat format)
{
  std::string out;
  if (format == TableFormat::csv) {
    out = "n,i,value,bracket_lo,bracket_hi,residual\n";
    for (const auto& z : table.zeros)
      out += fmt::format("{},{},{},{},{},{}\n", table.n, z.index, format_real(z.value),
                         format_real(z.bracket.lo), format_real(z.bracket.hi), format_real(z.residual));
    return out;
  }
  out = fmt::format("{{\"n\":{},\"zeros\":[", table.n);
  for (std::size_t k = 0; k < table.zeros.size(); ++k) {
    const auto& z = table.zeros[k];
    out += fmt::format("{}{{\"i\":{},\"value\":{},\"bracket_lo\":{},\"bracket_hi\":{},\"residual\":{}}}",
                       k ? "," : "", z.index, json_number(z.value), json_number(z.bracket.lo),
                       json_number(z.bracket.hi), json_number(z.residual));
  }
  return out + "]}\n";
}

std::string emit_table(const ExtremaTable& table, TableFormat format)
{
  std::string out;
  if (format == TableFormat::csv) {
    out = "n,i,value,bracket_lo,bracket_hi,residual,y_value,sign\n";
    for (const auto& e : table.extrema)
      out += fmt::format("{},{},{},{},{},{},{},{}\n", table.n, e.index, format_real(e.x),
                         format_real(e.bracket.lo), format_real(e.bracket.hi), format_real(e.residual),
                         format_real(e.y), e.sign);
    return out;
  }
  out = fmt::format("{{\"n\":{},\"extrema\":[", table.n);
  for (std::size_t k = 0; k < table.extrema.size(); ++k) {
    const auto& e = table.extrema[k];
    out += fmt::format("{}{{\"i\":{},\"value\":{},\"bracket_lo\":{},\"bracket_hi\":{},\"residual\":{},"
                       "\"y_value\":{},\"sign\":{}}}",
                       k ? "," : "", e.index, json_number(e.x), json_number(e.bracket.lo),
                       json_number(e.bracket.hi), json_number(e.residual), json_number(e.y), e.sign);
  }
  return out + "]}\n";
}

std::string emit_table(const BesselZeroTable& table, TableFormat format)
{
  std::string out;
  if (format == TableFormat::csv) {
    out = "i,j_value,extremum\n";
    for (const auto& e : table.entries)
      out += fmt::format("{},{},{}\n", e.index, format_real(e.j), format_real(e.extremum));
    return out;
  }
  out = "[";
  for (std::size_t k = 0; k < table.entries.size(); ++k) {
    const auto& e = table.entries[k];
    out += fmt::format("{}{{\"i\":{},\"j_value\":{},\"extremum\":{}}}", k ? "," : "", e.index,
                       json_number(e.j), json_number(e.extremum));
  }
  return out + "]\n";
}

std::string emit_table(const SeriesResult& result, TableFormat format)
{
  if (format == TableFormat::csv)
    return fmt::format("value,tail_bound,terms_used\n{},{},{}\n", format_real(result.value),
                       format_real(result.tail_bound), result.terms_used);
  return fmt::format("{{\"value\":{},\"tail_bound\":{},\"terms_used\":{}}}\n", json_number(result.value),
                     json_number(result.tail_bound), result.terms_used);
}

void write_output(const std::string& text, const std::string& destination)
{
  if (destination.empty() || destination == "-") {
    std::cout << text << std::flush;
    if (!std::cout)
      throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file)
    throw IoError("cannot open '" + destination + "' for writing");
  file << text;
  file.close();
  if (!file)
    throw IoError("failed writing '" + destination + "'");
}

} // namespace zonal
