#pragma once

#include "zonal/bessel.hpp"
#include "zonal/norms.hpp"
#include "zonal/roots.hpp"
#include "zonal/series.hpp"
#include "zonal/verify.hpp"

#include <span>
#include <string>
#include <string_view>

namespace zonal {

enum class TableFormat { csv, json };

/// Parses "csv" or "json"; throws UsageError otherwise.
TableFormat parse_format(std::string_view name);

/// 17 significant digits, '.' separator, independent of the C locale.
std::string format_real(double value);

// All emitters are deterministic: fixed field order, fixed float format, '\n' line endings.
std::string emit_table(const VerificationReport& report, TableFormat format);
std::string emit_table(std::span<const NormReport> reports, TableFormat format);
std::string emit_table(const ZeroTable& table, TableFormat format);
std::string emit_table(const ExtremaTable& table, TableFormat format);
std::string emit_table(const BesselZeroTable& table, TableFormat format);
std::string emit_table(const SeriesResult& result, TableFormat format);

/// Writes text to a file, or to stdout when destination is empty or "-".
/// Throws IoError if the file cannot be written.
void write_output(const std::string& text, const std::string& destination);

} // namespace zonal
