#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "theta/applications.hpp"

namespace theta::cli {

enum class OutputFormat { kPlainTable, kCsv, kJson };

/// "plain" / "plain-table", "csv", "json". Throws DomainError otherwise.
OutputFormat parse_output_format(std::string_view name);

inline constexpr std::string_view kCsvHeader = "s,theta_exact,approx,rel_error";

/// Header `s,theta_exact,approx,rel_error`, '\n' line endings. Reals carry their
/// full working precision in scientific notation; the s = 1 row has empty
/// approx and rel_error fields.
void write_csv(std::ostream& out, const std::vector<applications::TableRow>& rows);

/// Array of {"s", "theta_exact", "approx", "rel_error"} objects. Big values are
/// decimal strings; the s = 1 approx and rel_error are null.
void write_json(std::ostream& out, const std::vector<applications::TableRow>& rows);

/// Aligned human-readable table with `digits` significant digits.
void write_plain(std::ostream& out, const std::vector<applications::TableRow>& rows, unsigned digits);

using CsvRecord = std::vector<std::string>;

/// Minimal RFC 4180 reader: quoted fields, doubled quotes, '\n' records.
std::vector<CsvRecord> parse_csv(std::string_view text);
std::string serialize_csv(const std::vector<CsvRecord>& records);

/// One `key = value  # provenance` line per entry.
void write_report_text(std::ostream& out, const applications::DiscrepancyReport& report);
void write_report_json(std::ostream& out, const applications::DiscrepancyReport& report);

}  // namespace theta::cli
