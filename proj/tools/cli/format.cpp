#include "cli/format.hpp"

#include <algorithm>
#include <array>

#include <json.hpp>

#include "theta/errors.hpp"

namespace theta::cli {

namespace {

std::string full_precision(const Real& value) { return value.to_scientific(value.precision_digits()); }

bool needs_quotes(std::string_view field) {
  return field.find_first_of(",\"\n\r") != std::string_view::npos;
}

void append_field(std::string& out, std::string_view field) {
  if (!needs_quotes(field)) {
    out.append(field);
    return;
  }
  out.push_back('"');
  for (const char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "plain" || name == "plain-table") return OutputFormat::kPlainTable;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw DomainError("unknown output format '" + std::string(name) + "'");
}

void write_csv(std::ostream& out, const std::vector<applications::TableRow>& rows) {
  std::vector<CsvRecord> records;
  records.reserve(rows.size() + 1);
  records.push_back({"s", "theta_exact", "approx", "rel_error"});
  for (const auto& row : rows) {
    records.push_back({std::to_string(row.s), row.exact.to_string(),
                       row.approx ? full_precision(*row.approx) : std::string(),
                       row.rel_error ? full_precision(*row.rel_error) : std::string()});
  }
  out << serialize_csv(records);
}

void write_json(std::ostream& out, const std::vector<applications::TableRow>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json item;
    item["s"] = row.s;
    item["theta_exact"] = row.exact.to_string();
    item["approx"] = row.approx ? nlohmann::ordered_json(full_precision(*row.approx)) : nullptr;
    item["rel_error"] = row.rel_error ? nlohmann::ordered_json(full_precision(*row.rel_error)) : nullptr;
    doc.push_back(std::move(item));
  }
  out << doc.dump(2) << '\n';
}

void write_plain(std::ostream& out, const std::vector<applications::TableRow>& rows, unsigned digits) {
  std::vector<std::array<std::string, 5>> cells;
  cells.push_back({"s", "theta(s)", "approx", "rel_error", "note"});
  for (const auto& row : rows) {
    cells.push_back({std::to_string(row.s), row.exact.to_string(),
                     row.approx ? row.approx->to_string(digits) : "-",
                     row.rel_error ? row.rel_error->to_string(4) : "-", row.note});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t c = 0; c < 4; ++c) {
      if (c > 0) text += "  ";
      text += std::string(width[c] - line[c].size(), ' ') + line[c];
    }
    if (!line[4].empty()) text += "  " + line[4];
    out << text << '\n';
  }
}

std::vector<CsvRecord> parse_csv(std::string_view text) {
  std::vector<CsvRecord> records;
  CsvRecord record;
  std::string field;
  bool in_quotes = false;
  bool record_open = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    record_open = true;
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      record_open = false;
    } else {
      field.push_back(c);
    }
  }
  if (in_quotes) {
    throw DomainError("parse_csv: unterminated quoted field");
  }
  if (record_open) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

std::string serialize_csv(const std::vector<CsvRecord>& records) {
  std::string out;
  for (const auto& record : records) {
    for (std::size_t i = 0; i < record.size(); ++i) {
      if (i > 0) out.push_back(',');
      append_field(out, record[i]);
    }
    out.push_back('\n');
  }
  return out;
}

void write_report_text(std::ostream& out, const applications::DiscrepancyReport& report) {
  for (const auto& e : report.entries) {
    out << e.key << " = " << e.value << "  # " << e.provenance << '\n';
  }
}

void write_report_json(std::ostream& out, const applications::DiscrepancyReport& report) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    doc.push_back({{"key", e.key}, {"value", e.value}, {"provenance", e.provenance}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace theta::cli
