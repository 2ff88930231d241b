#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace mediator::io {

// Minimal RFC-4180-style CSV: comma separator, optional double-quoting with
// "" escapes. Embedded newlines are not supported by any format here.
struct CsvTable {
  std::filesystem::path source;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<long> row_lines;  // 1-based file line of each data row

  long line_of(std::size_t row_index) const { return row_lines[row_index]; }
  std::string locate(std::size_t row_index) const {
    return source.string() + ":" + std::to_string(line_of(row_index));
  }
};

// Throws mediator::Error with file:line locators on parse problems; checks
// the header against `expected_header` when nonempty and row widths against
// the header.
CsvTable read_csv(const std::filesystem::path& path,
                  const std::vector<std::string>& expected_header = {});

std::string format_csv_field(const std::string& field);

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// Full-precision round-trip formatting for reals; fixed 3 decimals for
// display artifacts.
std::string format_full(double value);
std::string format_display(double value);

long parse_long(const std::string& text, const std::string& context);
double parse_double(const std::string& text, const std::string& context);
bool parse_bool(const std::string& text, const std::string& context);

}  // namespace mediator::io
