#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pball {

/// Serializable result of one CLI command: invocation metadata, a column
/// schema, numeric rows (optionally labeled), and an overall status.
struct OutputRecord {
  enum class Status { pass, fail, info };

  struct Row {
    std::string label;
    std::vector<double> values;
  };

  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string label_column;          // empty = rows carry no label
  std::vector<std::string> columns;  // names of the numeric columns
  std::vector<Row> rows;
  Status status = Status::info;
};

/// Shortest-faithful decimal rendering (17 significant digits), identical
/// across runs; parsing it back recovers the exact double.
std::string format_number(double v);

/// RFC-4180 CSV: header row, then one line per row; fields quoted only
/// when they contain a comma, quote, or newline.
std::string to_csv(const OutputRecord& rec);

/// Single JSON object with command, parameters, status, and rows (an array
/// of objects keyed by column name). Numbers are emitted via format_number.
std::string to_json(const OutputRecord& rec);

const char* status_name(OutputRecord::Status s);

}  // namespace pball
