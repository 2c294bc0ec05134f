#include "pball/output.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pball {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* status_name(OutputRecord::Status s) {
  switch (s) {
    case OutputRecord::Status::pass:
      return "pass";
    case OutputRecord::Status::fail:
      return "fail";
    default:
      return "info";
  }
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

// JSON numbers must be finite; infinities and NaN degrade to strings.
std::string json_number(double v) {
  if (!std::isfinite(v)) return json_string(format_number(v));
  return format_number(v);
}

}  // namespace

std::string to_csv(const OutputRecord& rec) {
  std::ostringstream os;
  bool first = true;
  if (!rec.label_column.empty()) {
    os << csv_field(rec.label_column);
    first = false;
  }
  for (const std::string& c : rec.columns) {
    if (!first) os << ',';
    os << csv_field(c);
    first = false;
  }
  os << '\n';
  for (const OutputRecord::Row& row : rec.rows) {
    first = true;
    if (!rec.label_column.empty()) {
      os << csv_field(row.label);
      first = false;
    }
    for (double v : row.values) {
      if (!first) os << ',';
      os << format_number(v);
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

std::string to_json(const OutputRecord& rec) {
  std::ostringstream os;
  os << "{\"command\":" << json_string(rec.command) << ",\"parameters\":{";
  for (std::size_t i = 0; i < rec.parameters.size(); ++i) {
    if (i) os << ',';
    os << json_string(rec.parameters[i].first) << ':'
       << json_string(rec.parameters[i].second);
  }
  os << "},\"status\":" << json_string(status_name(rec.status))
     << ",\"rows\":[";
  for (std::size_t r = 0; r < rec.rows.size(); ++r) {
    if (r) os << ',';
    os << '{';
    bool first = true;
    if (!rec.label_column.empty()) {
      os << json_string(rec.label_column) << ':'
         << json_string(rec.rows[r].label);
      first = false;
    }
    for (std::size_t c = 0; c < rec.rows[r].values.size(); ++c) {
      if (!first) os << ',';
      os << json_string(rec.columns[c]) << ':'
         << json_number(rec.rows[r].values[c]);
      first = false;
    }
    os << '}';
  }
  os << "]}";
  return os.str();
}

}  // namespace pball
