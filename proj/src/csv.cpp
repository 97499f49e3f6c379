#include "swtomo/csv.hpp"

#include <cstdio>
#include <ostream>

namespace swt {

std::string CsvWriter::quote(const std::string& field) {
  bool needs = field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string CsvWriter::format(const CsvValue& value) {
  if (const auto* s = std::get_if<std::string>(&value)) return quote(*s);
  if (const auto* i = std::get_if<long long>(&value)) return std::to_string(*i);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", std::get<double>(value));
  return buf;
}

void CsvWriter::write_row(const CsvRow& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os_ << ',';
    os_ << format(row[i]);
  }
  os_ << '\n';
}

std::vector<std::string> parse_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace swt
