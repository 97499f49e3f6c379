#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace swt {

using CsvValue = std::variant<std::string, long long, double>;
using CsvRow = std::vector<CsvValue>;

// RFC-4180 writer; doubles formatted at 12 significant digits, byte
// deterministic for fixed input.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}
  void write_row(const CsvRow& row);

  static std::string format(const CsvValue& value);
  static std::string quote(const std::string& field);

 private:
  std::ostream& os_;
};

// Minimal reader for round-trip tests: splits one line into fields.
std::vector<std::string> parse_csv_line(const std::string& line);

}  // namespace swt
