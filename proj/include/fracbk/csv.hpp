#ifndef FRACBK_CSV_HPP
#define FRACBK_CSV_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fracbk {

/// Shortest decimal text that reads back to exactly the same double.
std::string format_double(double v);

/// Numeric CSV with `#` metadata lines before the header and after the rows.
/// Missing cells are written as empty fields.
struct CsvTable {
  std::vector<std::string> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
  std::vector<std::string> trailer;

  std::optional<double> at(std::size_t row, const std::string& column) const;
};

void write_csv(std::ostream& os, const CsvTable& table);
CsvTable read_csv(std::istream& is);

}  // namespace fracbk

#endif  // FRACBK_CSV_HPP
