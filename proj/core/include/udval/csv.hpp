#pragma once

#include <string>
#include <vector>

#include "udval/experiments.hpp"

namespace udval {

/// A parsed CSV file: leading '#' comment lines, one header row, data rows.
/// No quoting; none of the toolkit's outputs ever contain commas in fields.
struct CsvTable {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::string& path);
CsvTable parse_csv(const std::string& text, const std::string& origin = "<string>");

/// Index of a named column, or -1.
int find_column(const CsvTable& table, const std::string& name);

/// All floats serialized with 12 significant digits.
std::string format_double(double x);

std::string format_csv(const std::vector<std::string>& header_comments,
                       const std::vector<std::string>& columns,
                       const std::vector<std::vector<std::string>>& rows);
void write_csv(const std::string& path, const std::vector<std::string>& header_comments,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows);

// Writers for the experiment artifacts. header_comments should carry the
// tool version, the full command line, and the seed.
void write_census_csv(const CensusRow& row, const std::string& path,
                      const std::vector<std::string>& header_comments);
void write_difference_csv(const DifferenceReport& report, const std::string& path,
                          const std::vector<std::string>& header_comments);
void write_rank_csv(const RankTable& table, const std::string& path,
                    const std::vector<std::string>& header_comments);
void write_histogram_csv(const Histogram& hist, const std::string& path,
                         const std::vector<std::string>& header_comments);

}  // namespace udval
