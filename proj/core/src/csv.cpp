#include "udval/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "udval/errors.hpp"

namespace udval {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(current);
      current.clear();
    } else if (ch != '\r') {
      current += ch;
    }
  }
  fields.push_back(current);
  return fields;
}

}  // namespace

CsvTable parse_csv(const std::string& text, const std::string& origin) {
  CsvTable table;
  std::istringstream input(text);
  std::string line;
  bool saw_header = false;
  while (std::getline(input, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::size_t start = 1;
      while (start < line.size() && line[start] == ' ') ++start;
      table.comments.push_back(line.substr(start));
      continue;
    }
    if (!saw_header) {
      table.columns = split_fields(line);
      saw_header = true;
      continue;
    }
    std::vector<std::string> fields = split_fields(line);
    if (fields.size() != table.columns.size()) {
      fail(ErrorCode::parse_error, origin + ": row with " + std::to_string(fields.size()) +
                                       " fields, expected " + std::to_string(table.columns.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  if (!saw_header) fail(ErrorCode::parse_error, origin + ": missing CSV header row");
  return table;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream input(path);
  if (!input) fail(ErrorCode::parse_error, path + ": cannot open");
  std::ostringstream buffer;
  buffer << input.rdbuf();
  return parse_csv(buffer.str(), path);
}

int find_column(const CsvTable& table, const std::string& name) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (table.columns[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

std::string format_csv(const std::vector<std::string>& header_comments,
                       const std::vector<std::string>& columns,
                       const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const std::string& comment : header_comments) out << "# " << comment << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out << ',';
    out << columns[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

void write_csv(const std::string& path, const std::vector<std::string>& header_comments,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::invalid_input, path + ": cannot open for writing");
  out << format_csv(header_comments, columns, rows);
}

void write_census_csv(const CensusRow& row, const std::string& path,
                      const std::vector<std::string>& header_comments) {
  write_csv(path, header_comments,
            {"n", "total", "ic_count", "ic_prop", "unique_nonic_count", "unique_nonic_prop",
             "samples", "seed"},
            {{std::to_string(row.players), row.total.get_str(), std::to_string(row.ic_count),
              format_double(row.ic_proportion), std::to_string(row.unique_nonic_count),
              format_double(row.unique_nonic_proportion), std::to_string(row.samples),
              std::to_string(row.seed)}});
}

void write_difference_csv(const DifferenceReport& report, const std::string& path,
                          const std::vector<std::string>& header_comments) {
  const auto names = difference_series_names(report.reference);
  std::vector<std::string> columns{"system"};
  for (const std::string& name : names) {
    columns.push_back("mean_" + name);
    columns.push_back("sd_" + name);
  }
  std::vector<std::vector<std::string>> rows;
  rows.reserve(report.systems.size());
  for (const SystemDifferenceStats& stats : report.systems) {
    std::vector<std::string> row{stats.encoding.get_str()};
    for (int s = 0; s < 3; ++s) {
      row.push_back(format_double(stats.mean[s]));
      row.push_back(format_double(stats.sd[s]));
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::string> comments = header_comments;
  for (const mpz_class& enc : report.skipped) {
    comments.push_back("skipped unsupported system " + enc.get_str());
  }
  write_csv(path, comments, columns, rows);
}

void write_rank_csv(const RankTable& table, const std::string& path,
                    const std::vector<std::string>& header_comments) {
  std::vector<std::string> comments = header_comments;
  comments.push_back("tied_systems " + std::to_string(table.tied_systems));
  std::vector<std::vector<std::string>> rows;
  for (int s = 0; s < 3; ++s) {
    rows.push_back({table.series[s], std::to_string(table.counts[s][0]),
                    std::to_string(table.counts[s][1]), std::to_string(table.counts[s][2])});
  }
  write_csv(path, comments, {"series", "smallest", "second", "largest"}, rows);
}

void write_histogram_csv(const Histogram& hist, const std::string& path,
                         const std::vector<std::string>& header_comments) {
  std::vector<std::string> comments = header_comments;
  for (int s = 0; s < 3; ++s) {
    if (hist.clipped_low[s] || hist.clipped_high[s]) {
      comments.push_back("clipped " + hist.series[s] + " low=" +
                         std::to_string(hist.clipped_low[s]) +
                         " high=" + std::to_string(hist.clipped_high[s]));
    }
  }
  std::vector<std::string> columns{"bin_lo", "bin_hi"};
  for (const std::string& name : hist.series) columns.push_back(name);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t bin = 0; bin < hist.counts.size(); ++bin) {
    const double lo = hist.low + static_cast<double>(bin) * hist.width;
    std::vector<std::string> row{format_double(lo), format_double(lo + hist.width)};
    for (int s = 0; s < 3; ++s) row.push_back(std::to_string(hist.counts[bin][s]));
    rows.push_back(std::move(row));
  }
  write_csv(path, comments, columns, rows);
}

}  // namespace udval
