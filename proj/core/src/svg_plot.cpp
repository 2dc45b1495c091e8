#include "udval/svg_plot.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace udval {

namespace {

constexpr double kWidth = 880;
constexpr double kHeight = 520;
constexpr double kLeft = 70;
constexpr double kRight = 860;
constexpr double kTop = 40;
constexpr double kBottom = 470;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c"};

std::string num(double x) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.6g", x);
  return buffer;
}

double parse_number(const std::string& field, const std::string& context) {
  try {
    std::size_t consumed = 0;
    const double x = std::stod(field, &consumed);
    if (consumed != field.size()) throw std::invalid_argument(field);
    return x;
  } catch (const std::exception&) {
    fail(ErrorCode::parse_error, "bad number '" + field + "' in column " + context);
  }
}

int require_column(const CsvTable& table, const std::string& name) {
  const int idx = find_column(table, name);
  if (idx < 0) fail(ErrorCode::parse_error, "missing column '" + name + "'");
  return idx;
}

/// A pleasant tick step: 1, 2, or 5 times a power of ten.
double nice_step(double span) {
  if (span <= 0) return 1.0;
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double mult : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= mult * mag) return mult * mag;
  }
  return 10.0 * mag;
}

struct Canvas {
  std::ostringstream body;

  void line(double x1, double y1, double x2, double y2, const std::string& stroke,
            double width = 1.0) {
    body << "<line x1='" << num(x1) << "' y1='" << num(y1) << "' x2='" << num(x2) << "' y2='"
         << num(y2) << "' stroke='" << stroke << "' stroke-width='" << num(width) << "'/>\n";
  }
  void rect(double x, double y, double w, double h, const std::string& fill) {
    body << "<rect x='" << num(x) << "' y='" << num(y) << "' width='" << num(w) << "' height='"
         << num(h) << "' fill='" << fill << "'/>\n";
  }
  void text(double x, double y, const std::string& content, int size = 12,
            const std::string& anchor = "start") {
    body << "<text x='" << num(x) << "' y='" << num(y) << "' font-size='" << size
         << "' font-family='sans-serif' text-anchor='" << anchor << "'>" << content
         << "</text>\n";
  }
  void polyline(const std::string& points, const std::string& stroke) {
    body << "<polyline fill='none' stroke='" << stroke << "' stroke-width='1.5' points='"
         << points << "'/>\n";
  }

  std::string finish() const {
    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << num(kWidth) << "' height='"
        << num(kHeight) << "' viewBox='0 0 " << num(kWidth) << ' ' << num(kHeight) << "'>\n"
        << "<rect width='100%' height='100%' fill='white'/>\n"
        << body.str() << "</svg>\n";
    return out.str();
  }
};

void draw_y_axis(Canvas& canvas, double y_max) {
  canvas.line(kLeft, kTop, kLeft, kBottom, "#000000");
  canvas.line(kLeft, kBottom, kRight, kBottom, "#000000");
  const double step = nice_step(y_max);
  for (double tick = 0.0; tick <= y_max + 1e-12; tick += step) {
    const double y = kBottom - (kBottom - kTop) * (y_max == 0 ? 0 : tick / y_max);
    canvas.line(kLeft - 4, y, kLeft, y, "#000000");
    canvas.line(kLeft, y, kRight, y, "#dddddd", 0.5);
    canvas.text(kLeft - 8, y + 4, num(tick), 11, "end");
  }
}

void draw_legend(Canvas& canvas, const std::vector<std::string>& names) {
  double x = kRight - 120;
  double y = kTop + 4;
  for (std::size_t s = 0; s < names.size(); ++s) {
    canvas.rect(x, y + static_cast<double>(s) * 18 - 9, 10, 10, kColors[s % 3]);
    canvas.text(x + 16, y + static_cast<double>(s) * 18, names[s], 12);
  }
}

std::string render_lines(const CsvTable& table) {
  require_column(table, "system");
  std::vector<std::string> names;
  std::vector<int> mean_cols;
  std::vector<int> sd_cols;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    const std::string& col = table.columns[c];
    if (col.rfind("mean_", 0) == 0) {
      const std::string name = col.substr(5);
      names.push_back(name);
      mean_cols.push_back(static_cast<int>(c));
      sd_cols.push_back(require_column(table, "sd_" + name));
    }
  }
  if (names.empty()) fail(ErrorCode::parse_error, "missing column 'mean_<series>'");

  const std::size_t points = table.rows.size();
  double y_max = 0.0;
  std::vector<std::vector<double>> means(names.size());
  std::vector<std::vector<double>> sds(names.size());
  for (std::size_t s = 0; s < names.size(); ++s) {
    for (const auto& row : table.rows) {
      const double mean = parse_number(row[mean_cols[s]], table.columns[mean_cols[s]]);
      const double sd = parse_number(row[sd_cols[s]], table.columns[sd_cols[s]]);
      means[s].push_back(mean);
      sds[s].push_back(sd);
      y_max = std::max(y_max, mean + sd);
    }
  }
  if (y_max == 0.0) y_max = 1.0;

  Canvas canvas;
  draw_y_axis(canvas, y_max);
  auto x_at = [&](std::size_t i) {
    if (points == 1) return (kLeft + kRight) / 2;
    return kLeft + (kRight - kLeft) * static_cast<double>(i) / static_cast<double>(points - 1);
  };
  auto y_at = [&](double v) { return kBottom - (kBottom - kTop) * (v / y_max); };

  for (std::size_t s = 0; s < names.size(); ++s) {
    std::ostringstream path;
    for (std::size_t i = 0; i < points; ++i) {
      path << num(x_at(i)) << ',' << num(y_at(means[s][i])) << ' ';
      if (sds[s][i] > 0) {
        canvas.line(x_at(i), y_at(std::max(0.0, means[s][i] - sds[s][i])), x_at(i),
                    y_at(std::min(y_max, means[s][i] + sds[s][i])), kColors[s % 3], 0.6);
      }
    }
    canvas.polyline(path.str(), kColors[s % 3]);
  }

  const int system_col = find_column(table, "system");
  const std::size_t label_stride = std::max<std::size_t>(1, points / 10);
  for (std::size_t i = 0; i < points; i += label_stride) {
    canvas.text(x_at(i), kBottom + 16, table.rows[i][system_col], 10, "middle");
  }
  canvas.text((kLeft + kRight) / 2, kBottom + 34, "system encoding", 12, "middle");
  draw_legend(canvas, names);
  return canvas.finish();
}

std::string render_grouped_bars(const CsvTable& table, const std::vector<std::string>& group_labels,
                                const std::vector<std::string>& series_names,
                                const std::vector<std::vector<double>>& counts,
                                const std::string& x_label) {
  double y_max = 0.0;
  for (const auto& group : counts) {
    for (double c : group) y_max = std::max(y_max, c);
  }
  if (y_max == 0.0) y_max = 1.0;

  Canvas canvas;
  draw_y_axis(canvas, y_max);
  const std::size_t groups = group_labels.size();
  const double group_width = (kRight - kLeft) / static_cast<double>(groups);
  const double bar_width = group_width * 0.8 / static_cast<double>(series_names.size());
  for (std::size_t gi = 0; gi < groups; ++gi) {
    const double base = kLeft + group_width * static_cast<double>(gi) + group_width * 0.1;
    for (std::size_t s = 0; s < series_names.size(); ++s) {
      const double h = (kBottom - kTop) * (counts[gi][s] / y_max);
      canvas.rect(base + bar_width * static_cast<double>(s), kBottom - h, bar_width * 0.92, h,
                  kColors[s % 3]);
    }
    canvas.text(base + group_width * 0.4, kBottom + 16, group_labels[gi], 10, "middle");
  }
  canvas.text((kLeft + kRight) / 2, kBottom + 34, x_label, 12, "middle");
  draw_legend(canvas, series_names);
  (void)table;
  return canvas.finish();
}

std::string render_ranks(const CsvTable& table) {
  const int series_col = require_column(table, "series");
  const int cols[3] = {require_column(table, "smallest"), require_column(table, "second"),
                       require_column(table, "largest")};
  std::vector<std::string> series_names;
  std::vector<std::array<double, 3>> by_series;
  for (const auto& row : table.rows) {
    series_names.push_back(row[series_col]);
    by_series.push_back({parse_number(row[cols[0]], "smallest"),
                         parse_number(row[cols[1]], "second"),
                         parse_number(row[cols[2]], "largest")});
  }
  // regroup: one bar group per rank position
  std::vector<std::vector<double>> counts(3, std::vector<double>(series_names.size(), 0.0));
  for (std::size_t s = 0; s < by_series.size(); ++s) {
    for (int rank = 0; rank < 3; ++rank) counts[rank][s] = by_series[s][rank];
  }
  return render_grouped_bars(table, {"smallest", "second", "largest"}, series_names, counts,
                             "rank of the mean difference");
}

std::string render_hist(const CsvTable& table) {
  const int lo_col = require_column(table, "bin_lo");
  const int hi_col = require_column(table, "bin_hi");
  std::vector<std::string> series_names;
  std::vector<int> series_cols;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (static_cast<int>(c) == lo_col || static_cast<int>(c) == hi_col) continue;
    series_names.push_back(table.columns[c]);
    series_cols.push_back(static_cast<int>(c));
  }
  if (series_names.empty()) fail(ErrorCode::parse_error, "missing histogram series columns");

  std::vector<std::string> labels;
  std::vector<std::vector<double>> counts;
  for (const auto& row : table.rows) {
    labels.push_back(row[lo_col]);
    std::vector<double> group;
    for (int c : series_cols) group.push_back(parse_number(row[c], table.columns[c]));
    counts.push_back(std::move(group));
  }
  return render_grouped_bars(table, labels, series_names, counts, "bin lower edge");
}

}  // namespace

PlotKind plot_kind_from_string(const std::string& name) {
  if (name == "lines") return PlotKind::lines;
  if (name == "ranks") return PlotKind::ranks;
  if (name == "hist") return PlotKind::hist;
  fail(ErrorCode::invalid_input, "unknown plot kind '" + name + "'");
}

std::string render_plot(const CsvTable& table, PlotKind kind,
                        const std::vector<std::string>& header) {
  if (table.rows.empty()) fail(ErrorCode::parse_error, "CSV has no data rows");
  std::string body;
  switch (kind) {
    case PlotKind::lines: body = render_lines(table); break;
    case PlotKind::ranks: body = render_ranks(table); break;
    case PlotKind::hist: body = render_hist(table); break;
  }
  std::string comments;
  for (const std::string& line : header) {
    comments += "<!-- " + line + " -->\n";
  }
  return comments + body;
}

void emit_plot(const std::string& csv_path, PlotKind kind, const std::string& svg_path,
               const std::vector<std::string>& header) {
  const CsvTable table = read_csv(csv_path);
  const std::string svg = render_plot(table, kind, header);  // may throw; nothing written then
  std::ofstream out(svg_path);
  if (!out) fail(ErrorCode::invalid_input, svg_path + ": cannot open for writing");
  out << svg;
}

}  // namespace udval
