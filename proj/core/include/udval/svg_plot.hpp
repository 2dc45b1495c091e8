#pragma once

#include <string>

#include "udval/csv.hpp"

namespace udval {

enum class PlotKind { lines, ranks, hist };

PlotKind plot_kind_from_string(const std::string& name);

/// Renders a CSV produced by this toolkit as a self-contained SVG:
///   lines: per-system means with ±1 sd whiskers, x ordered by system
///   ranks: grouped bars of rank frequencies
///   hist:  grouped bars of bin counts
/// header lines are embedded as XML comments. Fails (without writing) on an
/// empty table or on a column mismatch, naming the missing column.
void emit_plot(const std::string& csv_path, PlotKind kind, const std::string& svg_path,
               const std::vector<std::string>& header = {});

std::string render_plot(const CsvTable& table, PlotKind kind,
                        const std::vector<std::string>& header = {});

}  // namespace udval
