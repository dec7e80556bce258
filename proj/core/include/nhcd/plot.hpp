// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NHCD_PLOT_HPP
#define NHCD_PLOT_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace nhcd {

enum class CsvKind { Trajectory, Schedule, Sweep };

/// Classify a CSV by its header line. SchemaError if unreadable or unknown.
CsvKind classify_csv(const std::filesystem::path& path);

enum class PlotStyle {
  Grid,     // 2x2: one population panel per run, fidelities if a slot is left, schedule last
  Stacked,  // one column: every population panel, fidelities, schedule
};

PlotStyle parse_plot_style(std::string_view s);

struct PlotPanel {
  std::string kind;  // populations | fidelity | schedule | sweep-re | sweep-im
  std::vector<std::filesystem::path> csvs;
};

/// Panels in drawing order. Grid style fits four: one population panel per
/// trajectory, then fidelities if a slot is left, then the schedule.
std::vector<PlotPanel> plot_layout(const std::vector<std::filesystem::path>& csvs, PlotStyle style);

/// Text of a self-contained matplotlib script for the given CSVs. Schedule
/// CSVs next to a trajectory (<stem>_schedule.csv) are picked up on their own.
std::string plot_script(const std::vector<std::filesystem::path>& csvs, PlotStyle style,
                        const std::filesystem::path& image);

/// Validates every CSV first; nothing is written on error.
void emit_plots(const std::vector<std::filesystem::path>& csvs, PlotStyle style,
                const std::filesystem::path& script, const std::filesystem::path& image);

}  // namespace nhcd

#endif  // NHCD_PLOT_HPP
