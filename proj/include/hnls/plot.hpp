#pragma once

#include <string>

namespace hnls {

enum class PlotKind { order, cpu };

/// Static SVG renderings of study tables: log-log scatter with a fitted
/// slope annotation (`order`, from tau/l2_error columns) or an error versus
/// CPU-time scatter (`cpu`). Pure function of the CSV bytes, so identical
/// input yields identical output.
std::string render_plot(const std::string& csv_text, PlotKind kind);

void render_plot_file(const std::string& csv_path, PlotKind kind,
                      const std::string& svg_path);

}  // namespace hnls
