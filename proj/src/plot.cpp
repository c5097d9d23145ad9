#include "hnls/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "hnls/csv.hpp"
#include "hnls/harness.hpp"

namespace hnls {

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 480;
constexpr int kLeft = 80;
constexpr int kRight = 600;
constexpr int kTop = 40;
constexpr int kBottom = 420;

std::string fmt(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6g", v);
    return buffer;
}

size_t find_column(const CsvTable& table, const std::string& name) {
    for (size_t j = 0; j < table.header.size(); ++j) {
        if (table.header[j] == name) return j;
    }
    throw CsvError("table has no '" + name + "' column");
}

struct Point {
    double x, y;      // log10 coordinates
    std::string tag;  // scheme name for the cpu kind
};

struct Mapper {
    double x_min, x_max, y_min, y_max;
    double px(double x) const {
        return kLeft + (x - x_min) / (x_max - x_min) * (kRight - kLeft);
    }
    double py(double y) const {
        return kBottom - (y - y_min) / (y_max - y_min) * (kBottom - kTop);
    }
};

void pad(double& lo, double& hi) {
    if (hi - lo < 1e-12) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double margin = 0.05 * (hi - lo);
    lo -= margin;
    hi += margin;
}

void draw_axes(std::ostringstream& svg, const Mapper& map, const std::string& x_label,
               const std::string& y_label) {
    svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kRight - kLeft
        << "\" height=\"" << kBottom - kTop
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (int d = static_cast<int>(std::ceil(map.x_min)); d <= std::floor(map.x_max); ++d) {
        const double x = map.px(d);
        svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << kBottom << "\" x2=\"" << fmt(x)
            << "\" y2=\"" << kBottom + 6 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt(x) << "\" y=\"" << kBottom + 22
            << "\" text-anchor=\"middle\" font-size=\"12\">1e" << d << "</text>\n";
    }
    for (int d = static_cast<int>(std::ceil(map.y_min)); d <= std::floor(map.y_max); ++d) {
        const double y = map.py(d);
        svg << "<line x1=\"" << kLeft - 6 << "\" y1=\"" << fmt(y) << "\" x2=\"" << kLeft
            << "\" y2=\"" << fmt(y) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << kLeft - 10 << "\" y=\"" << fmt(y + 4)
            << "\" text-anchor=\"end\" font-size=\"12\">1e" << d << "</text>\n";
    }
    svg << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kHeight - 14
        << "\" text-anchor=\"middle\" font-size=\"14\">" << x_label << "</text>\n";
    svg << "<text x=\"18\" y=\"" << (kTop + kBottom) / 2
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 18 "
        << (kTop + kBottom) / 2 << ")\">" << y_label << "</text>\n";
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

std::string render_plot(const std::string& csv_text, PlotKind kind) {
    const CsvTable table = parse_csv(csv_text);
    if (table.rows.empty()) {
        throw CsvError("plot: table has no data rows");
    }

    std::vector<Point> points;
    std::string x_label, y_label;
    size_t scheme_col = SIZE_MAX;

    if (kind == PlotKind::order) {
        const size_t cx = find_column(table, "tau");
        const size_t cy = find_column(table, "l2_error");
        x_label = "tau";
        y_label = "l2_error";
        for (size_t r = 0; r < table.rows.size(); ++r) {
            const double x = cell_as_double(table, r, cx);
            const double y = cell_as_double(table, r, cy);
            if (std::isfinite(x) && std::isfinite(y) && x > 0.0 && y > 0.0) {
                points.push_back({std::log10(x), std::log10(y), ""});
            }
        }
    } else {
        const size_t cx = find_column(table, "cpu_seconds");
        size_t cy;
        try {
            cy = find_column(table, "final_error");
        } catch (const CsvError&) {
            cy = find_column(table, "l2_error");
        }
        x_label = "cpu_seconds";
        y_label = table.header[cy];
        for (size_t j = 0; j < table.header.size(); ++j) {
            if (table.header[j] == "scheme") scheme_col = j;
        }
        for (size_t r = 0; r < table.rows.size(); ++r) {
            const double x = cell_as_double(table, r, cx);
            const double y = cell_as_double(table, r, cy);
            if (std::isfinite(x) && std::isfinite(y) && x > 0.0 && y > 0.0) {
                points.push_back({std::log10(x), std::log10(y),
                                  scheme_col == SIZE_MAX ? "" : table.rows[r][scheme_col]});
            }
        }
    }

    if (points.empty()) {
        throw CsvError("plot: no plottable (finite, positive) rows");
    }

    Mapper map{points[0].x, points[0].x, points[0].y, points[0].y};
    for (const Point& p : points) {
        map.x_min = std::min(map.x_min, p.x);
        map.x_max = std::max(map.x_max, p.x);
        map.y_min = std::min(map.y_min, p.y);
        map.y_max = std::max(map.y_max, p.y);
    }
    pad(map.x_min, map.x_max);
    pad(map.y_min, map.y_max);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    draw_axes(svg, map, x_label, y_label);

    if (kind == PlotKind::order) {
        std::vector<double> taus, errors;
        for (const Point& p : points) {
            taus.push_back(std::pow(10.0, p.x));
            errors.push_back(std::pow(10.0, p.y));
        }
        const double slope = fit_loglog_slope(taus, errors);
        if (std::isfinite(slope) && points.size() >= 2) {
            const Point& a = points.front();
            const Point& b = points.back();
            svg << "<line x1=\"" << fmt(map.px(a.x)) << "\" y1=\"" << fmt(map.py(a.y))
                << "\" x2=\"" << fmt(map.px(b.x)) << "\" y2=\""
                << fmt(map.py(a.y + slope * (b.x - a.x)))
                << "\" stroke=\"#888888\" stroke-dasharray=\"5,4\"/>\n";
        }
        for (const Point& p : points) {
            svg << "<circle cx=\"" << fmt(map.px(p.x)) << "\" cy=\"" << fmt(map.py(p.y))
                << "\" r=\"4\" fill=\"" << kPalette[0] << "\"/>\n";
        }
        char label[64];
        std::snprintf(label, sizeof(label), "slope = %.3f", slope);
        svg << "<text x=\"" << kLeft + 12 << "\" y=\"" << kTop + 20
            << "\" font-size=\"14\">" << label << "</text>\n";
    } else {
        std::vector<std::string> schemes;
        for (const Point& p : points) {
            if (std::find(schemes.begin(), schemes.end(), p.tag) == schemes.end()) {
                schemes.push_back(p.tag);
            }
        }
        for (const Point& p : points) {
            const size_t idx =
                std::find(schemes.begin(), schemes.end(), p.tag) - schemes.begin();
            svg << "<circle cx=\"" << fmt(map.px(p.x)) << "\" cy=\"" << fmt(map.py(p.y))
                << "\" r=\"4\" fill=\"" << kPalette[idx % 6] << "\"/>\n";
        }
        for (size_t s = 0; s < schemes.size(); ++s) {
            if (schemes[s].empty()) continue;
            svg << "<text x=\"" << kRight - 150 << "\" y=\"" << kTop + 20 + 18 * s
                << "\" font-size=\"12\" fill=\"" << kPalette[s % 6] << "\">" << schemes[s]
                << "</text>\n";
        }
    }

    svg << "</svg>\n";
    return svg.str();
}

void render_plot_file(const std::string& csv_path, PlotKind kind,
                      const std::string& svg_path) {
    std::ifstream in(csv_path, std::ios::binary);
    if (!in) throw CsvError("cannot open CSV file: " + csv_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string svg = render_plot(buffer.str(), kind);
    std::ofstream out(svg_path, std::ios::binary);
    if (!out) throw CsvError("cannot write SVG file: " + svg_path);
    out << svg;
}

}  // namespace hnls
