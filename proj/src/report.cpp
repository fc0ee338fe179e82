#include "deabench/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "deabench/errors.hpp"

namespace deabench {

std::string markdown_year_table(const YearTable &table, const std::string &title, int precision,
                                int levels) {
    std::ostringstream out;
    out << "## " << title << "\n\n";
    out << "| region |";
    for (int y : table.years()) out << ' ' << y << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < table.years().size(); ++i) out << "---|";
    out << '\n';

    // Per-column min/max drive the bucket scale, like the source legend.
    std::vector<std::pair<double, double>> ranges;
    for (int y : table.years()) {
        auto col = table.column(y);
        auto [lo, hi] = std::minmax_element(col.begin(), col.end());
        ranges.emplace_back(*lo, *hi);
    }

    for (const auto &row : table.rows()) {
        out << "| " << row << " |";
        std::size_t c = 0;
        for (int y : table.years()) {
            const double v = table.at(row, y);
            out << ' ' << format_fixed(v, precision) << " (b"
                << color_bucket(v, ranges[c].first, ranges[c].second, levels) << ") |";
            ++c;
        }
        out << '\n';
    }
    out << "\nLegend: b0 = column minimum (intense red) .. b" << (levels - 1)
        << " = column maximum (intense green).\n";
    return out.str();
}

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 540.0;
constexpr double kMargin = 60.0;

std::string num(double v) { return format_fixed(v, 2); }

std::string xml_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '\'': out += "&apos;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

struct Scale {
    double lo, hi, pix0, pix1;
    double operator()(double v) const {
        if (hi == lo) return 0.5 * (pix0 + pix1);
        return pix0 + (v - lo) / (hi - lo) * (pix1 - pix0);
    }
};

void svg_header(std::ostringstream &out, const std::string &title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
        << xml_escape(title) << "</text>\n";
}

void svg_axes(std::ostringstream &out, const std::string &x_label, const std::string &y_label) {
    out << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\""
        << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
        << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << xml_escape(x_label) << "</text>\n";
    out << "<text x=\"16\" y=\"" << kHeight / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 "
        << kHeight / 2 << ")\">" << xml_escape(y_label) << "</text>\n";
}

} // namespace

std::string svg_scatter(const std::vector<ScatterPoint> &points, double split_x, double split_y,
                        const std::string &x_label, const std::string &y_label,
                        const std::string &title) {
    if (points.empty()) throw validation_error("svg_scatter: no points");
    double xlo = points[0].x, xhi = points[0].x, ylo = points[0].y, yhi = points[0].y;
    for (const auto &p : points) {
        xlo = std::min(xlo, p.x);
        xhi = std::max(xhi, p.x);
        ylo = std::min(ylo, p.y);
        yhi = std::max(yhi, p.y);
    }
    xlo = std::min(xlo, split_x);
    xhi = std::max(xhi, split_x);
    ylo = std::min(ylo, split_y);
    yhi = std::max(yhi, split_y);
    const double xpad = (xhi - xlo) * 0.05 + 1e-12;
    const double ypad = (yhi - ylo) * 0.05 + 1e-12;
    const Scale sx{xlo - xpad, xhi + xpad, kMargin, kWidth - kMargin};
    const Scale sy{ylo - ypad, yhi + ypad, kHeight - kMargin, kMargin};

    std::ostringstream out;
    svg_header(out, title);
    svg_axes(out, x_label, y_label);
    out << "<line x1=\"" << num(sx(split_x)) << "\" y1=\"" << kMargin << "\" x2=\""
        << num(sx(split_x)) << "\" y2=\"" << kHeight - kMargin
        << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    out << "<line x1=\"" << kMargin << "\" y1=\"" << num(sy(split_y)) << "\" x2=\""
        << kWidth - kMargin << "\" y2=\"" << num(sy(split_y))
        << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    for (const auto &p : points) {
        out << "<circle cx=\"" << num(sx(p.x)) << "\" cy=\"" << num(sy(p.y))
            << "\" r=\"3\" fill=\"steelblue\"/>\n";
        out << "<text x=\"" << num(sx(p.x) + 5) << "\" y=\"" << num(sy(p.y) - 4)
            << "\" font-family=\"sans-serif\" font-size=\"9\">" << xml_escape(p.label)
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string svg_line_chart(const std::vector<int> &years, const std::vector<double> &values,
                           const std::string &y_label, const std::string &title) {
    if (years.empty() || years.size() != values.size())
        throw validation_error("svg_line_chart: years/values mismatch");
    auto [vlo, vhi] = std::minmax_element(values.begin(), values.end());
    const double pad = (*vhi - *vlo) * 0.1 + 1e-12;
    const Scale sx{static_cast<double>(years.front()), static_cast<double>(years.back()),
                   kMargin, kWidth - kMargin};
    const Scale sy{*vlo - pad, *vhi + pad, kHeight - kMargin, kMargin};

    std::ostringstream out;
    svg_header(out, title);
    svg_axes(out, "year", y_label);
    out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < years.size(); ++i) {
        if (i) out << ' ';
        out << num(sx(years[i])) << ',' << num(sy(values[i]));
    }
    out << "\"/>\n";
    for (std::size_t i = 0; i < years.size(); ++i) {
        out << "<circle cx=\"" << num(sx(years[i])) << "\" cy=\"" << num(sy(values[i]))
            << "\" r=\"3\" fill=\"steelblue\"/>\n";
        out << "<text x=\"" << num(sx(years[i])) << "\" y=\"" << kHeight - kMargin + 16
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" << years[i]
            << "</text>\n";
        out << "<text x=\"" << num(sx(years[i])) << "\" y=\"" << num(sy(values[i]) - 8)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"9\">"
            << format_fixed(values[i], 3) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace deabench
