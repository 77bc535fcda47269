#include "foulab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace foulab {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 600;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 30;
constexpr int kMarginTop = 50;
constexpr int kMarginBottom = 60;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct Range {
    double lo = 0.0, hi = 1.0;
    double clamp(double v) const { return std::min(hi, std::max(lo, v)); }
};

Range nice_range(double lo, double hi) {
    if (!(hi > lo)) hi = lo + 1.0;
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

double map_x(double v, const Range& r) {
    return kMarginLeft + (v - r.lo) / (r.hi - r.lo) * (kWidth - kMarginLeft - kMarginRight);
}

double map_y(double v, const Range& r) {
    return kHeight - kMarginBottom -
           (v - r.lo) / (r.hi - r.lo) * (kHeight - kMarginTop - kMarginBottom);
}

void axes(std::ostringstream& out, const Range& xr, const Range& yr, const std::string& title,
          const std::string& x_label, const std::string& y_label) {
    out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    out << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-size=\"18\" "
           "font-family=\"sans-serif\">" << title << "</text>\n";
    const double x0 = kMarginLeft, x1 = kWidth - kMarginRight;
    const double y0 = kHeight - kMarginBottom, y1 = kMarginTop;
    out << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1)
        << "\" y2=\"" << num(y0) << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x0)
        << "\" y2=\"" << num(y1) << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double fx = xr.lo + (xr.hi - xr.lo) * i / 5.0;
        const double px = map_x(fx, xr);
        out << "<line x1=\"" << num(px) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(px)
            << "\" y2=\"" << num(y0 + 5) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << num(px) << "\" y=\"" << num(y0 + 20)
            << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">"
            << num(fx) << "</text>\n";
        const double fy = yr.lo + (yr.hi - yr.lo) * i / 5.0;
        const double py = map_y(fy, yr);
        out << "<line x1=\"" << num(x0 - 5) << "\" y1=\"" << num(py) << "\" x2=\"" << num(x0)
            << "\" y2=\"" << num(py) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << num(x0 - 8) << "\" y=\"" << num(py + 4)
            << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">" << num(fy)
            << "</text>\n";
    }
    out << "<text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num(kHeight - 15)
        << "\" text-anchor=\"middle\" font-size=\"14\" font-family=\"sans-serif\">" << x_label
        << "</text>\n";
    out << "<text x=\"18\" y=\"" << num((y0 + y1) / 2)
        << "\" text-anchor=\"middle\" font-size=\"14\" font-family=\"sans-serif\" "
           "transform=\"rotate(-90 18 " << num((y0 + y1) / 2) << ")\">" << y_label
        << "</text>\n";
}

}  // namespace

std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<SvgSeries>& series) {
    if (series.empty()) throw std::invalid_argument("render_line_chart: no series");
    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size() || s.x.empty())
            throw std::invalid_argument("render_line_chart: malformed series");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            xlo = std::min(xlo, s.x[i]);
            xhi = std::max(xhi, s.x[i]);
            ylo = std::min(ylo, s.y[i]);
            yhi = std::max(yhi, s.y[i]);
        }
    }
    const Range xr = nice_range(xlo, xhi);
    const Range yr = nice_range(ylo, yhi);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\">\n";
    axes(out, xr, yr, title, x_label, y_label);
    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[si % 6]
            << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.y[i])) continue;
            out << num(map_x(s.x[i], xr)) << ',' << num(map_y(s.y[i], yr)) << ' ';
        }
        out << "\"/>\n";
        const double ly = kMarginTop + 18.0 * static_cast<double>(si);
        out << "<line x1=\"" << num(kWidth - 180) << "\" y1=\"" << num(ly) << "\" x2=\""
            << num(kWidth - 150) << "\" y2=\"" << num(ly) << "\" stroke=\"" << kPalette[si % 6]
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << num(kWidth - 144) << "\" y=\"" << num(ly + 4)
            << "\" font-size=\"13\" font-family=\"sans-serif\">" << s.label << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_histogram(const std::string& title, const std::vector<double>& samples,
                             double overlay_variance, int bins) {
    if (samples.empty()) throw std::invalid_argument("render_histogram: no samples");
    if (bins < 2) throw std::invalid_argument("render_histogram: need >= 2 bins");
    double lo = samples[0], hi = samples[0];
    for (double v : samples) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (!(hi > lo)) hi = lo + 1.0;
    const double bw = (hi - lo) / bins;
    std::vector<double> counts(bins, 0.0);
    for (double v : samples) {
        int b = static_cast<int>((v - lo) / bw);
        if (b == bins) b = bins - 1;
        counts[b] += 1.0;
    }
    // density normalization
    const double nrm = 1.0 / (static_cast<double>(samples.size()) * bw);
    double dmax = 0.0;
    for (double& c : counts) {
        c *= nrm;
        dmax = std::max(dmax, c);
    }
    const double sd = std::sqrt(overlay_variance);
    const double peak = sd > 0.0 ? 1.0 / (sd * 2.5066282746310005) : 0.0;
    dmax = std::max(dmax, peak);

    const Range xr = nice_range(lo, hi);
    const Range yr{0.0, dmax * 1.1};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\">\n";
    axes(out, xr, yr, title, "statistic", "density");
    for (int b = 0; b < bins; ++b) {
        const double x0 = map_x(lo + b * bw, xr);
        const double x1 = map_x(lo + (b + 1) * bw, xr);
        const double y0 = map_y(0.0, yr);
        const double y1 = map_y(counts[b], yr);
        out << "<rect x=\"" << num(x0) << "\" y=\"" << num(y1) << "\" width=\"" << num(x1 - x0)
            << "\" height=\"" << num(y0 - y1) << "\" fill=\"#9ecae1\" stroke=\"#3182bd\"/>\n";
    }
    if (sd > 0.0) {
        out << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" points=\"";
        for (int i = 0; i <= 200; ++i) {
            const double x = xr.lo + (xr.hi - xr.lo) * i / 200.0;
            const double d = std::exp(-0.5 * x * x / (sd * sd)) / (sd * 2.5066282746310005);
            out << num(map_x(x, xr)) << ',' << num(map_y(yr.clamp(d), yr)) << ' ';
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace foulab
