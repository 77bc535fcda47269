#pragma once

#include <string>
#include <vector>

namespace foulab {

/// One labeled polyline of a line chart.
struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Hand-rendered line chart (fixed 800x600 viewBox, polylines + axis ticks).
/// Output bytes are a pure function of the inputs.
std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<SvgSeries>& series);

/// Histogram of samples with a normal density overlay of the given variance.
std::string render_histogram(const std::string& title, const std::vector<double>& samples,
                             double overlay_variance, int bins = 40);

}  // namespace foulab
