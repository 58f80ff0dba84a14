#include "qrecall/svg_plot.hpp"

#include "qrecall/report.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace qrecall {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 620.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;
constexpr std::size_t kMaxPoints = 2000;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

double to_px_x(double x) { return kLeft + x * (kWidth - kLeft - kRight); }
double to_px_y(double y) { return kHeight - kBottom - y * (kHeight - kTop - kBottom); }

} // namespace

std::string sweep_scatter_svg(const SweepConfig& config, const SweepSummary& summary) {
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"860\" height=\"620\" "
           "viewBox=\"0 0 860 620\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"860\" height=\"620\" fill=\"#ffffff\"/>\n";

    // grid and tick labels every 0.2
    for (int t = 0; t <= 5; ++t) {
        const double v = t / 5.0;
        const double px = to_px_x(v);
        const double py = to_px_y(v);
        svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(to_px_y(0)) + "\" x2=\"" + num(px) +
               "\" y2=\"" + num(to_px_y(1)) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<line x1=\"" + num(to_px_x(0)) + "\" y1=\"" + num(py) + "\" x2=\"" +
               num(to_px_x(1)) + "\" y2=\"" + num(py) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(px) + "\" y=\"" + num(to_px_y(0) + 20.0) +
               "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#333333\">" + num(v) +
               "</text>\n";
        svg += "<text x=\"" + num(to_px_x(0) - 10.0) + "\" y=\"" + num(py + 4.0) +
               "\" font-size=\"12\" text-anchor=\"end\" fill=\"#333333\">" + num(v) + "</text>\n";
    }

    const std::size_t stride = std::max<std::size_t>(1, summary.records.size() / kMaxPoints);
    for (std::size_t i = 0; i < summary.records.size(); i += stride) {
        const SampleRecord& rec = summary.records[i];
        svg += "<circle cx=\"" + num(to_px_x(rec.variance_ratio)) + "\" cy=\"" +
               num(to_px_y(rec.success(config.metric))) +
               "\" r=\"2\" fill=\"#4878a8\" fill-opacity=\"0.35\"/>\n";
    }

    std::string polyline;
    for (std::size_t b = 0; b < summary.bin_centers.size(); ++b) {
        if (summary.bin_counts[b] == 0) continue;
        if (!polyline.empty()) polyline += ' ';
        polyline += num(to_px_x(summary.bin_centers[b])) + "," + num(to_px_y(summary.bin_means[b]));
    }
    if (!polyline.empty()) {
        svg += "<polyline points=\"" + polyline +
               "\" fill=\"none\" stroke=\"#d07020\" stroke-width=\"2\"/>\n";
    }

    if (summary.fit_on_bins) {
        // draw the fit only where it stays inside the unit box
        const RegressionFit& fit = *summary.fit_on_bins;
        double x0 = 0.0, x1 = 1.0;
        if (fit.slope != 0.0) {
            const double x_at_y0 = (0.0 - fit.intercept) / fit.slope;
            const double x_at_y1 = (1.0 - fit.intercept) / fit.slope;
            const double lo = std::min(x_at_y0, x_at_y1);
            const double hi = std::max(x_at_y0, x_at_y1);
            x0 = std::max(x0, lo);
            x1 = std::min(x1, hi);
        } else if (fit.intercept < 0.0 || fit.intercept > 1.0) {
            x1 = x0 - 1.0; // flat line outside the box; skip
        }
        if (x0 < x1) {
            svg += "<line x1=\"" + num(to_px_x(x0)) + "\" y1=\"" +
                   num(to_px_y(fit.intercept + fit.slope * x0)) + "\" x2=\"" + num(to_px_x(x1)) +
                   "\" y2=\"" + num(to_px_y(fit.intercept + fit.slope * x1)) +
                   "\" stroke=\"#b03030\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
        }
    }

    svg += "<rect x=\"" + num(to_px_x(0)) + "\" y=\"" + num(to_px_y(1)) + "\" width=\"" +
           num(to_px_x(1) - to_px_x(0)) + "\" height=\"" + num(to_px_y(0) - to_px_y(1)) +
           "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    svg += "<text x=\"" + num((to_px_x(0) + to_px_x(1)) / 2.0) + "\" y=\"" +
           num(kHeight - 25.0) + "\" font-size=\"14\" text-anchor=\"middle\" fill=\"#000000\">"
           "variance ratio</text>\n";
    svg += "<text x=\"18\" y=\"" + num((to_px_y(0) + to_px_y(1)) / 2.0) +
           "\" font-size=\"14\" text-anchor=\"middle\" fill=\"#000000\" transform=\"rotate(-90 18 " +
           num((to_px_y(0) + to_px_y(1)) / 2.0) + ")\">success " + metric_name(config.metric) +
           "</text>\n";
    svg += "<text x=\"" + num(kWidth / 2.0) + "\" y=\"28\" font-size=\"15\" "
           "text-anchor=\"middle\" fill=\"#000000\">N=" + std::to_string(config.grover.n) +
           ", marked=" + std::to_string(config.grover.marked) +
           ", iterations=" + std::to_string(iteration_count(config.grover.n, config.grover.schedule)) +
           ", samples=" + std::to_string(config.num_samples) + "</text>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace qrecall
