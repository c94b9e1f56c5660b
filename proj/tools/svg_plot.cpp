#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace svgplot {
namespace {

constexpr double kPanelW = 420.0;
constexpr double kPanelH = 300.0;
constexpr double kMarginL = 64.0;
constexpr double kMarginR = 16.0;
constexpr double kMarginT = 34.0;
constexpr double kMarginB = 44.0;
constexpr double kHeading = 30.0;

const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", std::abs(v) < 1e-12 ? 0.0 : v);
    return buf;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

// Rounds the data range outward to a step from the 1-2-5 sequence.
Range nice_range(double lo, double hi, double& step)
{
    if (!(hi > lo)) {
        const double pad = std::abs(lo) > 0 ? 0.1 * std::abs(lo) : 1.0;
        lo -= pad;
        hi += pad;
    }
    const double raw = (hi - lo) / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double frac = raw / mag;
    step = (frac <= 1.0 ? 1.0 : frac <= 2.0 ? 2.0 : frac <= 5.0 ? 5.0 : 10.0) * mag;
    return {std::floor(lo / step) * step, std::ceil(hi / step) * step};
}

void draw_panel(std::ostringstream& os, const Panel& panel, double ox, double oy)
{
    double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
    for (const auto& s : panel.series) {
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    if (!std::isfinite(xmin)) {
        xmin = ymin = 0.0;
        xmax = ymax = 1.0;
    }
    double xstep = 1.0, ystep = 1.0;
    const Range xr = nice_range(xmin, xmax, xstep);
    const Range yr = nice_range(ymin, ymax, ystep);

    const double px0 = ox + kMarginL, px1 = ox + kPanelW - kMarginR;
    const double py0 = oy + kPanelH - kMarginB, py1 = oy + kMarginT;
    auto sx = [&](double x) { return px0 + (x - xr.lo) / (xr.hi - xr.lo) * (px1 - px0); };
    auto sy = [&](double y) { return py0 + (y - yr.lo) / (yr.hi - yr.lo) * (py1 - py0); };

    os << "<g>\n";
    os << "<rect x=\"" << num(px0) << "\" y=\"" << num(py1) << "\" width=\"" << num(px1 - px0)
       << "\" height=\"" << num(py0 - py1) << "\" fill=\"none\" stroke=\"#000\"/>\n";

    for (double t = xr.lo; t <= xr.hi + 0.5 * xstep; t += xstep) {
        const double x = sx(t);
        os << "<line x1=\"" << num(x) << "\" y1=\"" << num(py0) << "\" x2=\"" << num(x) << "\" y2=\""
           << num(py0 + 4) << "\" stroke=\"#000\"/>\n";
        os << "<text x=\"" << num(x) << "\" y=\"" << num(py0 + 16) << "\" text-anchor=\"middle\">"
           << tick_label(t) << "</text>\n";
    }
    for (double t = yr.lo; t <= yr.hi + 0.5 * ystep; t += ystep) {
        const double y = sy(t);
        os << "<line x1=\"" << num(px0 - 4) << "\" y1=\"" << num(y) << "\" x2=\"" << num(px0) << "\" y2=\""
           << num(y) << "\" stroke=\"#000\"/>\n";
        os << "<text x=\"" << num(px0 - 6) << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">"
           << tick_label(t) << "</text>\n";
    }

    os << "<text x=\"" << num(0.5 * (px0 + px1)) << "\" y=\"" << num(oy + 20)
       << "\" text-anchor=\"middle\" font-weight=\"bold\">" << escape(panel.title) << "</text>\n";
    os << "<text x=\"" << num(0.5 * (px0 + px1)) << "\" y=\"" << num(oy + kPanelH - 8)
       << "\" text-anchor=\"middle\">" << escape(panel.xlabel) << "</text>\n";
    os << "<text transform=\"translate(" << num(ox + 14) << "," << num(0.5 * (py0 + py1))
       << ") rotate(-90)\" text-anchor=\"middle\">" << escape(panel.ylabel) << "</text>\n";

    int k = 0;
    for (const auto& s : panel.series) {
        const char* color = kColors[k % 5];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if (!first) os << ' ';
            os << num(sx(s.x[i])) << ',' << num(sy(s.y[i]));
            first = false;
        }
        os << "\"/>\n";
        const double ly = py1 + 14 + 16 * k;
        os << "<line x1=\"" << num(px1 - 110) << "\" y1=\"" << num(ly - 4) << "\" x2=\"" << num(px1 - 90)
           << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        os << "<text x=\"" << num(px1 - 86) << "\" y=\"" << num(ly) << "\">" << escape(s.label) << "</text>\n";
        ++k;
    }
    os << "</g>\n";
}

} // namespace

std::string render(const std::vector<Panel>& panels, int columns, const std::string& heading)
{
    columns = std::max(columns, 1);
    const int rows = (static_cast<int>(panels.size()) + columns - 1) / columns;
    const double width = columns * kPanelW;
    const double height = kHeading + rows * kPanelH;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
       << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height)
       << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
    os << "<text x=\"" << num(width / 2) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
       << escape(heading) << "</text>\n";
    for (std::size_t i = 0; i < panels.size(); ++i) {
        const int r = static_cast<int>(i) / columns;
        const int c = static_cast<int>(i) % columns;
        draw_panel(os, panels[i], c * kPanelW, kHeading + r * kPanelH);
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace svgplot
