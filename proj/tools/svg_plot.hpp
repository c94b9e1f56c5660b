#pragma once

#include <string>
#include <vector>

namespace svgplot {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct Panel {
    std::string title;
    std::string xlabel;
    std::string ylabel;
    std::vector<Series> series;
};

// Lays panels out row-major in a grid with `columns` columns.
std::string render(const std::vector<Panel>& panels, int columns, const std::string& heading);

} // namespace svgplot
