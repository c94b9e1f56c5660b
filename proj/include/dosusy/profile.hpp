#pragma once

#include <cstddef>
#include <vector>

namespace dosusy {

/// A sampled function: strictly increasing abscissae with one value each.
class Profile {
public:
    /// Throws GridError unless grid.size() >= 2, sizes agree and the grid is
    /// strictly increasing.
    Profile(std::vector<double> grid, std::vector<double> values);

    const std::vector<double>& grid() const noexcept { return grid_; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return grid_.size(); }

private:
    std::vector<double> grid_;
    std::vector<double> values_;
};

/// Throws GridError unless `grid` has at least `min_points` strictly
/// increasing entries.
void validate_grid(const std::vector<double>& grid, std::size_t min_points = 2);

} // namespace dosusy
