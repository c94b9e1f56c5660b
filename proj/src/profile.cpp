#include "dosusy/profile.hpp"

#include "dosusy/errors.hpp"

#include <string>
#include <utility>

namespace dosusy {

void validate_grid(const std::vector<double>& grid, std::size_t min_points)
{
    if (grid.size() < min_points) {
        throw GridError("grid needs at least " + std::to_string(min_points) + " points, got " +
                        std::to_string(grid.size()));
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw GridError("grid not strictly increasing at index " + std::to_string(i));
        }
    }
}

Profile::Profile(std::vector<double> grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values))
{
    validate_grid(grid_, 2);
    if (grid_.size() != values_.size()) {
        throw GridError("profile grid and values differ in length");
    }
}

} // namespace dosusy
