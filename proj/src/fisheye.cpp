#include "dosusy/fisheye.hpp"

#include "dosusy/errors.hpp"
#include "dosusy/numerics.hpp"

#include <cmath>
#include <string>

namespace dosusy::fisheye {

namespace {

constexpr double kHysteresis = 1e-12;

double maxwell_coupling(int l)
{
    return (2.0 * l + 1.0) * (2.0 * l + 3.0);
}

} // namespace

double index_maxwell(double rho, int l)
{
    if (!(rho >= 0.0)) {
        throw DomainError("index_maxwell: rho must be non-negative");
    }
    if (l < 0) {
        throw DomainError("index_maxwell: l must be non-negative");
    }
    return std::sqrt(maxwell_coupling(l)) / ((l + 0.5) * (1.0 + rho * rho));
}

FishEyeFamily::FishEyeFamily(int l, double lambda) : family_(DoParams::nodeless(1.0, l, lambda)) {}

double FishEyeFamily::v_maxwell(double rho) const
{
    if (!(rho >= kRhoMin)) {
        throw DomainError("v_maxwell: rho must be >= 1e-12");
    }
    const double d = 1.0 + rho * rho;
    return maxwell_coupling(l()) / (d * d);
}

double FishEyeFamily::v_lambda(double rho) const
{
    return -family_.u_bosonic_correction(rho);
}

double FishEyeFamily::v_family(double rho) const
{
    return -v_maxwell(rho) - v_lambda(rho);
}

double FishEyeFamily::relative_ratio(double rho) const
{
    return 0.5 * v_lambda(rho) / v_maxwell(rho);
}

double FishEyeFamily::index_iso(double rho, IndexMode mode) const
{
    const double n_m = index_maxwell(rho);
    if (mode == IndexMode::first_order) {
        return n_m * (1.0 + relative_ratio(rho));
    }
    const double v1 = v_family(rho);
    if (!(v1 < 0.0)) {
        throw DomainError("index_iso: V_1 >= 0 at rho=" + std::to_string(rho) +
                          ", exact index undefined");
    }
    return n_m * std::sqrt(-v1 / v_maxwell(rho));
}

std::optional<double> find_inflection(const FishEyeFamily& family, const std::vector<double>& grid,
                                      IndexMode mode)
{
    validate_grid(grid, 100);
    if (!(grid.front() > 0.0) || grid.back() < 1.0) {
        throw GridError("find_inflection: grid must start above 0 and reach rho = 1");
    }
    auto n = [&](double rho) { return family.index_iso(rho, mode); };

    double last_rho = 0.0;
    double last_d2 = 0.0;
    bool have_sign = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double rho = grid[i];
        const double h = (i + 1 < grid.size()) ? grid[i + 1] - rho : rho - grid[i - 1];
        if (rho - 2.0 * h < kRhoMin) {
            continue;
        }
        const double d2 = (-n(rho + 2 * h) + 16.0 * n(rho + h) - 30.0 * n(rho) + 16.0 * n(rho - h) -
                           n(rho - 2 * h)) / (12.0 * h * h);
        if (std::abs(d2) <= kHysteresis) {
            continue;
        }
        if (have_sign && ((d2 > 0.0) != (last_d2 > 0.0))) {
            const double root = last_rho + (rho - last_rho) * last_d2 / (last_d2 - d2);
            if (root <= 1.0) {
                return root;
            }
            return std::nullopt;
        }
        if (rho > 1.0) {
            break;
        }
        last_rho = rho;
        last_d2 = d2;
        have_sign = true;
    }
    return std::nullopt;
}

FigureTable figure_table(int l, double lambda, const std::vector<double>& grid, IndexMode mode)
{
    validate_grid(grid, 2);
    const FishEyeFamily family(l, lambda);
    FigureTable table;
    table.l = l;
    table.lambda = lambda;
    table.grid = grid;
    const auto n = grid.size();
    table.n_maxwell.reserve(n);
    table.n_iso.reserve(n);
    table.ratio_minus_one.reserve(n);
    table.f_bos_squared.reserve(n);
    for (const double rho : grid) {
        const double n_iso = family.index_iso(rho, mode);
        if (!(n_iso > 0.0)) {
            throw DomainError("figure_table: n_iso not positive at rho=" + std::to_string(rho));
        }
        const double f_bos = family.radial_factor_bosonic(rho);
        table.n_maxwell.push_back(family.index_maxwell(rho));
        table.n_iso.push_back(n_iso);
        table.ratio_minus_one.push_back(family.relative_ratio(rho));
        table.f_bos_squared.push_back(f_bos * f_bos);
    }
    return table;
}

std::vector<double> default_figure_grid()
{
    return numerics::linspace(0.01, 3.0, 300);
}

} // namespace dosusy::fisheye
