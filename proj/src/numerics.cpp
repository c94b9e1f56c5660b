#include "dosusy/numerics.hpp"

#include "dosusy/errors.hpp"
#include "dosusy/richardson.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>

namespace dosusy::numerics {

namespace {

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15_panel(const RealFunction& f, double a, double b)
{
    double error = 0;
    // max_depth = 0: a single Kronrod panel, error = |K15 - G7|.
    const double value =
        boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &error);
    return {a, b, value, error};
}

bool is_uniform(std::span<const double> grid)
{
    const double h = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (std::abs((grid[i] - grid[i - 1]) - h) > 1e-9 * std::max(std::abs(h), 1e-300) +
                                                        1e-12 * std::abs(grid[i])) {
            return false;
        }
    }
    return true;
}

constexpr double kRescaleAbove = 1e200;

// Box discretization shared by the node counter and the matcher.
struct Box {
    double h;
    std::vector<double> potential;
};

Box make_box(const RealFunction& v, const ShootingConfig& cfg)
{
    if (!(cfg.x_min < cfg.x_max)) {
        throw DomainError("shooting: x_min must be below x_max");
    }
    if (cfg.points < 3 || cfg.points % 2 == 0) {
        throw GridError("shooting: point count must be odd and >= 3");
    }
    Box box;
    box.h = (cfg.x_max - cfg.x_min) / (cfg.points - 1);
    box.potential.resize(static_cast<std::size_t>(cfg.points));
    for (int i = 0; i < cfg.points; ++i) {
        box.potential[static_cast<std::size_t>(i)] = v(cfg.x_min + i * box.h);
    }
    return box;
}

// Sign changes of the left-started Numerov solution over the open box.
int node_count(const Box& box, double energy)
{
    const double k = box.h * box.h / 12.0;
    const auto n = box.potential.size();
    double prev = 0.0;
    double curr = 1e-20;
    int nodes = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double g_prev = box.potential[i - 1] - energy;
        const double g_curr = box.potential[i] - energy;
        const double g_next = box.potential[i + 1] - energy;
        const double next =
            (2.0 * (1.0 + 5.0 * k * g_curr) * curr - (1.0 - k * g_prev) * prev) / (1.0 - k * g_next);
        if (i + 2 < n && ((next < 0.0 && curr > 0.0) || (next > 0.0 && curr < 0.0))) {
            ++nodes;
        }
        prev = curr;
        curr = next;
        if (std::abs(curr) > kRescaleAbove) {
            prev /= kRescaleAbove;
            curr /= kRescaleAbove;
        }
    }
    return nodes;
}

// Values at m-1, m, m+1 of a solution started at one wall and marched inward.
std::array<double, 3> march_to_middle(const Box& box, double energy, bool from_left)
{
    const double k = box.h * box.h / 12.0;
    const auto n = static_cast<long>(box.potential.size());
    const long m = n / 2;
    auto g = [&](long i) { return box.potential[static_cast<std::size_t>(i)] - energy; };

    const long start = from_left ? 0 : n - 1;
    const long step = from_left ? 1 : -1;
    const long stop = from_left ? m + 1 : m - 1;

    std::array<double, 3> out{};  // indexed by (i - (m-1))
    auto record = [&](long i, double u) {
        if (i >= m - 1 && i <= m + 1) {
            out[static_cast<std::size_t>(i - (m - 1))] = u;
        }
    };
    double prev = 0.0;
    double curr = 1e-20;
    record(start, prev);
    record(start + step, curr);
    for (long i = start + step; i != stop; i += step) {
        const double next =
            (2.0 * (1.0 + 5.0 * k * g(i)) * curr - (1.0 - k * g(i - step)) * prev) /
            (1.0 - k * g(i + step));
        prev = curr;
        curr = next;
        record(i + step, curr);
        if (std::abs(curr) > kRescaleAbove) {
            prev /= kRescaleAbove;
            curr /= kRescaleAbove;
            for (auto& v : out) {
                v /= kRescaleAbove;
            }
        }
    }
    return out;
}

// Wronskian mismatch of the two inward solutions; zero exactly at a level.
double mismatch(const Box& box, double energy)
{
    const auto left = march_to_middle(box, energy, true);
    const auto right = march_to_middle(box, energy, false);
    const double scale = (std::abs(left[1]) + std::abs(left[0]) + std::abs(left[2])) *
                         (std::abs(right[1]) + std::abs(right[0]) + std::abs(right[2]));
    const double w = (left[2] - left[0]) * right[1] - (right[2] - right[0]) * left[1];
    return scale > 0.0 ? w / scale : w;
}

} // namespace

QuadratureResult integrate_adaptive(const RealFunction& f, double a, double b, double tol,
                                    int max_subdivisions)
{
    if (!(tol > 0.0)) {
        throw DomainError("integrate_adaptive: tolerance must be positive");
    }
    if (!(a <= b)) {
        throw DomainError("integrate_adaptive: need a <= b");
    }
    if (a == b) {
        return {0.0, 0.0, 1};
    }

    std::priority_queue<Panel> panels;
    panels.push(gk15_panel(f, a, b));
    double error = panels.top().error;
    int count = 1;

    while (error > tol) {
        if (count >= max_subdivisions) {
            throw ConvergenceError("integrate_adaptive: tolerance " + std::to_string(tol) +
                                   " not reached in " + std::to_string(count) +
                                   " subdivisions (estimate " + std::to_string(error) + ")");
        }
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            throw ConvergenceError("integrate_adaptive: panel width underflow near " +
                                   std::to_string(worst.a));
        }
        const Panel left = gk15_panel(f, worst.a, mid);
        const Panel right = gk15_panel(f, mid, worst.b);
        panels.push(left);
        panels.push(right);
        ++count;
        error += left.error + right.error - worst.error;
    }

    double value = 0.0;
    double err = 0.0;
    while (!panels.empty()) {
        value += panels.top().value;
        err += panels.top().error;
        panels.pop();
    }
    return {value, err, count};
}

double derivative(const RealFunction& f, double x, int order, double h0)
{
    if (order != 1 && order != 2) {
        throw DomainError("derivative: order must be 1 or 2");
    }
    const double d = richardson_derivative(f, x, order, h0);
    if (std::isnan(d) && h0 < 1e-10 * std::max(1.0, std::abs(x))) {
        throw ConvergenceError("derivative: step underflow at x=" + std::to_string(x));
    }
    return d;
}

Profile numerov_zero_energy(const RealFunction& potential, std::span<const double> grid,
                            double u0, double u1)
{
    std::vector<double> xs(grid.begin(), grid.end());
    validate_grid(xs, 3);
    if (!is_uniform(grid)) {
        throw GridError("numerov_zero_energy: grid must be uniform");
    }
    const double h = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
    const double k = h * h / 12.0;

    // c_i u_i with c_i = 1 - h^2 U_i / 12; U is skipped where u is exactly 0.
    auto weighted = [&](std::size_t i, double u) {
        return u == 0.0 ? 0.0 : (1.0 - k * potential(xs[i])) * u;
    };

    std::vector<double> u(xs.size());
    u[0] = u0;
    u[1] = u1;
    double cu_prev = weighted(0, u0);
    double pot_curr = potential(xs[1]);
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        const double pot_next = potential(xs[i + 1]);
        const double u_next =
            (2.0 * (1.0 + 5.0 * k * pot_curr) * u[i] - cu_prev) / (1.0 - k * pot_next);
        if (!std::isfinite(u_next) || std::abs(u_next) > 1e300) {
            throw OverflowError("numerov_zero_energy: |u| exceeded 1e300 at x=" +
                                std::to_string(xs[i + 1]));
        }
        u[i + 1] = u_next;
        cu_prev = (1.0 - k * pot_curr) * u[i];
        pot_curr = pot_next;
    }
    return Profile(std::move(xs), std::move(u));
}

int count_states_below(const RealFunction& potential, const ShootingConfig& config,
                       double energy)
{
    return node_count(make_box(potential, config), energy);
}

std::vector<double> shooting_bound_states(const RealFunction& potential,
                                          const ShootingConfig& config, int max_states)
{
    if (!(config.e_lo < config.e_hi)) {
        throw DomainError("shooting: need e_lo < e_hi");
    }
    if (!(config.tol > 0.0)) {
        throw DomainError("shooting: tolerance must be positive");
    }
    const Box box = make_box(potential, config);
    const int n_lo = node_count(box, config.e_lo);
    const int n_hi = node_count(box, config.e_hi);
    if (max_states > 0 && n_lo == n_hi) {
        throw ConvergenceError("shooting: bracket [" + std::to_string(config.e_lo) + ", " +
                               std::to_string(config.e_hi) + "] holds no bound state");
    }

    std::vector<double> levels;
    for (int index = n_lo; index < n_hi && static_cast<int>(levels.size()) < max_states; ++index) {
        // Isolate level `index`: count(a) == index, count(b) == index + 1.
        double a = config.e_lo;
        double b = config.e_hi;
        for (int it = 0; it < 200; ++it) {
            const int ca = node_count(box, a);
            const int cb = node_count(box, b);
            if (ca == index && cb == index + 1) {
                break;
            }
            const double mid = 0.5 * (a + b);
            if (node_count(box, mid) <= index) {
                a = mid;
            } else {
                b = mid;
            }
        }

        double ga = mismatch(box, a);
        const double gb = mismatch(box, b);
        const bool wronskian_bracket = (ga < 0.0) != (gb < 0.0);
        while (b - a > config.tol) {
            const double mid = 0.5 * (a + b);
            if (wronskian_bracket) {
                const double gm = mismatch(box, mid);
                if ((gm < 0.0) == (ga < 0.0)) {
                    a = mid;
                    ga = gm;
                } else {
                    b = mid;
                }
            } else if (node_count(box, mid) <= index) {
                a = mid;
            } else {
                b = mid;
            }
        }
        levels.push_back(0.5 * (a + b));
    }
    return levels;
}

std::vector<double> linspace(double a, double b, int n)
{
    if (n < 2) {
        throw GridError("linspace: need at least 2 points");
    }
    std::vector<double> out(static_cast<std::size_t>(n));
    const double step = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = a + step * i;
    }
    out.back() = b;
    return out;
}

std::vector<double> logspace(double a, double b, int n)
{
    if (!(a > 0.0 && b > 0.0)) {
        throw DomainError("logspace: endpoints must be positive");
    }
    auto exps = linspace(std::log(a), std::log(b), n);
    for (auto& e : exps) {
        e = std::exp(e);
    }
    exps.front() = a;
    exps.back() = b;
    return exps;
}

} // namespace dosusy::numerics
