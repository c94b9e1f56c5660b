#include "dosusy/verify.hpp"

#include "dosusy/errors.hpp"
#include "dosusy/fisheye.hpp"
#include "dosusy/fullline.hpp"
#include "dosusy/isospectral.hpp"
#include "dosusy/kernels.hpp"
#include "dosusy/richardson.hpp"
#include "dosusy/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace dosusy::verify {

namespace {

using numerics::linspace;
using numerics::logspace;

class Recorder {
public:
    Recorder(std::string suite, double scale, std::vector<CheckResult>& out)
        : suite_(std::move(suite)), scale_(scale), out_(out) {}

    void upper_bound(const std::string& name, double residual, double tolerance)
    {
        const double tol = tolerance * scale_;
        out_.push_back({suite_, name, residual, tol, std::isfinite(residual) && residual <= tol});
    }

    void holds(const std::string& name, bool ok)
    {
        out_.push_back({suite_, name, ok ? 0.0 : 1.0, 0.0, ok});
    }

private:
    std::string suite_;
    double scale_;
    std::vector<CheckResult>& out_;
};

// Explicit series for C_p^q(x), independent of the recurrence.
double gegenbauer_series(int p, double q, double x)
{
    double sum = 0.0;
    for (int k = 0; 2 * k <= p; ++k) {
        // (q)_{p-k} / (k! (p-2k)!)
        long double coeff = 1.0L;
        for (int j = 0; j < p - k; ++j) coeff *= q + j;
        for (int j = 2; j <= k; ++j) coeff /= j;
        for (int j = 2; j <= p - 2 * k; ++j) coeff /= j;
        sum += static_cast<double>(((k % 2) ? -coeff : coeff) * std::pow(2.0L * x, p - 2 * k));
    }
    return sum;
}

void run_specfun(Recorder& rec)
{
    double recurrence = 0.0;
    double series = 0.0;
    double parity = 0.0;
    for (const double q : {0.5, 1.5, 2.5}) {
        for (const double x : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            for (int p = 1; p < 10; ++p) {
                const double cm = gegenbauer({p - 1, q, x});
                const double c0 = gegenbauer({p, q, x});
                const double cp = gegenbauer({p + 1, q, x});
                const double lhs = (p + 1) * cp;
                const double rhs = 2.0 * (p + q) * x * c0 - (p + 2.0 * q - 1.0) * cm;
                recurrence = std::max(recurrence, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
            }
            for (int p = 0; p <= 10; ++p) {
                const double c = gegenbauer({p, q, x});
                series = std::max(series, std::abs(c - gegenbauer_series(p, q, x)) / std::max(1.0, std::abs(c)));
                const double mirrored = gegenbauer({p, q, -x}) * ((p % 2) ? -1.0 : 1.0);
                parity = std::max(parity, std::abs(mirrored - c) / std::max(1.0, std::abs(c)));
            }
        }
    }
    rec.upper_bound("gegenbauer three-term recurrence", recurrence, 1e-12);
    rec.upper_bound("gegenbauer vs explicit series", series, 1e-12);
    rec.upper_bound("gegenbauer parity", parity, 1e-14);
    rec.holds("binomial small table", binomial(4, 2) == 6 && binomial(6, 3) == 20 && binomial(22, 11) == 705432);
}

void run_do_core(Recorder& rec)
{
    double log_derivative = 0.0;
    double partner = 0.0;
    double bosonic_route = 0.0;
    for (const double kappa : {0.5, 1.0}) {
        for (int l = 0; l <= 3; ++l) {
            // Extended-precision differentiation: f spans many decades on this window.
            const long double kl = kappa;
            auto f = [=](long double r) { return kernels::radial_factor_f(r, l, kl); };
            auto w = [=](long double r) { return kernels::superpotential_w(r, l, kl); };
            for (const double rho : logspace(0.05, 20.0, 60)) {
                const long double r = rho;
                const long double fp = numerics::richardson_derivative(f, r, 1, 0.2L * r);
                const double wv = superpotential_w(rho, l, kappa);
                log_derivative = std::max(log_derivative, static_cast<double>(std::abs(w(r) + fp / f(r))));
                const double wp = static_cast<double>(numerics::richardson_derivative(w, r, 1, 0.2L * r));
                const double diff = u_plus(rho, l, kappa) - u_minus(rho, l, kappa);
                partner = std::max(partner, std::abs(diff - 2.0 * wp));
                const double route = wv * wv - wp;
                bosonic_route = std::max(bosonic_route, std::abs(route - u_minus(rho, l, kappa)) /
                                                            std::max(1.0, std::abs(route)));
            }
        }
    }
    rec.upper_bound("W = -(ln f)' on [0.05, 20]", log_derivative, 1e-8);
    rec.upper_bound("U+ - U- = 2 W'", partner, 1e-6);
    rec.upper_bound("U- closed form = W^2 - W'", bosonic_route, 1e-8);

    bool coupling = true;
    for (int l = 0; l <= 10; ++l) {
        coupling = coupling && coupling_w(l + 1, 1.0) == (2.0 * l + 1.0) * (2.0 * l + 3.0);
    }
    rec.holds("w(l+1, 1) = (2l+1)(2l+3), l <= 10", coupling);

    double zero_mode = 0.0;
    for (const double kappa : {0.5, 1.0}) {
        for (int l = 0; l <= 2; ++l) {
            zero_mode = std::max(zero_mode, zero_mode_deviation([=](double r) { return u_minus(r, l, kappa); },
                                                                [=](double r) { return radial_factor_f(r, l, kappa); }, l));
        }
    }
    rec.upper_bound("Numerov zero mode of U- matches f", zero_mode, 1e-6);
}

void run_isospectral(Recorder& rec)
{
    double closed = 0.0;
    for (int l = 0; l <= 5; ++l) {
        for (const double rho : logspace(0.01, 50.0, 50)) {
            const double half = i0_closed_half(beta_of_rho(rho, 0.5), l);
            const double one = i0_closed_one(beta_of_rho(rho, 1.0), l);
            closed = std::max(closed, std::abs(half - i0_quadrature(rho, l, 0.5, 1e-12)));
            closed = std::max(closed, std::abs(one - i0_quadrature(rho, l, 1.0, 1e-12)));
        }
    }
    rec.upper_bound("closed-form I0 vs quadrature", closed, 1e-9);

    double riccati = 0.0;
    double shared = 0.0;
    double w_identity = 0.0;
    for (const double kappa : {0.5, 1.0}) {
        for (int l = 0; l <= 2; ++l) {
            for (const double lambda : {0.5, 1.0, 10.0}) {
                const IsoFamily fam(DoParams::nodeless(kappa, l, lambda));
                auto big_w = [&](double r) { return fam.superpotential_general(r); };
                // V reaches ~1e7 near rho = 0.1; differentiate it in extended precision.
                const long double kl = kappa;
                const long double laml = lambda;
                auto v_ext = [&](long double r) { return kernels::v_general(r, l, kl, laml); };
                for (const double rho : linspace(0.1, 10.0, 100)) {
                    const long double r = rho;
                    const long double vp = numerics::richardson_derivative(v_ext, r, 1, 0.1L * r);
                    const long double res =
                        -vp + 2.0L * kernels::superpotential_w(r, l, kl) * v_ext(r) + 1.0L;
                    riccati = std::max(riccati, static_cast<double>(std::abs(res)));

                    const double wp = numerics::derivative(big_w, rho, 1, 0.1 * rho);
                    shared = std::max(shared, std::abs(wp + big_w(rho) * big_w(rho) - u_plus(rho, l, kappa)));
                    w_identity = std::max(w_identity, std::abs(big_w(rho) - (1.0 / fam.v_general(rho) +
                                                                            superpotential_w(rho, l, kappa))));
                }
            }
        }
    }
    rec.upper_bound("-V' + 2 W V + 1 = 0", riccati, 1e-6);
    rec.upper_bound("general and particular W share U+", shared, 1e-6);
    rec.upper_bound("W_general = 1/V + W", w_identity, 1e-12);

    double zero_mode = 0.0;
    for (const double kappa : {0.5, 1.0}) {
        for (int l = 0; l <= 2; ++l) {
            for (const double lambda : {1.0, 10.0}) {
                const IsoFamily fam(DoParams::nodeless(kappa, l, lambda));
                zero_mode = std::max(zero_mode, zero_mode_deviation([&](double r) { return fam.u_bosonic(r); },
                                                                    [&](double r) { return fam.radial_factor_bosonic(r); }, l));
            }
        }
    }
    rec.upper_bound("Numerov zero mode of U_bos matches f_bos", zero_mode, 1e-5);

    bool monotone = true;
    for (const double kappa : {0.5, 1.0}) {
        for (int l = 0; l <= 2; ++l) {
            double previous = std::numeric_limits<double>::infinity();
            for (const double lambda : {1.0, 10.0, 100.0, 1000.0}) {
                const IsoFamily fam(DoParams::nodeless(kappa, l, lambda));
                double worst = 0.0;
                for (const double rho : linspace(0.1, 5.0, 200)) {
                    worst = std::max(worst, std::abs(fam.u_bosonic_correction(rho)));
                }
                monotone = monotone && worst < previous;
                previous = worst;
            }
        }
    }
    rec.holds("max |U_bos - U-| decreases along lambda = 1, 10, 100, 1000", monotone);
}

void run_fisheye(Recorder& rec)
{
    double subtraction = 0.0;
    for (int l = 0; l <= 2; ++l) {
        for (const double lambda : {1.0, 10.0}) {
            const fisheye::FishEyeFamily fe(l, lambda);
            for (const double rho : linspace(0.05, 3.0, 100)) {
                const double lhs = fe.v_family(rho) + l * (l + 1.0) / (rho * rho);
                const double rhs = fe.family().u_bosonic(rho);
                subtraction = std::max(subtraction, std::abs(lhs - rhs));
            }
        }
    }
    rec.upper_bound("V_1 + l(l+1)/rho^2 = U_bos", subtraction, 1e-10);

    const auto grid = fisheye::default_figure_grid();
    auto peak_ratio = [&](int l, double lambda, double rho_max) {
        const fisheye::FishEyeFamily fe(l, lambda);
        double peak = 0.0;
        for (const double rho : grid) {
            if (rho <= rho_max) {
                peak = std::max(peak, std::abs(fe.relative_ratio(rho)));
            }
        }
        return peak;
    };
    double bound = 0.0;
    double bound_lens = 0.0;
    bool damping = true;
    for (const double lambda : {1.0, 10.0}) {
        for (int l = 1; l <= 2; ++l) {
            bound = std::max(bound, peak_ratio(l, lambda, 3.0));
            bound_lens = std::max(bound_lens, peak_ratio(l, lambda, 1.0));
        }
        damping = damping && peak_ratio(2, lambda, 3.0) < peak_ratio(1, lambda, 3.0);
    }
    rec.upper_bound("max |ratio| on (0, 3], l in {1,2}", bound, 0.10);
    rec.upper_bound("max |ratio| on (0, 1], l in {1,2}", bound_lens, 0.10);
    rec.holds("peak |ratio| lower at l = 2 than at l = 1", damping);

    double peak_offset = 0.0;
    bool inflection = true;
    for (int l = 0; l <= 2; ++l) {
        for (const double lambda : {1.0, 10.0}) {
            // f_bos directly: for l = 0 the first-order index turns negative beyond rho ~ 2,
            // so the full table is not constructible there.
            const fisheye::FishEyeFamily fe(l, lambda);
            double best = -1.0;
            double argmax = 0.0;
            for (const double rho : grid) {
                const double f = fe.radial_factor_bosonic(rho);
                if (f * f > best) {
                    best = f * f;
                    argmax = rho;
                }
            }
            peak_offset = std::max(peak_offset, std::abs(argmax - 1.0));
            const auto root = fisheye::find_inflection(fe, grid);
            inflection = inflection && root && *root > 0.0 && *root <= 1.0;
        }
    }
    rec.upper_bound("argmax f_bos^2 within 0.5 of rho = 1", peak_offset, 0.5);
    rec.holds("inflection point in (0, 1]", inflection);

    const auto baseline = fisheye::find_inflection(fisheye::FishEyeFamily(0, 1e9), grid);
    const double step = grid[1] - grid[0];
    rec.upper_bound("Maxwell inflection at 1/sqrt(3), in grid steps",
                    baseline ? std::abs(*baseline - 1.0 / std::sqrt(3.0)) / step : INFINITY, 2.0);
}

void run_fullline(Recorder& rec)
{
    double langer = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const int l = n - 1;
        const double nu = n - 0.5;
        auto phi = [=](double x) {
            const double rho = fullline::langer_rho(x);
            return fullline::langer_wavefunction(radial_factor_f(rho, l, 1.0), rho);
        };
        for (const double x : linspace(-4.0, 4.0, 81)) {
            const double c = std::cosh(x);
            const double bracket = nu * nu - nu * (nu + 1.0) / (c * c);
            const double residual = -numerics::derivative(phi, x, 2, 0.1) + bracket * phi(x);
            langer = std::max(langer, std::abs(residual));
        }
    }
    rec.upper_bound("Langer image solves the Rosen-Morse equation", langer, 1e-6);

    double ladder = 0.0;
    bool counts = true;
    for (int nb = 1; nb <= 4; ++nb) {
        const auto problem = fullline::RmProblem::fisheye(nb);
        const auto found = problem.shoot();
        const auto expected = problem.spectrum();
        counts = counts && found.size() == expected.size();
        for (std::size_t i = 0; i < std::min(found.size(), expected.size()); ++i) {
            ladder = std::max(ladder, std::abs(found[i] - expected[i]));
        }
        const int partner_states = numerics::count_states_below(
            [=](double x) { return fullline::rm_partner_potential(x, nb); }, problem.shooting_config(),
            -1e-3);
        counts = counts && partner_states == nb - 1;
    }
    rec.upper_bound("sech^2 ladder at -k^2", ladder, 1e-6);
    rec.holds("n_b states for V-, n_b - 1 for V+", counts);

    double family = 0.0;
    double translation = 0.0;
    bool single = true;
    for (const double lambda0 : {0.1, 1.0, 10.0}) {
        const auto problem = fullline::RmProblem::fisheye(1, lambda0);
        const auto found = problem.shoot();
        single = single && found.size() == 1;
        if (!found.empty()) {
            family = std::max(family, std::abs(found.front() + 1.0));
        }
        const auto xs = linspace(-10.0, 10.0, 20001);
        const auto it = std::min_element(xs.begin(), xs.end(), [&](double a, double b) {
            return fullline::rm_family_single(a, lambda0) < fullline::rm_family_single(b, lambda0);
        });
        translation = std::max(translation, std::abs(*it + 0.5 * std::log1p(1.0 / lambda0)) / (xs[1] - xs[0]));
    }
    rec.upper_bound("translated well keeps its level at -1", family, 1e-6);
    rec.holds("translated well has exactly one level", single);
    rec.upper_bound("well minimum at -ln(1 + 1/lambda0)/2, in grid steps", translation, 1.0);

    double aufbau = 0.0;
    for (const int l : {0, 1}) {
        const auto problem = fullline::RmProblem::aufbau(l);
        const auto found = problem.shoot();
        aufbau = std::max(aufbau, found.empty() ? INFINITY : std::abs(found.front() - problem.spectrum().front()));
    }
    rec.upper_bound("aufbau well deepest level at -N^2/4", aufbau, 1e-5);

    rec.upper_bound("R(lambda0 = 1) = 1/sqrt(2)", std::abs(fullline::rescale_radius(1.0, 1.0) - 1.0 / std::numbers::sqrt2), 1e-15);
    rec.holds("R(lambda0 -> inf) = R",
              fullline::rescale_radius(2.5, std::numeric_limits<double>::infinity()) == 2.5);
}

void run_numerics(Recorder& rec)
{
    struct Case {
        numerics::RealFunction f;
        double a, b, exact;
    };
    const std::vector<Case> cases = {
        {[](double x) { return x * x; }, 0.0, 1.0, 1.0 / 3.0},
        {[](double x) { return x * x / (1.0 + x * x); }, 0.0, 1.0, 1.0 - std::numbers::pi / 4},
        {[](double x) { return std::exp(-x) * std::sin(5.0 * x); }, 0.0, 4.0,
         (5.0 - std::exp(-4.0) * (std::sin(20.0) + 5.0 * std::cos(20.0))) / 26.0},
    };
    bool order = true;
    double quad = 0.0;
    for (const auto& c : cases) {
        double previous = INFINITY;
        for (const double tol : {1e-6, 5e-7, 2.5e-7, 1.25e-7, 1e-10, 5e-11}) {
            const double err = std::abs(numerics::integrate_adaptive(c.f, c.a, c.b, tol).value - c.exact);
            order = order && err <= std::max(previous, 1e-15);
            previous = err;
            quad = std::max(quad, err);
        }
    }
    rec.holds("quadrature error non-increasing as tol halves", order);

    // u'' = U u with U = U-(kappa=1, l=0) started exactly at rho = 0.
    auto residual = [](double h) {
        const int n = static_cast<int>(std::lround(5.0 / h)) + 1;
        const auto grid = linspace(0.0, 5.0, n);
        auto pot = [](double r) { return r == 0.0 ? -3.0 : u_minus(r, 0, 1.0); };
        const auto u = numerics::numerov_zero_energy(pot, grid, 0.0, h);
        const std::size_t at_one = static_cast<std::size_t>(std::lround(1.0 / h));
        const double scale = radial_factor_f(1.0, 0, 1.0) / u.values()[at_one];
        double worst = 0.0;
        for (std::size_t i = 1; i < grid.size(); ++i) {
            if (grid[i] >= 0.1) {
                worst = std::max(worst, std::abs(scale * u.values()[i] / radial_factor_f(grid[i], 0, 1.0) - 1.0));
            }
        }
        return worst;
    };
    const double coarse = residual(0.02);
    const double fine = residual(0.01);
    rec.upper_bound("Numerov error ratio under step halving (1/x)", coarse > 0 ? fine / coarse : 1.0, 1.0 / 16.0);
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"specfun", "do-core", "isospectral", "fisheye", "fullline", "numerics"};
    return names;
}

std::vector<CheckResult> run(std::string_view suite, double tolerance_scale)
{
    const auto& names = suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
        throw DomainError("unknown verification suite '" + std::string(suite) + "'");
    }
    static const std::vector<std::pair<std::string, std::function<void(Recorder&)>>> runners = {
        {"specfun", run_specfun},       {"do-core", run_do_core},   {"isospectral", run_isospectral},
        {"fisheye", run_fisheye},       {"fullline", run_fullline}, {"numerics", run_numerics},
    };
    std::vector<CheckResult> results;
    for (const auto& [name, runner] : runners) {
        if (suite == "all" || suite == name) {
            Recorder rec(name, tolerance_scale, results);
            runner(rec);
        }
    }
    return results;
}

double zero_mode_deviation(const numerics::RealFunction& potential,
                           const numerics::RealFunction& reference, int l, double h, double lo,
                           double hi)
{
    const int n = static_cast<int>(std::lround(hi / h)) + 2;
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        grid[static_cast<std::size_t>(k)] = (k + 1) * h;
    }
    const auto u = numerics::numerov_zero_energy(potential, grid, std::pow(h, l + 1), std::pow(2.0 * h, l + 1));
    const auto at_one = static_cast<std::size_t>(std::lround(1.0 / h)) - 1;
    const double scale = reference(grid[at_one]) / u.values()[at_one];
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] >= lo && grid[i] <= hi) {
            worst = std::max(worst, std::abs(scale * u.values()[i] / reference(grid[i]) - 1.0));
        }
    }
    return worst;
}

} // namespace dosusy::verify
