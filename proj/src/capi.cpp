#include "dosusy/dosusy.h"

#include "dosusy/do_core.hpp"
#include "dosusy/errors.hpp"
#include "dosusy/fisheye.hpp"
#include "dosusy/fullline.hpp"
#include "dosusy/isospectral.hpp"
#include "dosusy/specfun.hpp"
#include "dosusy/verify.hpp"

#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

struct dosusy_family {
    dosusy::IsoFamily family;
};

struct dosusy_table {
    dosusy::fisheye::FigureTable table;
};

struct dosusy_report {
    std::vector<dosusy::verify::CheckResult> results;
};

namespace {

thread_local std::string last_error;

dosusy_status fail(dosusy_status status, const char* message)
{
    last_error = message;
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
dosusy_status guarded(Body&& body) noexcept
{
    try {
        body();
        return DOSUSY_OK;
    } catch (const dosusy::DomainError& e) {
        return fail(DOSUSY_ERR_DOMAIN, e.what());
    } catch (const dosusy::ConvergenceError& e) {
        return fail(DOSUSY_ERR_CONVERGENCE, e.what());
    } catch (const dosusy::OverflowError& e) {
        return fail(DOSUSY_ERR_OVERFLOW, e.what());
    } catch (const std::overflow_error& e) {
        return fail(DOSUSY_ERR_OVERFLOW, e.what());
    } catch (const dosusy::GridError& e) {
        return fail(DOSUSY_ERR_GRID, e.what());
    } catch (const std::bad_alloc&) {
        return fail(DOSUSY_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(DOSUSY_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(DOSUSY_ERR_INTERNAL, "unknown error");
    }
}

#define DOSUSY_REQUIRE(ptr)                                                 \
    do {                                                                    \
        if ((ptr) == nullptr) {                                             \
            return fail(DOSUSY_ERR_NULL, "null pointer argument: " #ptr); \
        }                                                                   \
    } while (0)

dosusy::fisheye::IndexMode to_mode(dosusy_index_mode mode)
{
    return mode == DOSUSY_INDEX_EXACT ? dosusy::fisheye::IndexMode::exact
                                      : dosusy::fisheye::IndexMode::first_order;
}

double eval_quantity(const dosusy::IsoFamily& fam, dosusy_quantity q, double rho)
{
    const auto& p = fam.params();
    switch (q) {
    case DOSUSY_Q_POTENTIAL_V:
        return dosusy::potential_v(rho, p.kappa(), dosusy::nodeless_coupling(p.l(), p.kappa()));
    case DOSUSY_Q_RADIAL_FACTOR:
        return dosusy::radial_factor_f(rho, p.l(), p.kappa());
    case DOSUSY_Q_SUPERPOTENTIAL:
        return dosusy::superpotential_w(rho, p.l(), p.kappa());
    case DOSUSY_Q_U_MINUS:
        return dosusy::u_minus(rho, p.l(), p.kappa());
    case DOSUSY_Q_U_PLUS:
        return dosusy::u_plus(rho, p.l(), p.kappa());
    case DOSUSY_Q_I0:
        return fam.i0(rho);
    case DOSUSY_Q_V_GENERAL:
        return fam.v_general(rho);
    case DOSUSY_Q_SUPERPOTENTIAL_GENERAL:
        return fam.superpotential_general(rho);
    case DOSUSY_Q_U_BOSONIC:
        return fam.u_bosonic(rho);
    case DOSUSY_Q_RADIAL_FACTOR_BOSONIC:
        return fam.radial_factor_bosonic(rho);
    }
    throw dosusy::DomainError("unknown quantity");
}

} // namespace

extern "C" {

const char* dosusy_status_string(dosusy_status status)
{
    switch (status) {
    case DOSUSY_OK: return "ok";
    case DOSUSY_ERR_DOMAIN: return "domain error";
    case DOSUSY_ERR_CONVERGENCE: return "convergence failure";
    case DOSUSY_ERR_OVERFLOW: return "overflow";
    case DOSUSY_ERR_GRID: return "invalid grid";
    case DOSUSY_ERR_NULL: return "null pointer";
    case DOSUSY_ERR_BUFFER: return "buffer too small";
    case DOSUSY_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* dosusy_last_error(void)
{
    return last_error.c_str();
}

const char* dosusy_version(void)
{
    return "1.0.0";
}

dosusy_status dosusy_gegenbauer(int degree, double order, double xi, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::gegenbauer({degree, order, xi}); });
}

dosusy_status dosusy_binomial(int n, int k, unsigned long long* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::binomial(n, k); });
}

dosusy_status dosusy_coupling_w(int N, double kappa, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::coupling_w(N, kappa); });
}

dosusy_status dosusy_potential_v(double rho, double kappa, double w, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::potential_v(rho, kappa, w); });
}

dosusy_status dosusy_xi_of_rho(double rho, double kappa, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::xi_of_rho(rho, kappa); });
}

dosusy_status dosusy_radial_wavefunction(double rho, double kappa, int l, int N, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::radial_wavefunction(rho, dosusy::DoParams(kappa, l, N)); });
}

dosusy_status dosusy_degeneracy(int N, long long* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::degeneracy(N); });
}

dosusy_status dosusy_family_create(double kappa, int l, double lambda, dosusy_family** out)
{
    DOSUSY_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new dosusy_family{dosusy::IsoFamily(dosusy::DoParams::nodeless(kappa, l, lambda))}; });
}

void dosusy_family_destroy(dosusy_family* family)
{
    delete family;
}

dosusy_status dosusy_family_eval(const dosusy_family* family, dosusy_quantity quantity, const double* rho,
                                 size_t n, double* out)
{
    DOSUSY_REQUIRE(family);
    if (n > 0) {
        DOSUSY_REQUIRE(rho);
        DOSUSY_REQUIRE(out);
    }
    return guarded([&] {
        for (size_t i = 0; i < n; ++i) {
            out[i] = eval_quantity(family->family, quantity, rho[i]);
        }
    });
}

dosusy_status dosusy_family_i0_route(const dosusy_family* family, int* out)
{
    DOSUSY_REQUIRE(family);
    DOSUSY_REQUIRE(out);
    *out = static_cast<int>(family->family.route());
    return DOSUSY_OK;
}

dosusy_status dosusy_beta_of_rho(double rho, double kappa, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::beta_of_rho(rho, kappa); });
}

dosusy_status dosusy_i0_closed_half(double beta, int l, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::i0_closed_half(beta, l); });
}

dosusy_status dosusy_i0_closed_one(double beta, int l, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::i0_closed_one(beta, l); });
}

dosusy_status dosusy_i0_quadrature(double rho, int l, double kappa, double tol, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::i0_quadrature(rho, l, kappa, tol); });
}

dosusy_status dosusy_index_maxwell(double rho, int l, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::fisheye::index_maxwell(rho, l); });
}

dosusy_status dosusy_index_iso(double rho, int l, double lambda, dosusy_index_mode mode, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::fisheye::FishEyeFamily(l, lambda).index_iso(rho, to_mode(mode)); });
}

dosusy_status dosusy_relative_ratio(double rho, int l, double lambda, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::fisheye::FishEyeFamily(l, lambda).relative_ratio(rho); });
}

dosusy_status dosusy_v_family_fisheye(double rho, int l, double lambda, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::fisheye::FishEyeFamily(l, lambda).v_family(rho); });
}

dosusy_status dosusy_find_inflection(int l, double lambda, const double* grid, size_t n, dosusy_index_mode mode,
                                     int* found, double* out)
{
    DOSUSY_REQUIRE(found);
    DOSUSY_REQUIRE(out);
    if (n > 0) {
        DOSUSY_REQUIRE(grid);
    }
    return guarded([&] {
        const std::vector<double> g(grid, grid + n);
        const auto root = dosusy::fisheye::find_inflection(dosusy::fisheye::FishEyeFamily(l, lambda), g, to_mode(mode));
        *found = root.has_value() ? 1 : 0;
        *out = root.value_or(0.0);
    });
}

dosusy_status dosusy_table_create(int l, double lambda, const double* grid, size_t n, dosusy_index_mode mode,
                                  dosusy_table** out)
{
    DOSUSY_REQUIRE(out);
    *out = nullptr;
    if (n > 0) {
        DOSUSY_REQUIRE(grid);
    }
    return guarded([&] {
        const std::vector<double> g(grid, grid + n);
        *out = new dosusy_table{dosusy::fisheye::figure_table(l, lambda, g, to_mode(mode))};
    });
}

void dosusy_table_destroy(dosusy_table* table)
{
    delete table;
}

size_t dosusy_table_rows(const dosusy_table* table)
{
    return table == nullptr ? 0 : table->table.grid.size();
}

dosusy_status dosusy_table_row(const dosusy_table* table, size_t row, double* out)
{
    DOSUSY_REQUIRE(table);
    DOSUSY_REQUIRE(out);
    const auto& t = table->table;
    if (row >= t.grid.size()) {
        return fail(DOSUSY_ERR_DOMAIN, "table row out of range");
    }
    out[0] = t.grid[row];
    out[1] = t.n_maxwell[row];
    out[2] = t.n_iso[row];
    out[3] = t.ratio_minus_one[row];
    out[4] = t.f_bos_squared[row];
    return DOSUSY_OK;
}

dosusy_status dosusy_langer_x(double rho, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::fullline::langer_x(rho); });
}

dosusy_status dosusy_rm_potential(double x, int n_b, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::fullline::rm_potential(x, n_b); });
}

dosusy_status dosusy_rm_partner_potential(double x, int n_b, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::fullline::rm_partner_potential(x, n_b); });
}

dosusy_status dosusy_rm_superpotential(double x, int n_b, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::fullline::rm_superpotential(x, n_b); });
}

dosusy_status dosusy_rm_family_single(double x, double lambda0, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::fullline::rm_family_single(x, lambda0); });
}

int dosusy_is_strict_branch(double lambda0)
{
    return dosusy::fullline::is_strict_branch(lambda0) ? 1 : 0;
}

dosusy_status dosusy_rescale_radius(double R, double lambda0, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::fullline::rescale_radius(R, lambda0); });
}

dosusy_status dosusy_rescale_coordinate(double rho_inf, double lambda0, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::fullline::rescale_coordinate(rho_inf, lambda0); });
}

dosusy_status dosusy_halfline_superpartner(double rho, int l, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::fullline::halfline_superpartner(rho, l); });
}

dosusy_status dosusy_aufbau_rm_potential(double x, int N, double* out)
{
    DOSUSY_REQUIRE(out);
    return guarded([&] { *out = dosusy::fullline::aufbau_rm_potential(x, N); });
}

dosusy_status dosusy_rm_levels(int variant, int n, double lambda0, int analytic, double* levels, size_t* count)
{
    DOSUSY_REQUIRE(count);
    if (*count > 0) {
        DOSUSY_REQUIRE(levels);
    }
    if (variant != 0 && variant != 1) {
        return fail(DOSUSY_ERR_DOMAIN, "variant must be 0 (fish-eye) or 1 (aufbau)");
    }
    std::vector<double> found;
    const dosusy_status status = guarded([&] {
        const auto problem = variant == 0 ? dosusy::fullline::RmProblem::fisheye(n, lambda0)
                                          : dosusy::fullline::RmProblem::aufbau(n);
        found = analytic ? problem.spectrum() : problem.shoot();
    });
    if (status != DOSUSY_OK) {
        return status;
    }
    if (found.size() > *count) {
        *count = found.size();
        return fail(DOSUSY_ERR_BUFFER, "level buffer too small");
    }
    for (size_t i = 0; i < found.size(); ++i) {
        levels[i] = found[i];
    }
    *count = found.size();
    return DOSUSY_OK;
}

dosusy_status dosusy_verify_run(const char* suite, double tolerance_scale, dosusy_report** out)
{
    DOSUSY_REQUIRE(suite);
    DOSUSY_REQUIRE(out);
    *out = nullptr;
    if (!(tolerance_scale > 0.0)) {
        return fail(DOSUSY_ERR_DOMAIN, "tolerance scale must be positive");
    }
    return guarded([&] { *out = new dosusy_report{dosusy::verify::run(suite, tolerance_scale)}; });
}

void dosusy_report_destroy(dosusy_report* report)
{
    delete report;
}

size_t dosusy_report_size(const dosusy_report* report)
{
    return report == nullptr ? 0 : report->results.size();
}

dosusy_status dosusy_report_item(const dosusy_report* report, size_t index, const char** suite, const char** name,
                                 double* residual, double* tolerance, int* passed)
{
    DOSUSY_REQUIRE(report);
    if (index >= report->results.size()) {
        return fail(DOSUSY_ERR_DOMAIN, "report index out of range");
    }
    const auto& r = report->results[index];
    if (suite) *suite = r.suite.c_str();
    if (name) *name = r.name.c_str();
    if (residual) *residual = r.residual;
    if (tolerance) *tolerance = r.tolerance;
    if (passed) *passed = r.passed ? 1 : 0;
    return DOSUSY_OK;
}

} // extern "C"
