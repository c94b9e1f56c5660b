// dosusy: command-line front end over the dosusy C API.
#include "dosusy/dosusy.h"
#include "svg_plot.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;

struct CliError : std::runtime_error {
    CliError(int code, const std::string& what) : std::runtime_error(what), exit_code(code) {}
    int exit_code;
};

struct RunConfig {
    std::string command;
    double kappa = 1.0;
    int l = 1;
    std::optional<int> N;
    double lambda = 1.0;
    double lambda0 = std::numeric_limits<double>::infinity();
    double rho_min = 0.01;
    double rho_max = 3.0;
    int samples = 300;
    std::string format = "csv";
    std::string output;
    bool exact_index = false;
    int nb = 1;
    bool aufbau = false;
    double R = 1.0;
    std::string suite = "all";
};

void check(dosusy_status status)
{
    if (status == DOSUSY_OK) return;
    const std::string msg = std::string(dosusy_status_string(status)) + ": " + dosusy_last_error();
    const bool config = status == DOSUSY_ERR_DOMAIN || status == DOSUSY_ERR_GRID || status == DOSUSY_ERR_NULL;
    throw CliError(config ? kExitConfig : kExitVerifyFailed, msg);
}

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> rho_grid(const RunConfig& cfg)
{
    std::vector<double> g(static_cast<std::size_t>(cfg.samples));
    const double step = (cfg.rho_max - cfg.rho_min) / (cfg.samples - 1);
    for (int i = 0; i < cfg.samples; ++i) {
        g[static_cast<std::size_t>(i)] = cfg.rho_min + i * step;
    }
    g.back() = cfg.rho_max;
    return g;
}

// Columns of equal length, written as CSV or as a JSON object of arrays.
struct Table {
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;

    void add(std::string name, std::vector<double> values)
    {
        names.push_back(std::move(name));
        columns.push_back(std::move(values));
    }

    std::string csv() const
    {
        std::ostringstream os;
        for (std::size_t c = 0; c < names.size(); ++c) os << (c ? "," : "") << names[c];
        os << '\n';
        const std::size_t rows = columns.empty() ? 0 : columns.front().size();
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << fmt17(columns[c][r]);
            os << '\n';
        }
        return os.str();
    }

    json to_json() const
    {
        json j = json::object();
        for (std::size_t c = 0; c < names.size(); ++c) j[names[c]] = columns[c];
        return j;
    }
};

void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.output.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw CliError(kExitConfig, "cannot open output file " + cfg.output);
    out << text;
    if (!out) throw CliError(kExitConfig, "write failed for " + cfg.output);
}

void emit_table(const RunConfig& cfg, const Table& table, json meta)
{
    if (cfg.format == "json") {
        meta["columns"] = table.to_json();
        emit(cfg, meta.dump() + "\n");
    } else {
        emit(cfg, table.csv());
    }
}

std::vector<double> sample(const std::vector<double>& xs, auto&& fn)
{
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) check(fn(xs[i], &out[i]));
    return out;
}

int cmd_potential(const RunConfig& cfg)
{
    double w = 0.0;
    const int N = cfg.N.value_or(static_cast<int>(std::lround(1.0 + cfg.l / cfg.kappa)));
    check(dosusy_coupling_w(N, cfg.kappa, &w));
    const auto grid = rho_grid(cfg);
    Table t;
    t.add("rho", grid);
    t.add("v", sample(grid, [&](double r, double* o) { return dosusy_potential_v(r, cfg.kappa, w, o); }));
    t.add("u", sample(grid, [&](double r, double* o) {
        return dosusy_radial_wavefunction(r, cfg.kappa, cfg.l, N, o);
    }));
    std::vector<double> scaled(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) scaled[i] = grid[i] * cfg.R;
    t.add("r", scaled);
    emit_table(cfg, t, {{"command", "potential"}, {"kappa", cfg.kappa}, {"l", cfg.l}, {"N", N}, {"coupling", w}});
    return 0;
}

int cmd_index(const RunConfig& cfg)
{
    const auto grid = rho_grid(cfg);
    const auto mode = cfg.exact_index ? DOSUSY_INDEX_EXACT : DOSUSY_INDEX_FIRST_ORDER;
    Table t;
    t.add("rho", grid);
    t.add("n_maxwell", sample(grid, [&](double r, double* o) { return dosusy_index_maxwell(r, cfg.l, o); }));
    t.add("n_iso", sample(grid, [&](double r, double* o) { return dosusy_index_iso(r, cfg.l, cfg.lambda, mode, o); }));
    t.add("ratio", sample(grid, [&](double r, double* o) { return dosusy_relative_ratio(r, cfg.l, cfg.lambda, o); }));
    emit_table(cfg, t, {{"command", "index"}, {"l", cfg.l}, {"lambda", cfg.lambda}, {"exact_index", cfg.exact_index}});
    return 0;
}

struct FamilyHandle {
    dosusy_family* ptr = nullptr;
    ~FamilyHandle() { dosusy_family_destroy(ptr); }
};

int cmd_family(const RunConfig& cfg)
{
    FamilyHandle fam;
    check(dosusy_family_create(cfg.kappa, cfg.l, cfg.lambda, &fam.ptr));
    const auto grid = rho_grid(cfg);
    auto eval = [&](dosusy_quantity q) {
        std::vector<double> out(grid.size());
        check(dosusy_family_eval(fam.ptr, q, grid.data(), grid.size(), out.data()));
        return out;
    };
    Table t;
    t.add("rho", grid);
    t.add("f", eval(DOSUSY_Q_RADIAL_FACTOR));
    t.add("w", eval(DOSUSY_Q_SUPERPOTENTIAL));
    t.add("u_minus", eval(DOSUSY_Q_U_MINUS));
    t.add("u_plus", eval(DOSUSY_Q_U_PLUS));
    t.add("i0", eval(DOSUSY_Q_I0));
    t.add("v_general", eval(DOSUSY_Q_V_GENERAL));
    t.add("w_general", eval(DOSUSY_Q_SUPERPOTENTIAL_GENERAL));
    t.add("u_bos", eval(DOSUSY_Q_U_BOSONIC));
    t.add("f_bos", eval(DOSUSY_Q_RADIAL_FACTOR_BOSONIC));
    int route = 0;
    check(dosusy_family_i0_route(fam.ptr, &route));
    static const char* const routes[] = {"closed_half", "closed_one", "quadrature"};
    emit_table(cfg, t,
               {{"command", "family"}, {"kappa", cfg.kappa}, {"l", cfg.l}, {"lambda", cfg.lambda},
                {"i0_route", routes[route]}});
    return 0;
}

std::vector<double> levels(int variant, int n, double lambda0, bool analytic)
{
    std::vector<double> buf(64);
    std::size_t count = buf.size();
    check(dosusy_rm_levels(variant, n, lambda0, analytic ? 1 : 0, buf.data(), &count));
    buf.resize(count);
    return buf;
}

// Shooting values carry the 1e-8 bisection tolerance; report them at that resolution.
double at_tolerance(double e)
{
    const double r = std::round(e * 1e8) / 1e8;
    return r == 0.0 ? 0.0 : r;
}

int cmd_langer(const RunConfig& cfg)
{
    const int variant = cfg.aufbau ? 1 : 0;
    const int n = cfg.aufbau ? cfg.l : cfg.nb;
    const auto shot = levels(variant, n, cfg.lambda0, false);
    const auto exact = levels(variant, n, cfg.lambda0, true);
    double worst = 0.0;
    std::vector<double> reported;
    for (std::size_t i = 0; i < shot.size(); ++i) {
        reported.push_back(at_tolerance(shot[i]));
        if (i < exact.size()) worst = std::max(worst, std::abs(shot[i] - exact[i]));
    }
    if (cfg.format == "json") {
        json j;
        j["eigenvalues"] = reported;
        j["analytic"] = exact;
        j["max_deviation"] = worst;
        j["variant"] = cfg.aufbau ? "aufbau" : "fisheye";
        if (cfg.aufbau) {
            j["N"] = 2 * cfg.l + 1;
        } else {
            j["n_b"] = cfg.nb;
        }
        if (std::isfinite(cfg.lambda0)) {
            j["lambda0"] = cfg.lambda0;
            double r = 0.0;
            check(dosusy_rescale_radius(cfg.R, cfg.lambda0, &r));
            j["rescaled_radius"] = r;
            j["strict_branch"] = dosusy_is_strict_branch(cfg.lambda0) == 1;
        }
        emit(cfg, j.dump() + "\n");
        return 0;
    }
    // CSV: the full-line potentials on x = ln rho over the requested rho window.
    double x0 = 0.0, x1 = 0.0;
    check(dosusy_langer_x(cfg.rho_min, &x0));
    check(dosusy_langer_x(cfg.rho_max, &x1));
    std::vector<double> xs(static_cast<std::size_t>(cfg.samples));
    for (int i = 0; i < cfg.samples; ++i) xs[static_cast<std::size_t>(i)] = x0 + (x1 - x0) * i / (cfg.samples - 1);
    Table t;
    t.add("x", xs);
    if (cfg.aufbau) {
        t.add("v_aufbau", sample(xs, [&](double x, double* o) { return dosusy_aufbau_rm_potential(x, 2 * cfg.l + 1, o); }));
    } else {
        t.add("v_rm", sample(xs, [&](double x, double* o) { return dosusy_rm_potential(x, cfg.nb, o); }));
        t.add("v_partner", sample(xs, [&](double x, double* o) { return dosusy_rm_partner_potential(x, cfg.nb, o); }));
        t.add("w", sample(xs, [&](double x, double* o) { return dosusy_rm_superpotential(x, cfg.nb, o); }));
        if (std::isfinite(cfg.lambda0)) {
            t.add("v_family", sample(xs, [&](double x, double* o) { return dosusy_rm_family_single(x, cfg.lambda0, o); }));
        }
    }
    emit(cfg, t.csv());
    return 0;
}

struct TableHandle {
    dosusy_table* ptr = nullptr;
    ~TableHandle() { dosusy_table_destroy(ptr); }
};

int cmd_figure(const RunConfig& cfg)
{
    const auto grid = rho_grid(cfg);
    TableHandle th;
    check(dosusy_table_create(cfg.l, cfg.lambda, grid.data(), grid.size(),
                              cfg.exact_index ? DOSUSY_INDEX_EXACT : DOSUSY_INDEX_FIRST_ORDER, &th.ptr));
    const std::size_t rows = dosusy_table_rows(th.ptr);
    Table t;
    t.names = {"rho", "n_maxwell", "n_iso", "ratio_minus_1", "f_bos_sq"};
    t.columns.assign(5, std::vector<double>(rows));
    double row[5];
    for (std::size_t r = 0; r < rows; ++r) {
        check(dosusy_table_row(th.ptr, r, row));
        for (std::size_t c = 0; c < 5; ++c) t.columns[c][r] = row[c];
    }

    if (cfg.format == "svg") {
        const auto& rho = t.columns[0];
        std::vector<svgplot::Panel> panels = {
            {"Maxwell fish-eye index", "rho", "n_M", {{"n_M", rho, t.columns[1]}}},
            {"Isospectral index", "rho", "n_iso", {{"n_iso", rho, t.columns[2]}, {"n_M", rho, t.columns[1]}}},
            {"Relative deviation", "rho", "n_iso/n_M - 1", {{"ratio - 1", rho, t.columns[3]}}},
            {"Bosonic radial factor", "rho", "f_bos^2", {{"f_bos^2", rho, t.columns[4]}}},
        };
        std::ostringstream heading;
        heading << "l = " << cfg.l << ", lambda = " << cfg.lambda;
        emit(cfg, svgplot::render(panels, 2, heading.str()));
        return 0;
    }
    int found = 0;
    double inflection = 0.0;
    std::optional<double> infl;
    if (grid.size() >= 100 && grid.front() > 0.0 && grid.back() >= 1.0) {
        check(dosusy_find_inflection(cfg.l, cfg.lambda, grid.data(), grid.size(),
                                     cfg.exact_index ? DOSUSY_INDEX_EXACT : DOSUSY_INDEX_FIRST_ORDER, &found,
                                     &inflection));
        if (found) infl = inflection;
    }
    json meta = {{"command", "figure"}, {"l", cfg.l}, {"lambda", cfg.lambda}};
    meta["inflection"] = infl ? json(*infl) : json(nullptr);
    emit_table(cfg, t, meta);
    return 0;
}

double tolerance_scale()
{
    const char* env = std::getenv("SUSY_FISHEYE_TOL");
    if (env == nullptr || *env == '\0') return 1.0;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
        throw CliError(kExitConfig, std::string("SUSY_FISHEYE_TOL must be a positive number, got '") + env + "'");
    }
    return v;
}

struct ReportHandle {
    dosusy_report* ptr = nullptr;
    ~ReportHandle() { dosusy_report_destroy(ptr); }
};

int cmd_verify(const RunConfig& cfg)
{
    ReportHandle rep;
    check(dosusy_verify_run(cfg.suite.c_str(), tolerance_scale(), &rep.ptr));
    const std::size_t n = dosusy_report_size(rep.ptr);
    std::size_t failed = 0;
    json items = json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i < n; ++i) {
        const char* suite = nullptr;
        const char* name = nullptr;
        double residual = 0.0, tol = 0.0;
        int passed = 0;
        check(dosusy_report_item(rep.ptr, i, &suite, &name, &residual, &tol, &passed));
        if (!passed) ++failed;
        items.push_back({{"suite", suite}, {"check", name}, {"residual", residual}, {"tolerance", tol},
                         {"passed", passed == 1}});
        char line[256];
        std::snprintf(line, sizeof line, "%s %-12s %-44s residual=%.3e tol=%.1e\n", passed ? "PASS" : "FAIL", suite,
                      name, residual, tol);
        text << line;
    }
    if (cfg.format == "json") {
        emit(cfg, json{{"checks", items}, {"failed", failed}, {"total", n}}.dump() + "\n");
    } else {
        text << (n - failed) << "/" << n << " checks passed\n";
        emit(cfg, text.str());
    }
    if (failed > 0) {
        std::cerr << "error: " << failed << " verification check(s) failed\n";
        return kExitVerifyFailed;
    }
    return 0;
}

void validate(const RunConfig& cfg)
{
    if (cfg.samples < 2) throw CliError(kExitConfig, "--samples must be at least 2");
    if (!(cfg.rho_min < cfg.rho_max)) throw CliError(kExitConfig, "--rho-min must be below --rho-max");
    if (cfg.format == "svg" && cfg.command != "figure") {
        throw CliError(kExitConfig, "svg output is only available for the figure command");
    }
    if (!(cfg.R > 0.0)) throw CliError(kExitConfig, "--R must be positive");
}

} // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    CLI::App app{"Isospectral Demkov-Ostrovsky potentials, fish-eye index families and their Rosen-Morse images"};
    app.require_subcommand(1);

    auto add_rho = [&](CLI::App* sub) {
        sub->add_option("--rho-min", cfg.rho_min, "Lower end of the rho = r/R sampling window")->capture_default_str();
        sub->add_option("--rho-max", cfg.rho_max, "Upper end of the rho sampling window")->capture_default_str();
        sub->add_option("--samples", cfg.samples, "Number of equally spaced rho samples (>= 2)")->capture_default_str();
    };
    auto add_output = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
        sub->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
    };
    auto add_kappa = [&](CLI::App* sub) {
        sub->add_option("--kappa", cfg.kappa, "Focusing exponent kappa of the potential (1 = fish-eye, 0.5 = aufbau)")
            ->capture_default_str();
    };
    auto add_l = [&](CLI::App* sub) {
        sub->add_option("--l", cfg.l, "Orbital quantum number l")->check(CLI::NonNegativeNumber)->capture_default_str();
    };
    auto add_lambda = [&](CLI::App* sub) {
        sub->add_option("--lambda", cfg.lambda,
                        "Family parameter lambda of the isospectral deformation (lambda > 0 or lambda < -I0(inf))")
            ->capture_default_str();
    };

    auto* potential = app.add_subcommand("potential", "Sample the zero-energy potential V and radial state u");
    add_kappa(potential);
    add_l(potential);
    potential->add_option("--N", cfg.N, "Principal number N; defaults to the nodeless value 1 + l/kappa");
    potential->add_option("--R", cfg.R, "Lens radius used to scale the r column")->capture_default_str();
    add_rho(potential);
    add_output(potential, {"csv", "json"});

    auto* index = app.add_subcommand("index", "Sample the Maxwell and isospectral fish-eye refractive indices");
    add_l(index);
    add_lambda(index);
    index->add_flag("--exact-index", cfg.exact_index, "Use the exact square-root index instead of the first-order one");
    add_rho(index);
    add_output(index, {"csv", "json"});

    auto* family = app.add_subcommand("family", "Sample the isospectral family: I0, superpotentials, U_bos, f_bos");
    add_kappa(family);
    add_l(family);
    add_lambda(family);
    add_rho(family);
    add_output(family, {"csv", "json"});

    auto* langer = app.add_subcommand("langer", "Rosen-Morse spectra of the Langer-transformed full-line problem");
    langer->add_option("--nb", cfg.nb, "Integer well strength n_b of -n_b(n_b+1) sech^2 x")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    langer->add_option("--lambda0", cfg.lambda0,
                       "Single-state family parameter lambda0 (> 0 or < -1); translates the n_b = 1 well");
    langer->add_flag("--aufbau", cfg.aufbau, "Use the kappa = 1/2 image -N(N+1)/(4 cosh^2(x/2)) with N = 2l + 1");
    add_l(langer);
    langer->add_option("--R", cfg.R, "Lens radius rescaled by the lambda0 family")->capture_default_str();
    add_rho(langer);
    add_output(langer, {"csv", "json"});

    auto* figure = app.add_subcommand("figure", "Four-curve fish-eye family table or 2x2 SVG panel");
    add_l(figure);
    add_lambda(figure);
    figure->add_flag("--exact-index", cfg.exact_index, "Use the exact square-root index instead of the first-order one");
    add_rho(figure);
    add_output(figure, {"csv", "json", "svg"});

    auto* verify = app.add_subcommand("verify", "Run the closed-form versus oracle verification suite");
    verify->add_option("--suite", cfg.suite, "Suite to run")
        ->check(CLI::IsMember({"all", "specfun", "do-core", "isospectral", "fisheye", "fullline", "numerics"}))
        ->capture_default_str();
    add_output(verify, {"csv", "json"});
    verify->footer("Set SUSY_FISHEYE_TOL to scale every tolerance (default 1.0). Exit status 1 if any check fails.");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        validate(cfg);
        if (cfg.command == "potential") return cmd_potential(cfg);
        if (cfg.command == "index") return cmd_index(cfg);
        if (cfg.command == "family") return cmd_family(cfg);
        if (cfg.command == "langer") return cmd_langer(cfg);
        if (cfg.command == "figure") return cmd_figure(cfg);
        return cmd_verify(cfg);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
}
