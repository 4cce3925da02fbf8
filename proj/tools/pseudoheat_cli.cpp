/// Command-line front end for the pseudo-heat process library.
///
/// Subcommands:
///   roots         root system table: index, Re/Im theta_l, set (J/K), A/B coef
///   identities    residual battery for the algebraic identities of one system
///   kernel        sampled kernel p(t; xi) on a uniform xi grid (CSV: xi, p)
///   extrema       joint law of (position, running max/min): distribution
///                 function in the Laplace domain or inverted at a time point
///   hitting       first-crossing laws: place weights, time-domain multipole
///                 profiles, or Laplace-domain multipole transforms
///   invert        Talbot inverter on built-in reference transforms
///   lattice-check brute-force signed-lattice oracle vs closed forms
///   verify-all    full invariant suite; nonzero exit on any residual breach
///
/// Global flags (valid after the subcommand name as well): --format csv|json,
/// --out PATH (default stdout), --talbot-nodes M, --seed S.  The environment
/// variable PSEUDOHEAT_QUAD_BUDGET caps total quadrature evaluations.
///
/// Exit codes: 0 success, 1 verification failure or runtime error, 2 bad
/// flags / invalid query.  Output bytes are identical for identical inputs.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pseudoheat/csv.hpp"
#include "pseudoheat/errors.hpp"
#include "pseudoheat/extrema.hpp"
#include "pseudoheat/hitting.hpp"
#include "pseudoheat/kernel.hpp"
#include "pseudoheat/lattice.hpp"
#include "pseudoheat/params.hpp"
#include "pseudoheat/quadrature.hpp"
#include "pseudoheat/roots.hpp"
#include "pseudoheat/talbot.hpp"
#include "pseudoheat/verify.hpp"

namespace {

using pseudoheat::cplx;

/// Everything that determines a run's output bytes.
struct RunConfig {
    std::string subcommand;
    int N = 2;
    std::optional<int> kappa;
    std::string format = "csv";
    std::string out_path;  // empty -> stdout
    int talbot_nodes = 64;
    unsigned seed = 12345;
};

long long cell_int(int v) { return static_cast<long long>(v); }

/// Residual tolerance for the identity battery (matches the library tests).
constexpr double kIdentityTol = 1e-10;

int run_roots(const RunConfig& cfg, const pseudoheat::RootSystem& rs) {
    pseudoheat::io::Table t;
    t.columns = {"l", "re_theta", "im_theta", "set", "coef_re", "coef_im"};
    for (int l = 0; l < rs.N; ++l) {
        const bool inJ =
            std::find(rs.J.begin(), rs.J.end(), l) != rs.J.end();
        const cplx coef = inJ ? rs.A[l] : rs.B[l];
        t.add_row({cell_int(l), rs.theta[l].real(), rs.theta[l].imag(),
                   std::string(inJ ? "J" : "K"), coef.real(), coef.imag()});
    }
    pseudoheat::io::write_table(t, pseudoheat::io::parse_format(cfg.format),
                                cfg.out_path);
    return 0;
}

int run_identities(const RunConfig& cfg, const pseudoheat::RootSystem& rs) {
    const auto report = pseudoheat::identity_report(rs);
    pseudoheat::io::Table t;
    t.columns = {"name", "residual"};
    std::string worst_name;
    double worst = -1.0;
    for (const auto& [name, res] : report.residuals) {
        t.add_row({name, res});
        if (res > worst) {
            worst = res;
            worst_name = name;
        }
    }
    pseudoheat::io::write_table(t, pseudoheat::io::parse_format(cfg.format),
                                cfg.out_path);
    if (worst > kIdentityTol) {
        std::cerr << "identity '" << worst_name << "' residual "
                  << pseudoheat::io::format_double(worst) << " exceeds "
                  << kIdentityTol << "\n";
        return 1;
    }
    return 0;
}

int run_kernel(const RunConfig& cfg, const pseudoheat::ParamSet& ps, double tt,
               double xi_min, double xi_max, int steps) {
    if (steps < 2) throw pseudoheat::invalid_query("--steps must be at least 2");
    if (!(xi_max > xi_min))
        throw pseudoheat::invalid_query("--xi-max must exceed --xi-min");
    if (!(tt > 0.0)) throw pseudoheat::invalid_query("--t must be positive");
    pseudoheat::io::Table t;
    t.columns = {"xi", "p"};
    const double dx = (xi_max - xi_min) / (steps - 1);
    for (int i = 0; i < steps; ++i) {
        const double xi = (i == steps - 1) ? xi_max : xi_min + i * dx;
        t.add_row({xi, pseudoheat::heat_kernel(ps, tt, xi)});
    }
    pseudoheat::io::write_table(t, pseudoheat::io::parse_format(cfg.format),
                                cfg.out_path);
    return 0;
}

int run_extrema(const RunConfig& cfg, const pseudoheat::RootSystem& rs,
                std::optional<double> tt, std::optional<double> lambda,
                double x, double y, double z, const std::string& which,
                const std::string& domain) {
    pseudoheat::Extremum ext;
    if (which == "max")
        ext = pseudoheat::Extremum::maximum;
    else if (which == "min")
        ext = pseudoheat::Extremum::minimum;
    else
        throw pseudoheat::invalid_query("--which must be max or min");

    double value = 0.0, error = 0.0;
    if (domain == "laplace") {
        if (!lambda)
            throw pseudoheat::invalid_query("--domain laplace needs --lambda");
        if (!(*lambda > 0.0))
            throw pseudoheat::invalid_query("--lambda must be positive");
        const cplx v =
            pseudoheat::dist_func_lt(rs, cplx(*lambda, 0.0), x, y, z, ext);
        value = v.real();
        error = std::abs(v.imag());
    } else if (domain == "time") {
        if (!tt) throw pseudoheat::invalid_query("--domain time needs --t");
        if (!(*tt > 0.0))
            throw pseudoheat::invalid_query("--t must be positive");
        pseudoheat::TalbotConfig tc;
        tc.M = cfg.talbot_nodes;
        const auto r =
            pseudoheat::dist_func_time(rs, *tt, x, y, z, ext, false, tc);
        value = r.value;
        error = r.error;
    } else {
        throw pseudoheat::invalid_query("--domain must be laplace or time");
    }

    pseudoheat::io::Table t;
    t.columns = {"N",  "kappa", "which", "domain", "t",    "lambda",
                 "x",  "y",     "z",     "value",  "error"};
    std::vector<pseudoheat::io::Cell> row;
    row.emplace_back(cell_int(rs.N));
    row.emplace_back(cell_int(rs.kappa));
    row.emplace_back(which);
    row.emplace_back(domain);
    if (tt)
        row.emplace_back(*tt);
    else
        row.emplace_back(std::string());
    if (lambda)
        row.emplace_back(*lambda);
    else
        row.emplace_back(std::string());
    row.emplace_back(x);
    row.emplace_back(y);
    row.emplace_back(z);
    row.emplace_back(value);
    row.emplace_back(error);
    t.add_row(std::move(row));
    pseudoheat::io::write_table(t, pseudoheat::io::parse_format(cfg.format),
                                cfg.out_path);
    return 0;
}

int run_hitting(const RunConfig& cfg, const pseudoheat::RootSystem& rs,
                double a, double x, const std::string& sign,
                std::optional<double> tt, std::optional<double> lambda,
                std::optional<double> mu) {
    pseudoheat::Crossing dir;
    if (sign == "up")
        dir = pseudoheat::Crossing::upward;
    else if (sign == "down")
        dir = pseudoheat::Crossing::downward;
    else
        throw pseudoheat::invalid_query("--sign must be up or down");
    const int card = dir == pseudoheat::Crossing::upward
                         ? static_cast<int>(rs.cardJ())
                         : static_cast<int>(rs.cardK());

    pseudoheat::io::Table t;
    t.columns = {"q", "value_re", "value_im", "error"};
    if (tt) {
        if (!(*tt > 0.0))
            throw pseudoheat::invalid_query("--t must be positive");
        // Time-domain multipole profiles at elapsed time t.
        for (int q = 0; q < card; ++q) {
            double err = 0.0;
            const double v =
                pseudoheat::time_profile(rs, dir, q, *tt, x - a, &err);
            t.add_row({cell_int(q), v, 0.0, err});
        }
    } else if (lambda) {
        if (!(*lambda > 0.0))
            throw pseudoheat::invalid_query("--lambda must be positive");
        // Laplace-domain multipole transforms; with --mu also the fully
        // reassembled joint transform as a q = -1 summary row.
        const cplx lam(*lambda, 0.0);
        for (int q = 0; q < card; ++q) {
            const cplx v = pseudoheat::multipole_lt(rs, dir, q, lam, x, a);
            t.add_row({cell_int(q), v.real(), v.imag(), 0.0});
        }
        if (mu) {
            const cplx v = pseudoheat::lft_hitting(rs, dir, lam, *mu, x, a);
            t.add_row({cell_int(-1), v.real(), v.imag(), 0.0});
        }
    } else {
        // Crossing-place law: weight of the q-th derivative atom at the
        // barrier; with --mu also its Fourier transform as a q = -1 row.
        for (int q = 0; q < card; ++q) {
            const double w = pseudoheat::hitting_place_weight(rs, dir, q, x, a);
            t.add_row({cell_int(q), w, 0.0, 0.0});
        }
        if (mu) {
            const cplx v = pseudoheat::ft_hitting_place(rs, dir, *mu, x, a);
            t.add_row({cell_int(-1), v.real(), v.imag(), 0.0});
        }
    }
    pseudoheat::io::write_table(t, pseudoheat::io::parse_format(cfg.format),
                                cfg.out_path);
    return 0;
}

int run_invert(const RunConfig& cfg, const std::string& transform, double tt) {
    if (!(tt > 0.0)) throw pseudoheat::invalid_query("--t must be positive");
    std::function<cplx(cplx)> F;
    double exact = 0.0;
    if (transform == "recip") {
        F = [](cplx s) { return 1.0 / s; };
        exact = 1.0;
    } else if (transform == "recip-sq") {
        F = [](cplx s) { return 1.0 / (s * s); };
        exact = tt;
    } else if (transform == "exp-sqrt") {
        F = [](cplx s) { return std::exp(-std::sqrt(s)); };
        exact = std::pow(tt, -1.5) * std::exp(-0.25 / tt) /
                (2.0 * std::sqrt(std::acos(-1.0)));
    } else {
        throw pseudoheat::invalid_query(
            "--transform must be one of recip, recip-sq, exp-sqrt");
    }
    pseudoheat::TalbotConfig tc;
    tc.M = cfg.talbot_nodes;
    const auto r = pseudoheat::talbot_invert(F, tt, tc);
    pseudoheat::io::Table t;
    t.columns = {"transform", "t", "value", "exact", "abs_error", "est_error"};
    t.add_row({transform, tt, r.value, exact, std::abs(r.value - exact),
               r.error});
    pseudoheat::io::write_table(t, pseudoheat::io::parse_format(cfg.format),
                                cfg.out_path);
    return 0;
}

int run_lattice_check(const RunConfig& cfg, const pseudoheat::ParamSet& ps,
                      const pseudoheat::RootSystem& rs, std::vector<int> ns,
                      double grid_min, double grid_max, int points,
                      double lambda, double mu, double nu,
                      std::optional<double> a) {
    if (!(lambda > 0.0))
        throw pseudoheat::invalid_query("--lambda must be positive");
    if (ns.empty()) ns = {6};
    pseudoheat::io::Table t;
    t.columns = {"n",         "oracle_re", "oracle_im",
                 "closed_re", "closed_im", "abs_error"};
    const cplx lam(lambda, 0.0);
    for (int n : ns) {
        pseudoheat::LatticeConfig lc;
        lc.grid_min = grid_min;
        lc.grid_max = grid_max;
        lc.points = points;
        lc.n = n;
        const auto lat = pseudoheat::build_lattice(ps, lc);
        cplx oracle, closed;
        if (a) {
            // First-passage transform across the barrier at `a`, started at 0.
            oracle = pseudoheat::first_passage_transform(lat, lambda, mu, 0.0,
                                                         *a);
            closed = pseudoheat::lft_hitting(
                rs, pseudoheat::Crossing::upward, lam, mu, 0.0, *a);
        } else {
            // Joint position/running-maximum functional, started at 0.
            oracle =
                pseudoheat::expect_max_functional(lat, lambda, mu, nu, 0.0);
            closed = pseudoheat::lft_extrema(rs, lam, mu, nu, 0.0,
                                             pseudoheat::Extremum::maximum);
        }
        t.add_row({cell_int(n), oracle.real(), oracle.imag(), closed.real(),
                   closed.imag(), std::abs(oracle - closed)});
    }
    pseudoheat::io::write_table(t, pseudoheat::io::parse_format(cfg.format),
                                cfg.out_path);
    return 0;
}

int run_verify_all(const RunConfig& cfg, const pseudoheat::ParamSet& ps) {
    const auto checks = pseudoheat::verify_all(ps, cfg.seed);
    pseudoheat::io::Table t;
    t.columns = {"name", "residual", "tolerance", "status"};
    for (const auto& c : checks)
        t.add_row({c.name, c.residual, c.tolerance,
                   std::string(c.pass ? "pass" : "FAIL")});
    pseudoheat::io::write_table(t, pseudoheat::io::parse_format(cfg.format),
                                cfg.out_path);
    if (!pseudoheat::all_pass(checks)) {
        for (const auto& c : checks)
            if (!c.pass)
                std::cerr << "verification failed: " << c.name << " residual "
                          << pseudoheat::io::format_double(c.residual)
                          << " exceeds tolerance "
                          << pseudoheat::io::format_double(c.tolerance)
                          << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    CLI::App app{"pseudo-heat process laws: kernels, extrema, hitting times"};
    app.require_subcommand(1);
    app.add_option("--format", cfg.format, "output format: csv or json")
        ->capture_default_str();
    app.add_option("--out", cfg.out_path, "output file (default: stdout)");
    app.add_option("--talbot-nodes", cfg.talbot_nodes,
                   "node count for the Laplace inversion contour")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized residual sweeps")
        ->capture_default_str();

    // Per-subcommand state.  kappa is optional for even N (the sign is
    // forced) and required for odd N; make_params enforces consistency.
    int kappa_val = 0;
    double t_val = 0.0, lambda_val = 0.0, mu_val = 0.0, nu_val = 0.0;
    double x_val = 0.0, y_val = 0.0, z_val = 0.0, a_val = 0.0;
    double xi_min = -5.0, xi_max = 5.0;
    int steps = 101, points = 400;
    std::vector<int> ns;
    double grid_min = -8.0, grid_max = 7.96;
    std::string which = "max", domain = "laplace", sign = "up";
    std::string transform = "recip";

    auto add_system_flags = [&](CLI::App* sub, bool n_required) {
        auto* n_opt = sub->add_option("--N", cfg.N, "pseudo-process order");
        if (n_required) n_opt->required();
        sub->add_option("--kappa", kappa_val,
                        "diffusivity sign (+1/-1); forced for even N");
        sub->fallthrough();
        return sub;
    };

    auto* sc_roots = add_system_flags(
        app.add_subcommand("roots", "root system, sets J/K, A/B coefficients"),
        true);
    auto* sc_ident = add_system_flags(
        app.add_subcommand("identities",
                           "algebraic identity residual battery"),
        true);

    auto* sc_kernel = add_system_flags(
        app.add_subcommand("kernel", "sample the signed kernel p(t; xi)"),
        true);
    sc_kernel->add_option("--t", t_val, "elapsed time")->required();
    sc_kernel->add_option("--xi-min", xi_min, "left end of the xi grid")
        ->required();
    sc_kernel->add_option("--xi-max", xi_max, "right end of the xi grid")
        ->required();
    sc_kernel->add_option("--steps", steps, "number of rows (grid points)")
        ->required();

    auto* sc_ext = add_system_flags(
        app.add_subcommand("extrema",
                           "joint law of position and running max/min"),
        true);
    auto* ext_t = sc_ext->add_option("--t", t_val, "elapsed time");
    auto* ext_l = sc_ext->add_option("--lambda", lambda_val,
                                     "Laplace variable in time");
    ext_t->excludes(ext_l);
    ext_l->excludes(ext_t);
    sc_ext->add_option("--x", x_val, "position argument")->required();
    sc_ext->add_option("--y", y_val, "starting point")->required();
    sc_ext->add_option("--z", z_val, "extremum barrier level")->required();
    sc_ext->add_option("--which", which, "max or min")->required();
    sc_ext->add_option("--domain", domain, "laplace or time")->required();

    auto* sc_hit = add_system_flags(
        app.add_subcommand("hitting",
                           "first-crossing time/place laws by multipole"),
        true);
    sc_hit->add_option("--a", a_val, "barrier level")->required();
    sc_hit->add_option("--x", x_val, "starting point")->required();
    sc_hit->add_option("--sign", sign, "crossing direction: up or down")
        ->required();
    auto* hit_t = sc_hit->add_option("--t", t_val, "elapsed time");
    auto* hit_l =
        sc_hit->add_option("--lambda", lambda_val, "Laplace variable in time");
    hit_t->excludes(hit_l);
    hit_l->excludes(hit_t);
    auto* hit_mu =
        sc_hit->add_option("--mu", mu_val, "Fourier variable in space");

    auto* sc_inv = app.add_subcommand(
        "invert", "Laplace inversion on built-in reference transforms");
    sc_inv->fallthrough();
    sc_inv->add_option("--transform", transform,
                       "one of: recip, recip-sq, exp-sqrt")
        ->required();
    sc_inv->add_option("--t", t_val, "evaluation time")->required();

    auto* sc_lat = add_system_flags(
        app.add_subcommand("lattice-check",
                           "signed-lattice oracle vs closed forms"),
        true);
    sc_lat->add_option("--n", ns, "refinement levels (dt = 2^-n)");
    sc_lat->add_option("--grid-min", grid_min, "lattice lower edge")
        ->capture_default_str();
    sc_lat->add_option("--grid-max", grid_max, "lattice upper edge")
        ->capture_default_str();
    sc_lat->add_option("--points", points, "lattice point count")
        ->capture_default_str();
    sc_lat->add_option("--lambda", lambda_val, "Laplace variable in time")
        ->required();
    sc_lat->add_option("--mu", mu_val, "Fourier variable for the position")
        ->capture_default_str();
    sc_lat->add_option("--nu", nu_val,
                       "exponential tilt for the running maximum")
        ->capture_default_str();
    auto* lat_a = sc_lat->add_option(
        "--a", a_val, "barrier level: check first passage instead");

    auto* sc_ver = add_system_flags(
        app.add_subcommand("verify-all", "run the full invariant suite"),
        true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (const char* env = std::getenv("PSEUDOHEAT_QUAD_BUDGET")) {
        char* end = nullptr;
        const long long budget = std::strtoll(env, &end, 10);
        if (end == env || budget <= 0) {
            std::cerr << "PSEUDOHEAT_QUAD_BUDGET must be a positive integer\n";
            return 2;
        }
        pseudoheat::quad::set_budget(budget);
    }

    try {
        const CLI::App* sub = app.get_subcommands().front();
        cfg.subcommand = sub->get_name();

        if (sub == sc_inv) return run_invert(cfg, transform, t_val);

        const std::optional<int> kappa =
            sub->count("--kappa") ? std::optional<int>(kappa_val)
                                  : std::nullopt;
        const auto ps = pseudoheat::make_params(cfg.N, kappa);
        const auto rs = pseudoheat::build_root_system(ps);

        if (sub == sc_roots) return run_roots(cfg, rs);
        if (sub == sc_ident) return run_identities(cfg, rs);
        if (sub == sc_kernel)
            return run_kernel(cfg, ps, t_val, xi_min, xi_max, steps);
        if (sub == sc_ext)
            return run_extrema(cfg, rs,
                               ext_t->count() ? std::optional<double>(t_val)
                                              : std::nullopt,
                               ext_l->count()
                                   ? std::optional<double>(lambda_val)
                                   : std::nullopt,
                               x_val, y_val, z_val, which, domain);
        if (sub == sc_hit)
            return run_hitting(cfg, rs, a_val, x_val, sign,
                               hit_t->count() ? std::optional<double>(t_val)
                                              : std::nullopt,
                               hit_l->count()
                                   ? std::optional<double>(lambda_val)
                                   : std::nullopt,
                               hit_mu->count() ? std::optional<double>(mu_val)
                                               : std::nullopt);
        if (sub == sc_lat)
            return run_lattice_check(cfg, ps, rs, ns, grid_min, grid_max,
                                     points, lambda_val, mu_val, nu_val,
                                     lat_a->count()
                                         ? std::optional<double>(a_val)
                                         : std::nullopt);
        if (sub == sc_ver) return run_verify_all(cfg, ps);
        std::cerr << "unknown subcommand\n";
        return 2;
    } catch (const pseudoheat::invalid_query& e) {
        std::cerr << "invalid query: " << e.what() << "\n";
        return 2;
    } catch (const pseudoheat::unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
