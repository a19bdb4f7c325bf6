// cli.cpp — subcommands wrapping the network-analysis operations

#include "omech/cli.hpp"

#include <cmath>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "omech/network.hpp"
#include "omech/output.hpp"

namespace omech::cli {

namespace {

struct CommonArgs {
    std::string config_path;
    std::string output_path;  // empty = stdout
    std::string format = "csv";
    int precision = 9;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "configuration file (key = value lines)");
    cmd->add_option("-o,--output", args.output_path, "output path (default: stdout)");
    cmd->add_option("--format", args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--precision", args.precision, "significant digits for floats")
        ->check(CLI::Range(1, 17));
    cmd->add_option("--seed", args.seed, "random seed");
}

struct Context {
    RunConfig config;
    std::vector<om::SiteParams> sites2;
    std::vector<om::SiteParams> sites3;
    om::SpectralConfig spectral;
};

Context make_context(const CommonArgs& args) {
    Context ctx;
    ctx.config = args.config_path.empty() ? RunConfig{} : load_config_file(args.config_path);
    const std::string warning = ctx.config.site().validate();
    if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
    ctx.sites2.assign(2, ctx.config.site());
    ctx.sites3.assign(3, ctx.config.site());
    ctx.spectral = ctx.config.spectral();
    return ctx;
}

void emit(const Table& table, const CommonArgs& args, const Context& ctx,
          const std::string& command) {
    OutputMeta meta{command, args.seed, kVersion};
    const std::string content = args.format == "json"
                                    ? to_json(table, ctx.config, meta, args.precision)
                                    : to_csv(table, args.precision);
    write_file(args.output_path, content);
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        out[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1.0);
    }
    return out;
}

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        out[i] = n == 1 ? lo : lo * std::pow(hi / lo, i / (n - 1.0));
    }
    return out;
}

// ---- subcommand bodies -----------------------------------------------------

int cmd_two_mode(const CommonArgs& args, double s, double d, double g, double lambda,
                 std::optional<double> epsilon) {
    Context ctx = make_context(args);
    resource::TwoModeParams params{s, d, g, lambda};
    if (epsilon) params = resource::tmsv_from_entanglement(*epsilon);
    const auto entries = resource::two_mode_standard_form(params);
    const auto rec = net::distribution_point(entries, ctx.sites2, ctx.spectral);

    Table t;
    t.header = {"s", "d", "g", "lambda", "eps_in", "ln_out", "nu_min", "physical"};
    t.add_row({params.s, params.d, params.g, params.lambda, rec.input_entanglement,
               rec.output_entanglement, rec.min_pt_symplectic,
               static_cast<long long>(rec.physical ? 1 : 0)});
    emit(t, args, ctx, "two-mode");
    return kOk;
}

int cmd_three_mode(const CommonArgs& args, double a) {
    Context ctx = make_context(args);
    const auto res = net::three_mode_distribution(a, ctx.sites3, ctx.spectral);

    Table t;
    t.header = {"a",          "eps_in_1v1", "ln_out_1v1", "eps_in_1v2", "ln_out_1v2",
                "npt_1",      "npt_2",      "npt_3",      "verdict"};
    const auto& c = res.classification;
    t.add_row({a, res.pair.input_entanglement, res.pair.output_entanglement,
               res.one_two.input_entanglement, res.one_two.output_entanglement,
               static_cast<long long>(c.npt_flags[0] ? 1 : 0),
               static_cast<long long>(c.npt_flags[1] ? 1 : 0),
               static_cast<long long>(c.npt_flags[2] ? 1 : 0), net::to_string(c.verdict)});
    emit(t, args, ctx, "three-mode");
    return kOk;
}

int cmd_boundary(const CommonArgs& args, double eps_max, int steps) {
    Context ctx = make_context(args);
    const auto curve = net::boundary_curve(linspace(0.0, eps_max, steps), ctx.sites2,
                                           ctx.spectral);
    Table t;
    t.header = {"epsilon_in", "ln_out"};
    for (const auto& [eps, ln] : curve) t.add_row({eps, ln});
    emit(t, args, ctx, "boundary");
    return kOk;
}

int cmd_scan_purity(const CommonArgs& args, double s_min, double s_max, int s_steps,
                    double g_min, double g_max, int g_steps, bool find_death) {
    Context ctx = make_context(args);
    const auto s_grid = linspace(s_min, s_max, s_steps);
    const auto g_grid = linspace(g_min, g_max, g_steps);
    const Eigen::MatrixXd nu = net::purity_region_scan(s_grid, g_grid, ctx.sites2,
                                                       ctx.spectral);
    Table t;
    t.header = {"g", "s", "nu_min"};
    for (int gi = 0; gi < nu.rows(); ++gi) {
        for (int si = 0; si < nu.cols(); ++si) {
            if (std::isnan(nu(gi, si))) continue;  // outside the admissible wedge
            t.add_row({g_grid[gi], s_grid[si], nu(gi, si)});
        }
    }
    emit(t, args, ctx, "scan-purity");
    if (find_death) {
        const double g_death = net::purity_death_point(ctx.sites2, ctx.spectral);
        std::cerr << "g_death = " << g_death << "\n";
    }
    return kOk;
}

int cmd_sweep_temperature(const CommonArgs& args, double t_min, double t_max, int steps,
                          bool find_death) {
    Context ctx = make_context(args);
    const auto sweep = net::temperature_sweep(logspace(t_min, t_max, steps), ctx.sites2,
                                              ctx.spectral);
    Table t;
    t.header = {"temperature_k", "max_ln_out"};
    for (const auto& [temp, ln] : sweep) t.add_row({temp, ln});
    emit(t, args, ctx, "sweep-temperature");
    if (find_death) {
        const double t_death = net::thermal_death_point(ctx.sites2, ctx.spectral);
        std::cerr << "T_death = " << t_death << " K\n";
    }
    return kOk;
}

int cmd_optimize_s(const CommonArgs& args, double s_lo, double s_hi) {
    Context ctx = make_context(args);
    const auto opt = net::optimal_s(ctx.sites2, ctx.spectral, {s_lo, s_hi});
    Table t;
    t.header = {"s_star", "nu_min"};
    t.add_row({opt.s_star, opt.nu_min});
    emit(t, args, ctx, "optimize-s");
    std::cerr << "s* = " << opt.s_star << ", nu_min(s*) = " << opt.nu_min << "\n";
    return kOk;
}

int cmd_sample(const CommonArgs& args, int n, double s_max, double symmetric_fraction) {
    Context ctx = make_context(args);
    resource::SampleBounds bounds{s_max, symmetric_fraction};
    const auto exp = net::random_distribution_experiment(n, args.seed, bounds, ctx.sites2,
                                                         ctx.spectral);
    Table t;
    t.header = {"s", "d", "g", "lambda", "eps_in", "ln_out", "physical"};
    for (const auto& rec : exp.records) {
        t.add_row({rec.s, rec.d, rec.g, rec.lambda, rec.input_entanglement,
                   rec.output_entanglement, static_cast<long long>(rec.physical ? 1 : 0)});
    }
    emit(t, args, ctx, "sample");
    std::cerr << "entangled fraction: d=0 " << exp.summary.entangled_fraction_symmetric
              << ", |d|>(s-1)/2 " << exp.summary.entangled_fraction_asymmetric
              << " (failed: " << exp.summary.failed << ")\n";
    return kOk;
}

int cmd_classify(const CommonArgs& args, double a_min, double a_max, int steps) {
    Context ctx = make_context(args);
    Table t;
    t.header = {"a", "eps_in_1v2", "ln_out_1v2", "npt_1", "npt_2", "npt_3", "verdict"};
    for (double a : linspace(a_min, a_max, steps)) {
        const auto res = net::three_mode_distribution(a, ctx.sites3, ctx.spectral);
        const auto& c = res.classification;
        t.add_row({a, res.one_two.input_entanglement, res.one_two.output_entanglement,
                   static_cast<long long>(c.npt_flags[0] ? 1 : 0),
                   static_cast<long long>(c.npt_flags[1] ? 1 : 0),
                   static_cast<long long>(c.npt_flags[2] ? 1 : 0),
                   net::to_string(c.verdict)});
    }
    emit(t, args, ctx, "classify");
    return kOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"stationary mechanical entanglement distribution in driven optomechanical networks"};
    app.require_subcommand(1);

    CommonArgs common;

    // two-mode
    auto* two = app.add_subcommand("two-mode", "single two-mode resource through two sites");
    double s = 2.0, d = 0.0, g = 1.0, lambda = 1.0;
    std::optional<double> epsilon;
    add_common(two, common);
    two->add_option("--s", s, "single-mode variance scale (>= 1)");
    two->add_option("--d", d, "single-mode asymmetry");
    two->add_option("--g", g, "global-purity parameter (purity = 1/g)");
    two->add_option("--lambda", lambda, "entanglement parameter in [-1, 1]");
    two->add_option("--epsilon", epsilon, "TMSV input entanglement (overrides s,d,g,lambda)");

    // three-mode
    auto* three = app.add_subcommand("three-mode", "symmetric three-mode resource through three sites");
    double a = 2.0;
    add_common(three, common);
    three->add_option("--a", a, "local variance parameter (>= 1)");

    // boundary
    auto* boundary = app.add_subcommand("boundary", "TMSV output-vs-input entanglement curve");
    double eps_max = 3.5;
    int steps = 100;
    add_common(boundary, common);
    boundary->add_option("--eps-max", eps_max, "largest input entanglement");
    boundary->add_option("--steps", steps, "number of grid points")->check(CLI::PositiveNumber);

    // scan-purity
    auto* scan = app.add_subcommand("scan-purity", "nu_min over the (g, s) plane at d=0, lambda=1");
    double s_min = 1.05, scan_s_max = 10.0, g_min = 1.0, g_max = 6.0;
    int s_steps = 40, g_steps = 26;
    bool scan_death = false;
    add_common(scan, common);
    scan->add_option("--s-min", s_min);
    scan->add_option("--s-max", scan_s_max);
    scan->add_option("--s-steps", s_steps)->check(CLI::PositiveNumber);
    scan->add_option("--g-min", g_min);
    scan->add_option("--g-max", g_max);
    scan->add_option("--g-steps", g_steps)->check(CLI::PositiveNumber);
    scan->add_flag("--find-death", scan_death, "also bisect for the largest entangled g");

    // sweep-temperature
    auto* sweep = app.add_subcommand("sweep-temperature", "max output entanglement per bath temperature");
    double t_min = 1e-6, t_max = 5e-2;
    int t_steps = 20;
    bool sweep_death = false;
    add_common(sweep, common);
    sweep->add_option("--t-min", t_min, "lowest temperature (K)");
    sweep->add_option("--t-max", t_max, "highest temperature (K)");
    sweep->add_option("--steps", t_steps)->check(CLI::PositiveNumber);
    sweep->add_flag("--find-death", sweep_death, "also bisect for the largest entangled T");

    // optimize-s
    auto* opt = app.add_subcommand("optimize-s", "TMSV squeezing that minimizes the output nu_min");
    double s_lo = 1.05, s_hi = 6.0;
    add_common(opt, common);
    opt->add_option("--s-lo", s_lo, "bracket lower end");
    opt->add_option("--s-hi", s_hi, "bracket upper end");

    // sample
    auto* sample = app.add_subcommand("sample", "random mixed two-mode resources through the network");
    int n = 100;
    double sample_s_max = 5.0, symmetric_fraction = 0.5;
    add_common(sample, common);
    sample->add_option("--n", n, "number of samples")->check(CLI::PositiveNumber);
    sample->add_option("--s-max", sample_s_max, "upper bound for s");
    sample->add_option("--symmetric-fraction", symmetric_fraction,
                       "fraction of draws forced to d = 0")
        ->check(CLI::Range(0.0, 1.0));

    // classify
    auto* classify = app.add_subcommand("classify", "tripartite classification over an a-grid");
    double a_min = 1.1, a_max = 4.0;
    int a_steps = 16;
    add_common(classify, common);
    classify->add_option("--a-min", a_min);
    classify->add_option("--a-max", a_max);
    classify->add_option("--steps", a_steps)->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help();
            return kOk;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }

    try {
        if (two->parsed()) return cmd_two_mode(common, s, d, g, lambda, epsilon);
        if (three->parsed()) return cmd_three_mode(common, a);
        if (boundary->parsed()) return cmd_boundary(common, eps_max, steps);
        if (scan->parsed())
            return cmd_scan_purity(common, s_min, scan_s_max, s_steps, g_min, g_max, g_steps,
                                   scan_death);
        if (sweep->parsed())
            return cmd_sweep_temperature(common, t_min, t_max, t_steps, sweep_death);
        if (opt->parsed()) return cmd_optimize_s(common, s_lo, s_hi);
        if (sample->parsed()) return cmd_sample(common, n, sample_s_max, symmetric_fraction);
        if (classify->parsed()) return cmd_classify(common, a_min, a_max, a_steps);
        std::cerr << "error: unknown command\n";
        return kConfigError;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what()
                  << " (worst residual " << e.worst_residual << ")\n";
        return kConvergenceError;
    } catch (const PhysicsError& e) {
        std::cerr << "physics error: " << e.what() << "\n";
        return kPhysicsError;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kIoError;
    }
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args);
}

} // namespace omech::cli
