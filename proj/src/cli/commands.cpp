#include "holo/cli/commands.hpp"

#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "holo/approx.hpp"
#include "holo/cli/config.hpp"
#include "holo/cli/figures.hpp"
#include "holo/cli/invariants.hpp"
#include "holo/flow.hpp"
#include "holo/parallel.hpp"
#include "holo/spectrum.hpp"
#include "holo/stock.hpp"

namespace holo::cli {

namespace {

Config need_config(const Options& opts) {
    if (!opts.config) throw Error("this command needs --config <path>");
    return Config::load(*opts.config);
}

HoloMap stock_or_config_error(const Config& cfg, const std::string& section, const std::string& key) {
    const std::string name = cfg.get_string(section, key);
    try {
        return stock_map(name);
    } catch (const DomainError& e) {
        throw ConfigError(cfg.section_line(section), e.what());
    }
}

// Runs a command body and turns errors into exit code 2.
int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

void report_written(std::ostream& out, const std::vector<std::filesystem::path>& paths) {
    for (const auto& p : paths) out << "wrote " << p.string() << '\n';
}

}  // namespace

int cmd_check(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        set_thread_count(opts.threads);
        int failures = 0;
        for (const InvariantOutcome& o : run_invariants(opts.tolerance_scale)) {
            out << format_outcome(o) << '\n';
            if (!o.pass) ++failures;
        }
        out.flush();
        return failures == 0 ? 0 : 1;
    });
}

int cmd_figure(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        set_thread_count(opts.threads);
        report_written(out, write_figure(need_config(opts), opts.out_dir));
        return 0;
    });
}

int cmd_approx(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        set_thread_count(opts.threads);
        const Config cfg = need_config(opts);
        const std::string s = "approx";
        if (!cfg.has_section(s)) throw ConfigError(0, "missing [approx] section");
        cfg.require_known(s, {"family", "map", "target", "gamma", "mu", "taus", "tau_scale", "n", "compacts", "name"});
        const std::string family = cfg.get_string(s, "family", std::string("f"));
        const HoloMap base = stock_or_config_error(cfg, s, "map");
        const HoloMap target = cfg.has(s, "target") ? stock_or_config_error(cfg, s, "target") : base;
        const std::vector<Complex> taus = cfg.get_tau_sequence(s);
        const std::vector<double> radii = cfg.get_doubles(s, "compacts", std::vector<double>{0.5, 0.9});
        for (double r : radii)
            if (!(r > 0.0 && r < 1.0)) throw ConfigError(cfg.section_line(s), "[approx] compacts must lie in (0, 1)");

        std::optional<ApproximantFamily> fam;
        Complex parameter;
        if (family == "f") {
            parameter = cfg.get_complex(s, "mu", Complex{1.0, 0.0});
            fam = ApproximantFamily::f_family(base, parameter);
        } else if (family == "q") {
            parameter = cfg.get_complex(s, "gamma", Complex{1.0, 0.0});
            fam = ApproximantFamily::q_family(certify_positive(base), parameter);
        } else if (family == "p") {
            parameter = cfg.get_complex(s, "mu", Complex{1.0, 0.0});
            fam = ApproximantFamily::p_family(certify_positive(base), parameter);
        } else {
            throw ConfigError(cfg.section_line(s), "[approx] family must be f, q or p");
        }
        std::vector<DiskGrid> compacts;
        for (double r : radii) compacts.push_back(DiskGrid::compact(r));

        csv::Table t;
        t.comment = "approx family=" + family + " map=" + cfg.get_string(s, "map") +
                    " parameter=" + format_complex(parameter) + " columns=sup error over |z|<=r";
        t.columns = {"tau_re", "tau_im"};
        for (double r : radii) t.columns.push_back("sup_r" + csv::label(r));
        for (const ConvergenceRow& row : convergence_report(*fam, target, taus, compacts)) {
            std::vector<double> v = {row.tau.real(), row.tau.imag()};
            v.insert(v.end(), row.sup_error.begin(), row.sup_error.end());
            t.rows.push_back(std::move(v));
        }
        const auto path = opts.out_dir / (cfg.get_string(s, "name", std::string("approx")) + ".csv");
        csv::write_atomic(path, t.render());
        report_written(out, {path});
        return 0;
    });
}

int cmd_flow(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        set_thread_count(opts.threads);
        const Config cfg = need_config(opts);
        const std::string s = "flow";
        if (!cfg.has_section(s)) throw ConfigError(0, "missing [flow] section");
        cfg.require_known(s, {"generator", "tau", "z0", "T", "samples", "name"});
        const std::string gen = cfg.get_string(s, "generator");
        const HoloMap f = gen == "example1" ? example1_generator(cfg.get_complex(s, "tau"))
                                            : stock_or_config_error(cfg, s, "generator");
        const Complex z0 = cfg.get_complex(s, "z0", Complex{0.0, 0.0});
        const double T = cfg.get_double(s, "T", 1.0);
        const int samples = cfg.get_int(s, "samples", 101);
        if (!(std::abs(z0) < 1.0)) throw ConfigError(cfg.section_line(s), "[flow] z0 must lie in the unit disk");
        if (!(T >= 0.0)) throw ConfigError(cfg.section_line(s), "[flow] T must be nonnegative");
        if (samples < 2) throw ConfigError(cfg.section_line(s), "[flow] samples must be at least 2");
        std::vector<double> times;
        for (int i = 1; i + 1 < samples; ++i) times.push_back(T * i / (samples - 1));
        const Trajectory traj = integrate_flow(f, z0, T, times);

        const std::string name = cfg.get_string(s, "name", std::string("trajectory"));
        csv::Table t;
        t.comment = "flow generator=" + gen + " z0=" + format_complex(z0) + " T=" + csv::label(T);
        t.columns = {"t", "re", "im"};
        for (std::size_t i = 0; i < traj.size(); ++i) t.rows.push_back({traj.t[i], traj.z[i].real(), traj.z[i].imag()});
        std::vector<std::filesystem::path> written = {opts.out_dir / (name + ".csv")};
        csv::write_atomic(written.back(), t.render());
        out << "final z(" << csv::label(T) << ") = " << format_complex(traj.back()) << '\n';

        if (cfg.has_section("stability")) {
            const std::string st = "stability";
            cfg.require_known(st, {"mu", "taus", "tau_scale", "n", "T", "radius", "name"});
            const Complex mu = cfg.get_complex(st, "mu", Complex{1.0, 0.0});
            const double radius = cfg.get_double(st, "radius", 0.5);
            if (!(radius > 0.0 && radius < 1.0))
                throw ConfigError(cfg.section_line(st), "[stability] radius must lie in (0, 1)");
            const auto rows = stability_table(f, mu, cfg.get_tau_sequence(st), cfg.get_double(st, "T", 2.0),
                                              DiskGrid::compact(radius));
            csv::Table tt;
            tt.comment = "stability generator=" + gen + " mu=" + format_complex(mu) + " radius=" + csv::label(radius);
            tt.columns = {"tau_re", "tau_im", "sup_error"};
            for (const StabilityRow& r : rows) tt.rows.push_back({r.tau.real(), r.tau.imag(), r.sup_error});
            written.push_back(opts.out_dir / (cfg.get_string(st, "name", std::string("stability")) + ".csv"));
            csv::write_atomic(written.back(), tt.render());
        }
        report_written(out, written);
        return 0;
    });
}

int cmd_spectrum(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Config cfg = need_config(opts);
        if (!cfg.has_section("spectrum")) throw ConfigError(0, "missing [spectrum] section");
        cfg.require_known("spectrum", {"beta", "re_min", "re_max", "im_min", "im_max", "step", "name"});
        report_written(out, write_sigma(cfg, "spectrum", opts.out_dir));
        return 0;
    });
}

int cmd_valence(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        set_thread_count(opts.threads);
        const Config cfg = need_config(opts);
        const std::string s = "valence";
        if (!cfg.has_section(s)) throw ConfigError(0, "missing [valence] section");
        cfg.require_known(s, {"map", "lambda", "beta", "radii", "targets", "initial_nodes", "name"});
        HoloMap h;
        std::string label;
        std::optional<ValenceCell> predicted;
        if (cfg.has(s, "lambda")) {
            if (cfg.has(s, "map")) throw ConfigError(cfg.section_line(s), "[valence] give either map or lambda");
            const Complex lambda = cfg.get_complex(s, "lambda");
            const double beta = cfg.get_double(s, "beta", 1.0);
            if (!(beta > 0.0)) throw ConfigError(cfg.section_line(s), "[valence] beta must be positive");
            // Eigenfunction of the generator beta (z - 1); the minus region is counted on 1/h.
            const Eigenfunction e = eigenfunction({beta * (HoloMap::identity() - 1.0), std::nullopt, lambda});
            h = lambda.real() < 0.0 ? reciprocal_of(e.h) : e.h;
            label = "lambda=" + format_complex(lambda) + " beta=" + csv::label(beta);
            predicted = classify_lambda(lambda, beta);
        } else {
            h = stock_or_config_error(cfg, s, "map");
            label = "map=" + cfg.get_string(s, "map");
        }
        const std::vector<double> radii = cfg.get_doubles(s, "radii", std::vector<double>{0.99});
        const int targets = cfg.get_int(s, "targets", 200);
        ValenceOptions vo;
        vo.seed = opts.seed;
        vo.initial_nodes = cfg.get_int(s, "initial_nodes", vo.initial_nodes);
        if (targets < 1) throw ConfigError(cfg.section_line(s), "[valence] targets must be positive");
        for (double r : radii)
            if (!(r > 0.0 && r < 1.0)) throw ConfigError(cfg.section_line(s), "[valence] radii must lie in (0, 1)");

        csv::Table t;
        t.comment = "valence " + label + " seed=" + std::to_string(opts.seed);
        if (predicted) t.comment += " predicted_k=" + (predicted->infinite() ? std::string("inf") : std::to_string(*predicted->k));
        t.columns = {"r", "valence", "targets", "counted"};
        for (double r : radii) {
            const ValenceReport rep = measure_valence_report(h, r, targets, vo);
            t.rows.push_back({r, double(rep.valence), double(rep.targets), double(rep.counted)});
            out << "r=" << csv::label(r) << " valence=" << rep.valence << " counted=" << rep.counted << "/"
                << rep.targets << '\n';
        }
        const auto path = opts.out_dir / (cfg.get_string(s, "name", std::string("valence")) + ".csv");
        csv::write_atomic(path, t.render());
        report_written(out, {path});
        return 0;
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical experiments with holomorphic maps of the unit disk", "holodisk"};
    app.require_subcommand(1, 1);
    Options opts;
    std::string config;
    std::string out_dir = ".";
    const auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* c = sub->add_option("--config", config, "experiment config file");
        if (needs_config) c->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--threads", opts.threads, "worker threads for grid sweeps")->check(CLI::Range(1, 256));
        sub->add_option("--seed", opts.seed, "seed for valence target sampling");
    };
    auto* check = app.add_subcommand("check", "run the invariant suite");
    add_common(check, false);
    check->add_option("--tolerance-scale", opts.tolerance_scale, "multiply every threshold (0 forces failures)")
        ->check(CLI::NonNegativeNumber);
    struct Sub {
        const char* name;
        const char* help;
        int (*fn)(const Options&, std::ostream&, std::ostream&);
    };
    const Sub subs[] = {{"figure", "write figure curves as CSV/SVG", cmd_figure},
                        {"approx", "write an approximation convergence table", cmd_approx},
                        {"flow", "integrate a semigroup trajectory", cmd_flow},
                        {"spectrum", "write the valence regions of the lambda plane", cmd_spectrum},
                        {"valence", "measure the valence of a map", cmd_valence}};
    for (const Sub& s : subs) add_common(app.add_subcommand(s.name, s.help), true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        const int code = app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return code == 0 ? 0 : 2;
    }
    if (!config.empty()) opts.config = config;
    opts.out_dir = out_dir;
    if (check->parsed()) return cmd_check(opts, out, err);
    for (const Sub& s : subs)
        if (app.get_subcommand(s.name)->parsed()) return s.fn(opts, out, err);
    return 2;
}

}  // namespace holo::cli
