#include "holo/cli/figures.hpp"

#include <cmath>
#include <numbers>

#include "holo/approx.hpp"
#include "holo/parallel.hpp"
#include "holo/spectrum.hpp"
#include "holo/stock.hpp"

namespace holo::cli {

namespace {

const char* kSection = "figure";

std::string tau_label(const Config& cfg, std::size_t i, Complex tau) {
    if (cfg.has(kSection, "n")) return "n" + std::to_string(cfg.get_ints(kSection, "n")[i]);
    (void)tau;
    return "tau" + std::to_string(i + 1);
}

}  // namespace

std::vector<std::filesystem::path> write_sigma(const Config& cfg, const std::string& section,
                                               const std::filesystem::path& out) {
    const double beta = cfg.get_double(section, "beta", 1.0);
    const double step = cfg.get_double(section, "step", 0.05);
    const double re_min = cfg.get_double(section, "re_min", -4.0);
    const double re_max = cfg.get_double(section, "re_max", 4.0);
    const double im_min = cfg.get_double(section, "im_min", -4.0);
    const double im_max = cfg.get_double(section, "im_max", 4.0);
    const std::string prefix = cfg.get_string(section, "name", std::string("sigma"));
    if (!(beta > 0.0) || !(step > 0.0) || re_max < re_min || im_max < im_min)
        throw ConfigError(cfg.section_line(section), "sigma window needs beta > 0, step > 0 and min <= max");
    csv::Table t;
    t.comment = "sigma beta=" + csv::label(beta) + " step=" + csv::label(step) + " k=-1 means infinite";
    t.columns = {"re", "im", "k"};
    for (const SigmaCell& c : sigma_map(beta, re_min, re_max, im_min, im_max, step))
        t.rows.push_back({c.re, c.im, static_cast<double>(c.k)});
    const auto path = out / (prefix + ".csv");
    csv::write_atomic(path, t.render());
    return {path};
}

csv::Table Curve::table() const {
    csv::Table t;
    t.comment = "map=" + name + " r=" + csv::label(r);
    t.columns = {"theta", "re", "im"};
    t.rows.reserve(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) t.rows.push_back({theta[j], w[j].real(), w[j].imag()});
    return t;
}

Curve sample_curve(std::string name, std::string stem, const HoloMap& m, double r, int n_theta) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("curve radius must lie in (0, 1)");
    if (n_theta < 1) throw DomainError("n_theta must be positive");
    Curve c{std::move(name), std::move(stem), m, r, {}, {}};
    c.theta.resize(static_cast<std::size_t>(n_theta));
    c.w.resize(static_cast<std::size_t>(n_theta));
    parallel_for(c.w.size(), [&](std::size_t j) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / n_theta;
        c.theta[j] = th;
        c.w[j] = m(std::polar(r, th));
    });
    return c;
}

std::vector<Curve> figure_curves(const Config& cfg) {
    if (!cfg.has_section(kSection)) throw ConfigError(0, "missing [figure] section");
    const int line = cfg.section_line(kSection);
    const std::string family = cfg.get_string(kSection, "family");
    const double r = cfg.get_double(kSection, "r", 0.99);
    const int n_theta = cfg.get_int(kSection, "n_theta", 512);
    const bool include_base = cfg.get_bool(kSection, "include_base", true);
    const std::string prefix = cfg.get_string(kSection, "name", family);
    if (!(r > 0.0 && r < 1.0)) throw ConfigError(line, "[figure] r must lie in (0, 1)");
    if (n_theta < 1) throw ConfigError(line, "[figure] n_theta must be positive");

    const HoloMap z = HoloMap::identity();
    std::vector<std::pair<std::string, HoloMap>> maps;  // (label, map), base first
    std::vector<Complex> taus;
    if (family != "stock") taus = cfg.get_tau_sequence(kSection);

    if (family == "example2-approx") {
        const Complex gamma = cfg.get_complex(kSection, "gamma", Complex{1.0, 0.0});
        const CaratheodoryFn q = certify_positive(stock_map("example2-approx"));
        if (!approx_config(q, gamma).admissible)
            throw ConfigError(line, "[figure] gamma " + format_complex(gamma) + " is not admissible for q = 1 - z");
        const CaratheodoryFn rr = build_r(q, gamma);
        if (include_base) maps.emplace_back("base", q.map());
        for (std::size_t i = 0; i < taus.size(); ++i)
            maps.emplace_back(tau_label(cfg, i, taus[i]), build_q_tau(rr, gamma, taus[i]).map());
    } else if (family == "example3-perturb") {
        const Complex mu = cfg.get_complex(kSection, "mu", Complex{0.8, 0.0});
        const SpirallikeFn h{stock_map("example3-perturb"), 0.8, z - 1.0, 1.0};
        if (!in_omega_plus(mu, 1.0))
            throw ConfigError(line, "[figure] mu " + format_complex(mu) + " is outside the admissible region");
        if (include_base) maps.emplace_back("base", h.h);
        for (std::size_t i = 0; i < taus.size(); ++i)
            maps.emplace_back(tau_label(cfg, i, taus[i]), perturb(h, mu, taus[i]).h);
    } else if (family == "example1") {
        if (include_base) maps.emplace_back("base", stock_map("example1"));
        for (std::size_t i = 0; i < taus.size(); ++i)
            maps.emplace_back(tau_label(cfg, i, taus[i]), koenigs(example1_generator(taus[i]), 1.0 + taus[i]).h);
    } else if (family == "stock") {
        const std::string list = cfg.get_string(kSection, "maps");
        std::string cur;
        for (char ch : list + " ") {
            if (ch == ' ' || ch == ';' || ch == '\t') {
                if (!cur.empty()) {
                    try {
                        maps.emplace_back(cur, stock_map(cur));
                    } catch (const DomainError& e) {
                        throw ConfigError(line, e.what());
                    }
                }
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (maps.empty()) throw ConfigError(line, "[figure] maps is empty");
    } else {
        throw ConfigError(line, "[figure] unknown family '" + family + "'");
    }

    std::vector<Curve> curves;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        const auto& [label, m] = maps[i];
        std::string name = family == "stock" ? label : family + ":" + label;
        if (family != "stock" && label != "base") {
            const std::size_t k = i - (include_base ? 1 : 0);
            name += ":tau=" + format_complex(taus[k]);
        }
        curves.push_back(sample_curve(name, prefix + "_" + label, m, r, n_theta));
    }
    return curves;
}

std::vector<std::filesystem::path> write_figure(const Config& cfg, const std::filesystem::path& out_dir) {
    cfg.require_known(kSection, {"family", "kind", "name", "r", "n_theta", "include_base", "svg", "gamma", "mu",
                                 "taus", "tau_scale", "n", "maps", "beta", "step", "re_min", "re_max", "im_min",
                                 "im_max"});
    const std::string kind = cfg.get_string(kSection, "kind", std::string("curves"));
    if (kind == "sigma") return write_sigma(cfg, kSection, out_dir);
    if (kind != "curves") throw ConfigError(cfg.section_line(kSection), "[figure] unknown kind '" + kind + "'");
    const bool svg = cfg.get_bool(kSection, "svg", false);
    std::vector<std::filesystem::path> written;
    std::vector<std::vector<Complex>> all;
    for (const Curve& c : figure_curves(cfg)) {
        const auto path = out_dir / (c.stem + ".csv");
        csv::write_atomic(path, c.table().render());
        written.push_back(path);
        if (svg) {
            const auto svg_path = out_dir / (c.stem + ".svg");
            csv::write_atomic(svg_path, csv::render_svg({c.w}));
            written.push_back(svg_path);
        }
        all.push_back(c.w);
    }
    if (svg && all.size() > 1) {
        const auto path = out_dir / (cfg.get_string(kSection, "name", cfg.get_string(kSection, "family")) + ".svg");
        csv::write_atomic(path, csv::render_svg(all));
        written.push_back(path);
    }
    return written;
}

}  // namespace holo::cli
