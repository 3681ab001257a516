#include "holo/cli/invariants.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "holo/approx.hpp"
#include "holo/cli/figures.hpp"
#include "holo/flow.hpp"
#include "holo/quadrature.hpp"
#include "holo/spectrum.hpp"
#include "holo/stock.hpp"

namespace holo::cli {

namespace {

using Fn = std::function<Complex(Complex)>;

const HoloMap& zz() {
    static const HoloMap z = HoloMap::identity();
    return z;
}

double sup_diff(const HoloMap& a, const Fn& b, const DiskGrid& g) {
    double w = 0.0;
    for (Complex p : g.points) w = std::max(w, std::abs(a(p) - b(p)));
    return w;
}

double shortfall(double min_re) { return std::max(0.0, -min_re); }

// Inputs of build_p_tau need a positive charge at 1.
std::vector<CaratheodoryFn> charged_p() {
    const HoloMap& z = zz();
    return {certify_positive(1.0 / (1.0 - z)), certify_positive((1.0 + z) / (1.0 - z)),
            certify_positive(1.0 / (1.0 - z) + 0.5 * z)};
}

std::vector<CaratheodoryFn> stock_p() {
    const HoloMap& z = zz();
    return {certify_positive(1.0 / (1.0 - z)), certify_positive((1.0 + z) / (1.0 - z)),
            certify_positive(1.0 + z)};
}

// --- holomap ---------------------------------------------------------------

double derivative_vs_fd() {
    const HoloMap& z = zz();
    const std::vector<HoloMap> maps = {principal_power(1.0 - z, 0.8), (1.0 + z) / (1.0 - z),
                                       exp(z) * (1.0 - z), koenigs(z - 1.0, Complex{1.0, 0.5}).h,
                                       log(2.0 + z) / (3.0 - z * z)};
    const double h = 1e-5;
    double worst = 0.0;
    for (const HoloMap& m : maps)
        for (Complex p : DiskGrid::standard().points) {
            const Complex d = derivative(m, p);
            const Complex fd = (m.jet_unchecked(p + h).value - m.jet_unchecked(p - h).value) / (2.0 * h);
            worst = std::max(worst, std::abs(d - fd) / (1.0 + std::abs(d)));
        }
    return worst;
}

double path_consistency() {
    const HoloMap& z = zz();
    double worst = 0.0;
    for (const HoloMap& f : {z - 1.0, -((1.0 - z) * (1.0 - z)) * ((1.0 + z) / (1.0 - z)), 2.0 + z * z}) {
        const Fn inv = [&](Complex w) { return 1.0 / f.jet_unchecked(w).value; };
        for (Complex p : {Complex{0.6, 0.2}, Complex{-0.4, 0.7}, Complex{0.9, 0.0}})
            for (double th : {0.3, -0.3}) {
                const Complex mid = p / 2.0 * std::polar(1.0, th);
                const Complex two_leg = quad::integrate_segment(inv, 0.0, mid) + quad::integrate_segment(inv, mid, p);
                worst = std::max(worst, std::abs(segment_integral_reciprocal(f, p) - two_leg));
            }
    }
    return worst;
}

double count_stable_in_r() {
    const HoloMap m = principal_power(1.0 - zz(), 3.0);
    return std::abs(count_preimages(m, -0.001, 0.97) - count_preimages(m, -0.001, 0.99));
}

double power_additivity() {
    const HoloMap m = 1.0 + 0.5 * zz() + 0.2 * zz() * zz();
    const Complex a{0.3, 0.2}, b{1.1, -0.4};
    const HoloMap lhs = principal_power(m, a) * principal_power(m, b);
    const HoloMap rhs = principal_power(m, a + b);
    double worst = 0.0;
    for (Complex p : DiskGrid::standard().points)
        if (m(p).real() > 0.0) worst = std::max(worst, std::abs(lhs(p) - rhs(p)));
    return worst;
}

// --- caratheodory ----------------------------------------------------------

double charge_consistency() {
    double worst = 0.0;
    for (const CaratheodoryFn& p : stock_p()) {
        const double a = charge(p, 1.0, ChargeMethod::RadialLimit).delta;
        const double b = charge(p, 1.0, ChargeMethod::InfForm).delta;
        worst = std::max(worst, std::abs(a - b));
    }
    return worst;
}

double reciprocal_involution() {
    double worst = 0.0;
    for (const CaratheodoryFn& p : stock_p()) {
        const CaratheodoryFn back = reciprocal(reciprocal(p));
        for (Complex w : DiskGrid::certification().points)
            worst = std::max(worst, std::abs(back(w) - p(w)) / std::max(1.0, std::abs(p(w))));
    }
    return worst;
}

double master_positivity() {
    const HoloMap& z = zz();
    const DiskGrid g = DiskGrid::standard();
    double worst = 0.0;
    const CaratheodoryFn q = certify_positive(1.0 - z);
    const CaratheodoryFn rr = build_r(q, 1.0);
    worst = std::max(worst, shortfall(certify_positive(rr.map(), g).certificate().min_re));
    for (Complex tau : {Complex{0.5}, Complex{0.9}, Complex{0.75, 0.25}}) {
        worst = std::max(worst, shortfall(certify_positive(build_q_tau(rr, 1.0, tau).map(), g).certificate().min_re));
        for (const CaratheodoryFn& p : charged_p())
            worst = std::max(worst, shortfall(certify_positive(build_p_tau(p, 1.0, tau).map(), g).certificate().min_re));
    }
    return worst;
}

// --- generators ------------------------------------------------------------

double roundtrip() {
    double worst = 0.0;
    const DiskGrid g = DiskGrid::certification();
    for (Complex tau : {Complex{0.0}, Complex{0.5}, Complex{0.0, 0.5}, Complex{1.0}})
        for (const CaratheodoryFn& p : {certify_positive(HoloMap::constant(1.0)), stock_p()[0], stock_p()[1]}) {
            const CaratheodoryFn back = decompose(assemble(tau, p).f(), tau);
            for (Complex w : g.points) worst = std::max(worst, std::abs(back(w) - p(w)) / std::max(1.0, std::abs(p(w))));
        }
    return worst;
}

double real_cone() {
    const auto ps = stock_p();
    double worst = 0.0;
    for (Complex tau : {Complex{0.5}, Complex{1.0}}) {
        const HoloMap f1 = assemble(tau, ps[0]).f();
        const HoloMap f2 = assemble(tau, ps[2]).f();
        for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{0.3, 2.0}, std::pair{0.0, 1.0}})
            worst = std::max(worst, shortfall(decompose(a * f1 + b * f2, tau).certificate().min_re));
    }
    return worst;
}

double beta_equals_charge() {
    double worst = 0.0;
    for (const CaratheodoryFn& p : stock_p()) {
        if (charge(p, 1.0).delta <= 0.0) continue;
        worst = std::max(worst, std::abs(boundary_derivative(assemble(1.0, p)) - charge(p, 1.0).delta));
    }
    return worst;
}

// --- approx ----------------------------------------------------------------

const std::vector<Complex>& matrix_taus() {
    static const std::vector<Complex> taus = {0.3, 0.7, 0.9, 0.99, Complex{0.0, 0.9}, Complex{0.5, 0.4}};
    return taus;
}

double approx_positivity() {
    const HoloMap& z = zz();
    const CaratheodoryFn q = certify_positive(1.0 - z);
    double worst = 0.0;
    for (Complex gamma : {Complex{1.0}, Complex{0.5, 1.0}}) {
        const CaratheodoryFn rr = build_r(q, gamma);
        for (Complex tau : matrix_taus())
            worst = std::max(worst, shortfall(build_q_tau(rr, gamma, tau).certificate().min_re));
    }
    for (const CaratheodoryFn& p : charged_p())
        for (Complex tau : matrix_taus())
            worst = std::max(worst, shortfall(build_p_tau(p, Complex{1.0, 0.5}, tau).certificate().min_re));
    return worst;
}

double interpolation() {
    const CaratheodoryFn q = certify_positive(1.0 - zz());
    double worst = 0.0;
    for (Complex gamma : {Complex{1.0}, Complex{0.5, 1.0}, Complex{2.0, -1.0}}) {
        const CaratheodoryFn rr = build_r(q, gamma);
        for (Complex tau : matrix_taus()) {
            const double s = 1.0 - std::norm(tau);
            worst = std::max(worst, std::abs(build_q_tau(rr, gamma, tau)(tau) - gamma * s));
        }
    }
    for (const CaratheodoryFn& p : charged_p())
        for (Complex mu : {Complex{1.0}, Complex{1.0, 0.5}})
            for (Complex tau : matrix_taus()) {
                const double s = 1.0 - std::norm(tau);
                worst = std::max(worst, std::abs(build_p_tau(p, mu, tau)(tau) - mu / s));
            }
    return worst;
}

double bp_coherence() {
    const HoloMap& z = zz();
    double worst = 0.0;
    for (const HoloMap& f : {z - 1.0, -((1.0 - z) * (1.0 - z)) * ((1.0 + z) / (1.0 - z))})
        for (Complex tau : {Complex{0.5}, Complex{0.3, 0.4}, Complex{0.9}}) {
            const Generator g = build_f_tau(f, 1.0, tau);
            const CaratheodoryFn back = decompose(g.f(), tau);
            for (Complex w : DiskGrid::standard().points) worst = std::max(worst, std::abs(back(w) - g.p()(w)));
        }
    return worst;
}

double derivative_limit() {
    double worst = 0.0;
    for (double t : {0.9, 0.99, 0.999}) {
        worst = std::max(worst, std::abs(boundary_derivative(build_f_tau(zz() - 1.0, 1.0, t)) - 1.0));
        const Complex d = derivative(example1_generator(t), t);
        worst = std::max(worst, std::abs(d - (1.0 + t)));
        if (!mu_admissible(d, 1.0)) worst = std::numeric_limits<double>::infinity();
    }
    return worst;
}

// --- spiral ----------------------------------------------------------------

double koenigs_ode() {
    const HoloMap& z = zz();
    double worst = 0.0;
    for (auto [f, mu] : std::vector<std::pair<HoloMap, Complex>>{
             {z - 1.0, 1.0}, {z - 1.0, Complex{1.0, 1.0}}, {-((1.0 - z) * (1.0 - z)) * ((1.0 + z) / (1.0 - z)), 3.0}})
        worst = std::max(worst, ode_residual(koenigs(f, mu).h, f, mu));
    return worst;
}

double perturb_consistency() {
    const HoloMap& z = zz();
    const SpirallikeFn h = koenigs(z - 1.0, 0.8);
    const CaratheodoryFn q = certify_positive(-((1.0 - z) * (1.0 - z)) / (z - 1.0));
    double worst = 0.0;
    for (Complex mu : {Complex{0.8}, Complex{1.0, 0.6}})
        for (Complex tau : {Complex{0.5}, Complex{0.2, -0.6}}) {
            const SpirallikeFn ht = perturb(h, mu, tau);
            const CaratheodoryFn qt = build_q_tau(build_r(q, 1.0 / mu), 1.0 / mu, tau);
            for (Complex w : DiskGrid::standard().points) {
                const Jet j = ht.h.jet(w);
                worst = std::max(worst, std::abs(mu * j.value * qt(w) - j.slope * (w - tau) * (1.0 - w * std::conj(tau))));
            }
        }
    return worst;
}

double power_transport() {
    const HoloMap& z = zz();
    const HoloMap f = -((1.0 - z) * (1.0 - z)) * ((1.0 + z) / (1.0 - z)) * 0.5;
    const Complex lambda{1.5, 0.5}, mu{0.7, -0.2};
    const HoloMap a = koenigs(f, mu).h;
    const HoloMap c = transported_power(koenigs(f, lambda).h, mu / lambda);
    double worst = 0.0;
    for (Complex w : DiskGrid::standard().points) worst = std::max(worst, std::abs(a(w) - c(w)) / std::max(1.0, std::abs(a(w))));
    return worst;
}

double example1_closed_form() {
    double worst = 0.0;
    for (double t : {0.5, 0.9, 0.999}) {
        const HoloMap ht = koenigs(example1_generator(t), 1.0 + t).h;
        worst = std::max(worst, sup_diff(ht, [t](Complex w) { return (t - w) * std::pow(1.0 - w * t, 1.0 / t) / t; },
                                         DiskGrid::compact(0.45)));
    }
    return worst;
}

double example1_limit() {
    const HoloMap ht = koenigs(example1_generator(0.999), 1.999).h;
    return sup_diff(ht, [](Complex w) { return (1.0 - w) * (1.0 - w); }, DiskGrid::compact(0.5));
}

// --- flow ------------------------------------------------------------------

DiskGrid flow_grid() { return DiskGrid::compact(0.8, 4, 16); }

double semigroup() {
    const HoloMap& z = zz();
    double worst = 0.0;
    for (const HoloMap& f : {z - 1.0, HoloMap(z), z * (1.0 - z)})
        for (double s : {0.1, 0.5, 1.0})
            for (double t : {0.1, 0.5, 1.0})
                for (Complex p : flow_grid().points)
                    worst = std::max(worst, std::abs(flow_point(f, p, t + s) - flow_point(f, flow_point(f, p, s), t)));
    return worst;
}

double self_map() {
    const HoloMap& z = zz();
    double worst = 0.0;
    for (const HoloMap& f : {z - 1.0, z * (1.0 - z), example1_generator(0.5)})
        for (Complex p : flow_grid().points)
            for (Complex w : integrate_flow(f, p, 3.0).z) worst = std::max(worst, std::abs(w));
    return worst;
}

double denjoy_wolff() {
    double worst = 0.0;
    for (Complex p : flow_grid().points) worst = std::max(worst, std::abs(flow_point(zz() - 1.0, p, 10.0) - 1.0) / std::abs(p - 1.0));
    return worst;
}

double schroder_residual() {
    const HoloMap& z = zz();
    double worst = 0.0;
    for (auto [f, mu] : std::vector<std::pair<HoloMap, Complex>>{{z - 1.0, 1.0}, {z - 1.0, Complex{1.0, 0.5}}}) {
        const SpirallikeFn h = koenigs(f, mu);
        for (double t : {0.5, 1.0})
            for (Complex p : DiskGrid::compact(0.8, 3, 12).points) {
                const Complex w = schroder_flow(h, mu, p, t);
                worst = std::max(worst, std::abs(h.h(w) - std::exp(-mu * t) * h.h(p)));
            }
    }
    return worst;
}

double julia() {
    double worst = 0.0;
    for (double t : {0.5, 1.0, 2.0})
        for (Complex p : flow_grid().points) worst = std::max(worst, julia_ratio(zz() - 1.0, 1.0, 1.0, p, t) - 1.0);
    return std::max(worst, 0.0);
}

double recovery_ratio() {
    const HoloMap f = zz() * (1.0 - zz());
    const DiskGrid g = DiskGrid::compact(0.6, 3, 12);
    const double a = max_recovery_error(generator_recovery(f, g, 0.02));
    const double b = max_recovery_error(generator_recovery(f, g, 0.01));
    return std::abs(b / a - 0.5);
}

// --- spectrum --------------------------------------------------------------

std::vector<WeightedEigenproblem> eigenproblems() {
    const HoloMap& z = zz();
    return {{z - 1.0, std::nullopt, 1.0},
            {z - 1.0, std::nullopt, 3.0},
            {z - 1.0, std::nullopt, Complex{0.0, 2.0}},
            {z - 1.0, std::nullopt, -2.0},
            {z - 1.0, (1.0 - z) * (1.0 - z) / z, 1.0},
            {z - 1.0, 1.0 + 0.5 * z, Complex{1.5, 0.5}}};
}

double eigen_res() {
    double worst = 0.0;
    for (const auto& prob : eigenproblems()) worst = std::max(worst, eigen_residual(prob, eigenfunction(prob).h));
    return worst;
}

double valence_agreement() {
    double mismatches = 0.0;
    for (double lambda : {1.0, 2.0, 3.0, 5.0, -2.0}) {
        const Eigenfunction e = eigenfunction({zz() - 1.0, std::nullopt, lambda});
        const HoloMap h = lambda < 0.0 ? reciprocal_of(e.h) : e.h;
        const ValenceCell cell = classify_lambda(lambda, 1.0);
        if (cell.infinite() || measure_valence(h, 0.99, 200) != *cell.k) mismatches += 1.0;
    }
    return mismatches;
}

double robertson_margin() {
    double worst = 0.0;
    for (const auto& prob : eigenproblems()) {
        const Eigenfunction e = eigenfunction(prob);
        worst = std::max(worst, shortfall(robertson_residual(e.h, prob.lambda, prob.w, e.beta)));
    }
    return worst;
}

double eigenspace_1d() {
    const HoloMap& z = zz();
    const HoloMap f = -((1.0 - z) * (1.0 - z)) * ((1.0 + z) / (1.0 - z));
    const Eigenfunction a = eigenfunction({f, 1.0 + 0.5 * z, Complex{1.5, 0.5}});
    const Eigenfunction b = eigenfunction({f, 3.0 + 1.5 * z, Complex{1.5, 0.5}});
    const Complex ratio = a.h(0.3) / b.h(0.3);
    double worst = 0.0;
    for (Complex p : DiskGrid::standard().points)
        worst = std::max(worst, std::abs(a.h(p) - ratio * b.h(p)) / std::max(1.0, std::abs(a.h(p))));
    return worst;
}

// --- cli -------------------------------------------------------------------

Config figure1_config() {
    return Config::parse("[figure]\nfamily = example2-approx\ngamma = 1,0\ntau_scale = 1,0\nn = 1 2 4\nr = 0.99\nn_theta = 400\n");
}

double figure_deterministic() {
    const auto a = figure_curves(figure1_config());
    const auto b = figure_curves(figure1_config());
    double diffs = a.size() == b.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        if (a[i].table().render() != b[i].table().render()) diffs += 1.0;
    return diffs;
}

double curve_formula() {
    const auto curves = figure_curves(figure1_config());
    const std::vector<Complex> taus = {0.0, 0.5, 0.75};
    double worst = 0.0;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const Curve& c = curves[i];
        for (std::size_t j = 0; j < c.w.size(); j += 100) {
            const Complex p = std::polar(c.r, c.theta[j]);
            Complex exact = 1.0 - p;
            if (i > 0) {
                const Complex t = taus[i - 1];
                exact = std::conj(t) * (1.0 - p) + std::norm(1.0 - t) / (1.0 - p);
            }
            worst = std::max(worst, std::abs(c.w[j] - exact));
        }
    }
    return worst;
}

}  // namespace

const std::vector<Invariant>& invariant_registry() {
    static const std::vector<Invariant> reg = {
        {"holomap", "derivative_vs_finite_difference", 1e-6, derivative_vs_fd},
        {"holomap", "path_consistency", 1e-9, path_consistency},
        {"holomap", "count_stable_in_r", 0.5, count_stable_in_r},
        {"holomap", "power_additivity", 1e-12, power_additivity},
        {"caratheodory", "charge_consistency", 1e-2, charge_consistency},
        {"caratheodory", "reciprocal_involution", 1e-12, reciprocal_involution},
        {"caratheodory", "master_positivity", 1e-9, master_positivity},
        {"generators", "roundtrip", 1e-11, roundtrip},
        {"generators", "real_cone", 1e-9, real_cone},
        {"generators", "beta_equals_charge", 1e-6, beta_equals_charge},
        {"approx", "positivity", 1e-9, approx_positivity},
        {"approx", "interpolation", 1e-9, interpolation},
        {"approx", "berkson_porta_coherence", 1e-10, bp_coherence},
        {"approx", "derivative_limit", 1e-9, derivative_limit},
        {"spiral", "koenigs_ode", 1e-8, koenigs_ode},
        {"spiral", "perturb_consistency", 1e-7, perturb_consistency},
        {"spiral", "power_transport", 1e-10, power_transport},
        {"spiral", "example1_closed_form", 1e-8, example1_closed_form},
        {"spiral", "example1_limit", 0.02, example1_limit},
        {"flow", "semigroup", 1e-6, semigroup},
        {"flow", "self_map", 1.0, self_map},
        {"flow", "denjoy_wolff", 5e-5, denjoy_wolff},
        {"flow", "schroder_residual", 1e-9, schroder_residual},
        {"flow", "julia_ratio", 1e-8, julia},
        {"flow", "recovery_ratio", 0.1, recovery_ratio},
        {"spectrum", "eigen_residual", 1e-8, eigen_res},
        {"spectrum", "valence_agreement", 0.5, valence_agreement},
        {"spectrum", "robertson_margin", 1e-9, robertson_margin},
        {"spectrum", "eigenspace_one_dimensional", 1e-10, eigenspace_1d},
        {"cli", "figure_deterministic", 0.5, figure_deterministic},
        {"cli", "curve_formula", 1e-10, curve_formula},
    };
    return reg;
}

std::vector<InvariantOutcome> run_invariants(double tolerance_scale) {
    std::vector<InvariantOutcome> out;
    for (const Invariant& inv : invariant_registry()) {
        InvariantOutcome o{inv.id(), 0.0, inv.threshold * tolerance_scale, false, {}};
        try {
            o.measured = inv.measure();
        } catch (const std::exception& e) {
            o.measured = std::numeric_limits<double>::infinity();
            o.error = e.what();
        }
        o.pass = o.measured < o.threshold;
        out.push_back(std::move(o));
    }
    return out;
}

std::string format_outcome(const InvariantOutcome& o) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s %s %.3e %.3e", o.pass ? "PASS" : "FAIL", o.id.c_str(), o.measured, o.threshold);
    std::string s = buf;
    if (!o.error.empty()) s += " (" + o.error + ")";
    return s;
}

}  // namespace holo::cli
