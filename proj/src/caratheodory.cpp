#include "holo/caratheodory.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "holo/parallel.hpp"

namespace holo {

CaratheodoryFn certify_positive(const HoloMap& m, const DiskGrid& grid) {
    const std::size_t n = grid.size();
    std::vector<double> re(n);
    parallel_for(n, [&](std::size_t i) {
        try {
            re[i] = m(grid.points[i]).real();
        } catch (const SingularPoint&) {
            re[i] = -std::numeric_limits<double>::infinity();
        } catch (const BranchCut&) {
            re[i] = -std::numeric_limits<double>::infinity();
        }
        if (std::isnan(re[i])) re[i] = -std::numeric_limits<double>::infinity();
    });
    PositivityCertificate cert;
    cert.n_radial = grid.n_radial;
    cert.n_angular = grid.n_angular;
    cert.r_max = grid.r_max;
    cert.n_points = n;
    cert.min_re = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        if (re[i] < cert.min_re) {
            cert.min_re = re[i];
            cert.argmin = grid.points[i];
        }
        cert.max_abs_re = std::max(cert.max_abs_re, std::abs(re[i]));
    }
    if (cert.min_re < tol::kPositivity) throw NotPositive(cert.min_re, cert.argmin);
    return CaratheodoryFn(m, cert);
}

namespace {

void check_unimodular(Complex tau) {
    if (std::abs(std::abs(tau) - 1.0) > 1e-12)
        throw DomainError("charge needs a unimodular point, got " + format_complex(tau));
}

double clamp_charge(double delta, double err) {
    if (delta < 0.0 && delta >= -std::max(1e-9, err)) return 0.0;
    return delta;
}

}  // namespace

std::pair<double, double> inf_form(const HoloMap& p, Complex tau, const InfFormOptions& opts) {
    return inf_form([&p](Complex z) { return p(z); }, tau, opts);
}

std::pair<double, double> inf_form(const std::function<Complex(Complex)>& p, Complex tau,
                                   const InfFormOptions& opts) {
    check_unimodular(tau);
    const Complex tau_bar = std::conj(tau);
    double best = std::numeric_limits<double>::infinity();
    double previous = best;
    for (int k = 1; k <= opts.depth; ++k) {
        const double r = std::min(1.0 - std::ldexp(1.0, -k), opts.r_max);
        double row = std::numeric_limits<double>::infinity();
        for (int j = -opts.n_angular; j <= opts.n_angular; ++j) {
            const double s = double(j) / opts.n_angular;
            const double phi = std::numbers::pi * s * s * s;
            const Complex z = tau * std::polar(r, phi);
            const double kernel = std::norm(1.0 - z * tau_bar) / (1.0 - r * r);
            row = std::min(row, kernel * p(z).real());
        }
        previous = best;
        best = std::min(best, row);
    }
    const double err = std::isfinite(previous) ? std::abs(best - previous) : 0.0;
    return {2.0 * best, 2.0 * err};
}

ChargeReport charge(const CaratheodoryFn& p, Complex tau, ChargeMethod method,
                    const InfFormOptions& inf_opts) {
    check_unimodular(tau);
    ChargeReport rep;
    rep.tau = tau;
    rep.method = method;
    if (method == ChargeMethod::RadialLimit) {
        const HoloMap weighted = (1.0 - HoloMap::identity() * std::conj(tau)) * p.map();
        const LimitEstimate lim = radial_limit(weighted, tau);
        if (std::abs(lim.value.imag()) > 1e-6 * std::max(1.0, std::abs(lim.value)))
            throw NotNonnegativeReal("charge limit " + format_complex(lim.value) + " is not real");
        rep.delta = lim.value.real();
        rep.error_estimate = lim.error;
    } else {
        const auto [delta, err] = inf_form(p.map(), tau, inf_opts);
        rep.delta = delta;
        rep.error_estimate = err;
    }
    rep.delta = clamp_charge(rep.delta, rep.error_estimate);
    if (rep.delta < 0.0)
        throw NotNonnegativeReal("charge " + std::to_string(rep.delta) + " is negative");
    return rep;
}

BoundaryConformality conformality_at_one(const HoloMap& q) {
    const Complex one{1.0, 0.0};
    BoundaryConformality out;
    out.value = radial_limit(q, one).value;
    out.slope = radial_limit(q / (HoloMap::identity() - one), one).value;
    out.conformal = std::abs(out.slope) > 1e-9;
    return out;
}

BoundaryConformality conformality_at_one(const CaratheodoryFn& q) {
    return conformality_at_one(q.map());
}

CaratheodoryFn reciprocal(const CaratheodoryFn& p) {
    const DiskGrid& grid = DiskGrid::certification();
    if (p.certificate().min_re <= 0.0) {
        for (Complex z : grid.points)
            if (std::abs(p(z)) < tol::kSingular)
                throw ZeroEncountered("p vanishes at z = " + format_complex(z));
    }
    const HoloMap qm = 1.0 / p.map();
    CaratheodoryFn q = [&] {
        try {
            return certify_positive(qm, grid);
        } catch (const NotPositive& e) {
            throw ZeroEncountered(std::string("reciprocal failed: ") + e.what());
        }
    }();

    double beta = 0.0;
    try {
        beta = charge(p, Complex{1.0, 0.0}).delta;
    } catch (const Error&) {
        return q;
    }
    if (beta > 1e-6) {
        BoundaryConformality c;
        try {
            c = conformality_at_one(q);
        } catch (const NoFiniteLimit&) {
            return q;
        }
        const Complex expected{-1.0 / beta, 0.0};
        if (std::abs(c.value) > 1e-6 || std::abs(c.slope - expected) > 1e-5 * std::abs(expected))
            throw Error("reciprocal boundary data q(1) = " + format_complex(c.value) +
                        ", q'(1) = " + format_complex(c.slope) + " inconsistent with charge " +
                        std::to_string(beta));
    }
    return q;
}

}  // namespace holo
