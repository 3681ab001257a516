#include "holo/spiral.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "holo/approx.hpp"
#include "holo/parallel.hpp"

namespace holo {

SpirallikeFn koenigs(const HoloMap& f, Complex mu) {
    if (std::abs(mu) < 1e-300) throw InvalidLambda("koenigs needs mu != 0");
    return {exp(mu * reciprocal_integral(f)), mu, f, Complex{1.0, 0.0}};
}

bool in_omega_plus(Complex lambda, double beta) {
    return lambda != Complex{0.0, 0.0} &&
           std::abs(lambda - beta) <= beta + 1e-12 * std::max(1.0, beta);
}

OmegaVerdict omega_classify(Complex lambda, double beta) {
    if (!(beta > 0.0)) throw DomainError("omega_classify needs beta > 0");
    if (lambda == Complex{0.0, 0.0}) throw InvalidLambda("lambda = 0 has no Omega region");
    OmegaVerdict v;
    v.beta = beta;
    if (in_omega_plus(lambda, beta))
        v.region = OmegaRegion::Plus;
    else if (in_omega_plus(-lambda, beta))
        v.region = OmegaRegion::Minus;
    return v;
}

SpirallikeFn perturb(const SpirallikeFn& h, Complex mu, Complex tau) {
    if (!(std::abs(tau) < 1.0)) throw DomainError("perturb needs an interior tau");
    const GPlusVerdict v = is_G_plus_1(h.f);
    if (!v.member) throw NotAdmissible("generator of h is not in G+[1]: " + v.reason);
    if (!in_omega_plus(h.lambda, v.beta))
        throw NotAdmissible("lambda = " + format_complex(h.lambda) + " lies outside Omega+");
    if (!in_omega_plus(mu, v.beta))
        throw NotAdmissible("mu = " + format_complex(mu) + " lies outside Omega+");
    const HoloMap z = HoloMap::identity();
    const Complex rho = mu / std::conj(mu);
    const HoloMap head = transported_power(h.h, mu / h.lambda);
    const HoloMap num = (z - tau) * principal_power(1.0 - z * std::conj(tau), rho);
    const HoloMap den = -principal_power(1.0 - z, 1.0 + rho);
    return {head * num / den, mu, build_f_tau(h.f, mu, tau).f(), tau};
}

HoloMap reconstruct_from_factor(const HoloMap& h_star, Complex lambda) {
    const HoloMap z = HoloMap::identity();
    return principal_power(1.0 - z, 2.0 * lambda) *
           principal_power(removable_quotient(h_star), lambda);
}

Factorization factorize(const SpirallikeFn& h) {
    const HoloMap z = HoloMap::identity();
    const HoloMap one_minus = 1.0 - z;
    // g = h_*/z, kept separately so the origin needs no removable division.
    const HoloMap g = transported_power(h.h, 1.0 / h.lambda) / (one_minus * one_minus);
    Factorization out;
    out.h_star = z * g;
    // z h_*'/h_* = 1 + z g'/g
    InfFormOptions opts;
    opts.r_max = 0.999;
    const auto star = [&g](Complex zz) {
        const Jet gj = g.jet(zz);
        return 1.0 + zz * gj.slope / gj.value;
    };
    out.inf_value = inf_form(star, Complex{1.0, 0.0}, opts).first;
    return out;
}

double robertson_residual(const HoloMap& h, Complex lambda, const std::optional<HoloMap>& w,
                          double beta, const DiskGrid& grid) {
    if (lambda == Complex{0.0, 0.0}) throw InvalidLambda("robertson_residual needs lambda != 0");
    const Complex c = 2.0 * beta / lambda;
    std::vector<double> v(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const Complex z = grid.points[i];
        const Jet hj = h.jet(z);
        if (std::abs(hj.value) < tol::kSingular)
            throw SingularPoint("h vanishes at z = " + format_complex(z));
        Complex e = c * z * hj.slope / hj.value + (1.0 + z) / (1.0 - z);
        if (w) {
            const Jet wj = w->jet(z);
            if (std::abs(wj.value) < tol::kSingular)
                throw SingularPoint("weight vanishes at z = " + format_complex(z));
            e += c * z * wj.slope / wj.value;
        }
        v[i] = e.real();
    });
    double best = std::numeric_limits<double>::infinity();
    for (double x : v) best = std::min(best, x);
    return best;
}

double ode_residual(const HoloMap& h, const HoloMap& f, Complex mu, const DiskGrid& grid) {
    std::vector<double> v(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const Complex z = grid.points[i];
        const Jet hj = h.jet(z);
        v[i] = std::abs(mu * hj.value - hj.slope * f(z));
    });
    double best = 0.0;
    for (double x : v) best = std::max(best, x);
    return best;
}

}  // namespace holo
