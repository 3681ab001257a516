#include "holo/generators.hpp"

#include <cmath>
#include <limits>

namespace holo {

namespace {
bool on_circle(Complex tau) { return std::abs(std::abs(tau) - 1.0) <= 1e-12; }
}  // namespace

HoloMap berkson_porta_factor(Complex tau) {
    const HoloMap z = HoloMap::identity();
    return (z - tau) * (1.0 - z * std::conj(tau));
}

double angular_derivative(const HoloMap& f, Complex tau) {
    const LimitEstimate lim = radial_limit(f / (HoloMap::identity() - tau), tau);
    if (std::abs(lim.value.imag()) > 1e-8 || -lim.value.real() > 1e-8)
        throw NotNonnegativeReal("angular derivative " + format_complex(lim.value) +
                                 " is not a nonnegative real");
    return std::max(0.0, lim.value.real());
}

Generator assemble(Complex tau, const CaratheodoryFn& p) {
    if (!(std::abs(tau) <= 1.0 + 1e-12))
        throw DomainError("null point outside the closed disk: " + format_complex(tau));
    if (on_circle(tau)) tau /= std::abs(tau);
    const HoloMap f = berkson_porta_factor(tau) * p.map();
    if (on_circle(tau)) {
        const Complex at_tau = radial_limit(f, tau).value;
        if (std::abs(at_tau) > 1e-8)
            throw NotAdmissible("generator does not vanish at the boundary point " +
                                format_complex(tau));
        angular_derivative(f, tau);
    } else if (std::abs(f(tau)) > 1e-12) {
        throw NotAdmissible("generator does not vanish at " + format_complex(tau));
    }
    return Generator(tau, p, f);
}

CaratheodoryFn decompose(const HoloMap& f, Complex tau, const DiskGrid& grid) {
    if (!(std::abs(tau) <= 1.0 + 1e-12))
        throw DomainError("null point outside the closed disk: " + format_complex(tau));
    const HoloMap z = HoloMap::identity();
    if (on_circle(tau)) {
        tau /= std::abs(tau);
        return certify_positive(f / berkson_porta_factor(tau), grid);
    }
    // A zero of f at tau makes the quotient by (z - tau) removable; otherwise
    // the plain quotient has a pole there and fails certification.
    Complex f_tau;
    try {
        f_tau = f(tau);
    } catch (const Error&) {
        f_tau = std::numeric_limits<double>::infinity();
    }
    if (std::abs(f_tau) <= 1e-12)
        return certify_positive(removable_quotient(f, tau) / (1.0 - z * std::conj(tau)), grid);
    return certify_positive(f / berkson_porta_factor(tau), grid);
}

Complex boundary_derivative(const Generator& g) {
    if (g.boundary()) return {angular_derivative(g.f(), g.tau()), 0.0};
    return derivative(g.f(), g.tau());
}

GPlusVerdict is_G_plus_1(const HoloMap& f) {
    GPlusVerdict v;
    v.beta = std::numeric_limits<double>::quiet_NaN();
    const Complex one{1.0, 0.0};
    try {
        decompose(f, one);
    } catch (const NotPositive& e) {
        v.reason = std::string("no Berkson-Porta decomposition at 1: ") + e.what();
        return v;
    }
    try {
        if (std::abs(radial_limit(f, one).value) > 1e-8) {
            v.reason = "f does not vanish at 1";
            return v;
        }
        v.beta = angular_derivative(f, one);
    } catch (const Error& e) {
        v.reason = e.what();
        return v;
    }
    if (v.beta <= 1e-9) {
        v.reason = "angular derivative at 1 is not strictly positive";
        return v;
    }
    v.member = true;
    return v;
}

}  // namespace holo
