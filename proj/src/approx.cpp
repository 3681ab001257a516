#include "holo/approx.hpp"

#include <cmath>

#include "holo/parallel.hpp"

namespace holo {

namespace {

const Complex kI{0.0, 1.0};

HoloMap r_map(const HoloMap& q, Complex gamma) {
    const HoloMap z = HoloMap::identity();
    const HoloMap num = z * q + gamma * z * z - std::conj(gamma) - 2.0 * kI * gamma.imag() * z;
    const HoloMap one_minus = 1.0 - z;
    return num / (-(one_minus * one_minus));
}

bool gamma_admissible(Complex gamma, double alpha) {
    return gamma.real() >= alpha / 2.0 - tol::kAdmissible * std::max(1.0, alpha);
}

CaratheodoryFn certify_r(const HoloMap& r, Complex gamma) {
    CaratheodoryFn out = certify_positive(r);
    const Complex r0 = r(Complex{0.0, 0.0});
    if (std::abs(r0 - std::conj(gamma)) > 1e-9)
        throw Error("r(0) = " + format_complex(r0) + " differs from conj(gamma)");
    return out;
}

}  // namespace

ApproxConfig approx_config(const CaratheodoryFn& q, Complex gamma) {
    const BoundaryConformality c = conformality_at_one(q);
    if (std::abs(c.value) > 1e-8)
        throw NotAdmissible("q(1) = " + format_complex(c.value) + " is not 0");
    if (!c.conformal || std::abs(c.slope.imag()) > 1e-8 || c.slope.real() >= 0.0)
        throw NotAdmissible("q'(1) = " + format_complex(c.slope) + " is not a negative real");
    ApproxConfig cfg;
    cfg.gamma = gamma;
    cfg.alpha = -c.slope.real();
    cfg.admissible = gamma_admissible(gamma, cfg.alpha);
    return cfg;
}

bool mu_admissible(Complex mu, double beta) {
    if (std::abs(mu) < tol::kMinMu) return false;
    return std::abs(mu - beta) <= beta + tol::kAdmissible * std::max(1.0, beta);
}

CaratheodoryFn build_r(const CaratheodoryFn& q, Complex gamma) {
    const ApproxConfig cfg = approx_config(q, gamma);
    if (!cfg.admissible)
        throw NotAdmissible("Re gamma = " + std::to_string(gamma.real()) + " below alpha/2 = " +
                            std::to_string(cfg.alpha / 2.0));
    return certify_r(r_map(q.map(), gamma), gamma);
}

CaratheodoryFn build_q_tau(const CaratheodoryFn& r, Complex gamma, Complex tau) {
    if (!(std::abs(tau) < 1.0)) throw DomainError("tau must lie in the open disk");
    const HoloMap z = HoloMap::identity();
    const Complex gb = std::conj(gamma);
    const Complex tb = std::conj(tau);
    const HoloMap bracket = berkson_porta_factor(tau) * r.map() + gb * tau - gamma * tb * z * z +
                            2.0 * kI * gamma.imag() * z;
    CaratheodoryFn q_tau = certify_positive(removable_quotient(bracket));
    const Complex expected = gamma * (1.0 - std::norm(tau));
    const Complex got = q_tau(tau);
    if (std::abs(got - expected) > 1e-9 * std::max(1.0, std::abs(expected)))
        throw Error("q_tau(tau) = " + format_complex(got) + " misses gamma (1 - |tau|^2)");
    return q_tau;
}

CaratheodoryFn build_p_tau(const CaratheodoryFn& p, Complex mu, Complex tau) {
    const double beta = charge(p, Complex{1.0, 0.0}).delta;
    if (!(beta > 0.0)) throw NotAdmissible("p has no charge at 1");
    if (!mu_admissible(mu, beta))
        throw NotAdmissible("mu = " + format_complex(mu) + " violates |mu - beta| <= beta, mu != 0 (beta = " +
                            std::to_string(beta) + ")");
    const Complex gamma = 1.0 / mu;
    const CaratheodoryFn q = reciprocal(p);
    // alpha = 1/beta for q = 1/p, so the gamma condition is the mu condition.
    const CaratheodoryFn r = certify_r(r_map(q.map(), gamma), gamma);
    const CaratheodoryFn q_tau = build_q_tau(r, gamma, tau);
    CaratheodoryFn p_tau = reciprocal(q_tau);
    const Complex expected = mu / (1.0 - std::norm(tau));
    const Complex got = p_tau(tau);
    if (std::abs(got - expected) > 1e-9 * std::max(1.0, std::abs(expected)))
        throw Error("p_tau(tau) = " + format_complex(got) + " misses mu / (1 - |tau|^2)");
    return p_tau;
}

Generator build_f_tau(const HoloMap& f, Complex mu, Complex tau) {
    const GPlusVerdict v = is_G_plus_1(f);
    if (!v.member) throw NotAdmissible("f is not in G+[1]: " + v.reason);
    if (!mu_admissible(mu, v.beta))
        throw NotAdmissible("mu = " + format_complex(mu) + " violates |mu - beta| <= beta, mu != 0");
    const CaratheodoryFn p = decompose(f, Complex{1.0, 0.0});
    return assemble(tau, build_p_tau(p, mu, tau));
}

ApproximantFamily::ApproximantFamily(FamilyKind kind, HoloMap base, Complex parameter,
                                     Builder member)
    : kind_(kind), base_(std::move(base)), parameter_(parameter), member_(std::move(member)) {}

ApproximantFamily ApproximantFamily::q_family(const CaratheodoryFn& q, Complex gamma) {
    const CaratheodoryFn r = build_r(q, gamma);
    return ApproximantFamily(FamilyKind::Q, q.map(), gamma,
                             [r, gamma](Complex tau) { return build_q_tau(r, gamma, tau).map(); });
}

ApproximantFamily ApproximantFamily::p_family(const CaratheodoryFn& p, Complex mu) {
    return ApproximantFamily(FamilyKind::P, p.map(), mu,
                             [p, mu](Complex tau) { return build_p_tau(p, mu, tau).map(); });
}

ApproximantFamily ApproximantFamily::f_family(const HoloMap& f, Complex mu) {
    return ApproximantFamily(FamilyKind::F, f, mu,
                             [f, mu](Complex tau) { return build_f_tau(f, mu, tau).f(); });
}

double sup_distance(const HoloMap& a, const HoloMap& b, const DiskGrid& grid) {
    std::vector<double> d(grid.size());
    parallel_for(grid.size(),
                 [&](std::size_t i) { d[i] = std::abs(a(grid.points[i]) - b(grid.points[i])); });
    double best = 0.0;
    for (double v : d) best = std::max(best, v);
    return best;
}

std::vector<ConvergenceRow> convergence_report(const ApproximantFamily& fam, const HoloMap& target,
                                               const std::vector<Complex>& taus,
                                               const std::vector<DiskGrid>& compacts) {
    std::vector<ConvergenceRow> rows;
    rows.reserve(taus.size());
    for (Complex tau : taus) {
        const HoloMap m = fam.member(tau);
        ConvergenceRow row{tau, {}};
        for (const DiskGrid& k : compacts) row.sup_error.push_back(sup_distance(m, target, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

bool eventually_decreasing(const std::vector<ConvergenceRow>& rows, std::size_t compact) {
    if (rows.size() < 2) return true;
    return rows[rows.size() - 1].sup_error.at(compact) < rows[rows.size() - 2].sup_error.at(compact);
}

}  // namespace holo
