#include <cmath>

#include "doctest.h"
#include "holo/approx.hpp"
#include "oracles.hpp"

using namespace holo;
using oracle::C;

namespace {
const HoloMap z = HoloMap::identity();
const HoloMap half_plane = 1.0 / (1.0 - z);
const HoloMap cayley = (1.0 + z) / (1.0 - z);

C example2_q_tau(C tau, C w) { return std::conj(tau) * (1.0 - w) + std::norm(1.0 - tau) / (1.0 - w); }

const std::vector<C> kTaus = {C(0.3), C(0.7), C(0.9), C(0.99), C(0.0, 0.9), C(0.5, 0.4)};
}  // namespace

TEST_CASE("build_r examples") {
    const CaratheodoryFn q = certify_positive(1.0 - z);
    const CaratheodoryFn r = build_r(q, 1.0);
    for (C w : oracle::polar_samples(0.99, 10, 50)) CHECK(std::abs(r(w) - 1.0 / (1.0 - w)) < 1e-9);
    CHECK(std::abs(r(0.0) - 1.0) < 1e-15);
    CHECK_THROWS_AS(build_r(q, 0.3), NotAdmissible);
    CHECK_NOTHROW(build_r(q, 0.5));
    CHECK_NOTHROW(build_r(q, C(0.5, -2.0)));
    const ApproxConfig cfg = approx_config(q, 0.3);
    CHECK(cfg.alpha == doctest::Approx(1.0));
    CHECK_FALSE(cfg.admissible);
}

TEST_CASE("build_q_tau matches the closed form of the linear example") {
    const CaratheodoryFn r = build_r(certify_positive(1.0 - z), 1.0);
    for (C tau : {C(0.0), C(0.5), C(0.9), 1.0 - 3.0 * C(1.0, -1.0) / 12.0, C(-0.3, 0.6)}) {
        const CaratheodoryFn qt = build_q_tau(r, 1.0, tau);
        for (C w : oracle::polar_samples(0.99, 10, 100)) CHECK(std::abs(qt(w) - example2_q_tau(tau, w)) < 1e-9);
    }
    CHECK(std::abs(build_q_tau(r, 1.0, 0.5)(0.5) - 0.75) < 1e-12);
}

TEST_CASE("q_tau at tau = 0 is the half-plane map") {
    const CaratheodoryFn r = build_r(certify_positive(1.0 - z), 1.0);
    const CaratheodoryFn q0 = build_q_tau(r, 1.0, 0.0);
    for (C w : {C(0.0), C(0.4, 0.1), C(-0.9)}) CHECK(std::abs(q0(w) - 1.0 / (1.0 - w)) < 1e-12);
}

TEST_CASE("q_tau positivity and interpolation across gammas and taus") {
    const CaratheodoryFn q = certify_positive(1.0 - z);
    const CaratheodoryFn q2 = reciprocal(certify_positive(cayley));  // alpha = 1/2
    for (auto [qq, gamma] : std::vector<std::pair<CaratheodoryFn, C>>{
             {q, 1.0}, {q, C(0.5, 0.0)}, {q, C(2.0, -1.0)}, {q2, C(0.25, 0.0)}, {q2, C(1.0, 3.0)}}) {
        const CaratheodoryFn r = build_r(qq, gamma);
        CHECK(std::abs(r(0.0) - std::conj(gamma)) < 1e-12);
        for (C tau : kTaus) {
            const CaratheodoryFn qt = build_q_tau(r, gamma, tau);
            CHECK(qt.certificate().min_re >= -1e-9);
            CHECK(std::abs(qt(tau) - gamma * (1.0 - std::norm(tau))) < 1e-9);
        }
    }
}

TEST_CASE("build_p_tau") {
    const CaratheodoryFn p = certify_positive(half_plane);
    CHECK(std::abs(build_p_tau(p, 1.0, 0.5)(0.5) - 4.0 / 3.0) < 1e-9);
    CHECK_THROWS_AS(build_p_tau(p, 3.0, 0.5), NotAdmissible);
    CHECK_THROWS_AS(build_p_tau(p, 0.0, 0.5), NotAdmissible);
    const C v = build_p_tau(p, 2.0, 0.5)(0.5);
    CHECK(std::abs(v.imag()) < 1e-9);
    CHECK(std::abs(v - 2.0 / 0.75) < 1e-9);
    CHECK_NOTHROW(build_p_tau(p, C(1.0, 1.0), 0.3));  // on the boundary circle of the mu disk
    CHECK_THROWS_AS(build_p_tau(p, C(1.0, 1.001), 0.3), NotAdmissible);
}

TEST_CASE("p_tau interpolation matrix") {
    for (const HoloMap& pm : {half_plane, cayley}) {
        const CaratheodoryFn p = certify_positive(pm);
        const double beta = charge(p, 1.0).delta;
        for (C mu : {C(beta), C(2.0 * beta), C(0.5 * beta, 0.4 * beta), C(beta, -beta)}) {
            for (C tau : kTaus) {
                const CaratheodoryFn pt = build_p_tau(p, mu, tau);
                CHECK(pt.certificate().min_re >= -1e-9);
                CHECK(std::abs(pt(tau) - mu / (1.0 - std::norm(tau))) < 1e-9);
            }
        }
    }
}

TEST_CASE("build_f_tau") {
    const Generator f0 = build_f_tau(z - 1.0, 1.0, 0.0);
    for (C w : oracle::polar_samples(0.95, 10, 40)) CHECK(std::abs(f0(w) - w * (1.0 - w)) < 1e-12);
    CHECK(std::abs(boundary_derivative(f0) - 1.0) < 1e-12);
    CHECK(std::abs(boundary_derivative(build_f_tau(z - 1.0, 1.0, 0.9)) - 1.0) < 1e-9);
    CHECK_THROWS_AS(build_f_tau(z - 1.0, 0.0, 0.5), NotAdmissible);
    CHECK_THROWS_AS(build_f_tau(z, 1.0, 0.5), NotAdmissible);
}

TEST_CASE("Berkson-Porta coherence of f_tau") {
    const CaratheodoryFn p = decompose(z - 1.0, 1.0);
    for (C tau : {C(0.3), C(0.9), C(0.5, 0.4)}) {
        for (C mu : {C(1.0), C(1.0, 0.5)}) {
            const Generator g = build_f_tau(z - 1.0, mu, tau);
            const CaratheodoryFn pt = build_p_tau(p, mu, tau);
            const CaratheodoryFn back = decompose(g.f(), tau);
            double worst = 0.0;
            for (C w : DiskGrid::certification().points)
                worst = std::max(worst, std::abs(back(w) - pt(w)) / std::max(1.0, std::abs(pt(w))));
            CHECK(worst < 1e-10);
            CHECK(std::abs(boundary_derivative(g) - mu) < 1e-9);
        }
    }
}

TEST_CASE("convergence report for the linear example") {
    const ApproximantFamily fam = ApproximantFamily::q_family(certify_positive(1.0 - z), 1.0);
    const DiskGrid k = DiskGrid::compact(0.5);
    std::vector<C> taus;
    for (int n : {4, 10, 30, 100}) taus.push_back(1.0 - 1.0 / n);
    const auto rows = convergence_report(fam, 1.0 - z, taus, {k});
    CHECK(rows.back().sup_error[0] < rows.front().sup_error[0]);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].sup_error[0] < rows[i - 1].sup_error[0]);
    CHECK(eventually_decreasing(rows, 0));
    // Oblique path.
    std::vector<C> oblique;
    for (int n : {12, 30, 100}) oblique.push_back(1.0 - 3.0 * C(1.0, -1.0) / double(n));
    CHECK(eventually_decreasing(convergence_report(fam, 1.0 - z, oblique, {k}), 0));
}

TEST_CASE("self comparison has zero error") {
    const ApproximantFamily fam = ApproximantFamily::q_family(certify_positive(1.0 - z), 1.0);
    const auto rows = convergence_report(fam, fam.member(0.5), {C(0.5)}, {DiskGrid::compact(0.5)});
    CHECK(rows[0].sup_error[0] == 0.0);
}

TEST_CASE("f-family sup error near the boundary") {
    const ApproximantFamily fam = ApproximantFamily::f_family(z - 1.0, 1.0);
    const auto rows = convergence_report(fam, z - 1.0, {C(0.99)}, {DiskGrid::compact(0.5)});
    CHECK(rows[0].sup_error[0] < 0.05);
}

TEST_CASE("limit of f_tau'(tau) along the reals") {
    // mu = beta family: the interpolated derivative is beta for every tau.
    for (double t : {0.9, 0.99, 0.999}) CHECK(std::abs(boundary_derivative(build_f_tau(z - 1.0, 1.0, t)) - 1.0) < 1e-9);
    // The unstable family (z - tau)(1 - z tau)/(1 - z) has f_tau'(tau) = 1 + tau -> 2 beta.
    for (double t : {0.9, 0.99, 0.999}) {
        const HoloMap ft = (z - t) * (1.0 - z * t) / (1.0 - z);
        const C d = derivative(ft, t);
        CHECK(std::abs(d - (1.0 + t)) < 1e-12);
        CHECK(mu_admissible(d, 1.0));
    }
    CHECK(mu_admissible(2.0, 1.0));
}
