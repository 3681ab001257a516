#include <cmath>

#include "doctest.h"
#include "holo/approx.hpp"
#include "holo/spiral.hpp"
#include "oracles.hpp"

using namespace holo;
using oracle::C;

namespace {
const HoloMap z = HoloMap::identity();

double sup_diff(const HoloMap& a, const std::function<C(C)>& b, const DiskGrid& g) {
    double w = 0.0;
    for (C p : g.points) w = std::max(w, std::abs(a(p) - b(p)));
    return w;
}
}  // namespace

TEST_CASE("koenigs examples") {
    const DiskGrid g = DiskGrid::standard();
    CHECK(sup_diff(koenigs(z - 1.0, 1.0).h, [](C w) { return 1.0 - w; }, g) < 1e-10);
    CHECK(sup_diff(koenigs(z - 1.0, 0.8).h, [](C w) { return std::pow(1.0 - w, 0.8); }, g) < 1e-10);
    CHECK(sup_diff(koenigs(z - 1.0, 2.0).h, [](C w) { return (1.0 - w) * (1.0 - w); }, g) < 1e-10);
    CHECK(std::abs(koenigs(z - 1.0, 0.8).h(0.0) - 1.0) < 1e-15);
}

TEST_CASE("koenigs solves its differential equation") {
    for (auto [f, mu] : std::vector<std::pair<HoloMap, C>>{{z - 1.0, 1.0},
                                                           {z - 1.0, C(1.0, 1.0)},
                                                           {-(1.0 - z) * (1.0 - z) * ((1.0 + z) / (1.0 - z)), 3.0},
                                                           {(z * z - 1.0) / 2.0, 2.0}}) {
        CHECK(ode_residual(koenigs(f, mu).h, f, mu) < 1e-8);
    }
}

TEST_CASE("power-law transport between koenigs functions") {
    const HoloMap f = -(1.0 - z) * (1.0 - z) * ((1.0 + z) / (1.0 - z)) * 0.5;
    const C lambda(1.5, 0.5), mu(0.7, -0.2);
    const HoloMap a = koenigs(f, mu).h;
    const HoloMap b = principal_power(koenigs(f, lambda).h, mu / lambda);
    const HoloMap c = transported_power(koenigs(f, lambda).h, mu / lambda);
    for (C w : DiskGrid::standard().points) {
        if (std::abs(koenigs(f, lambda).h(w).imag()) < 1e-3 && koenigs(f, lambda).h(w).real() < 0) continue;
        CHECK(std::abs(a(w) - b(w)) < 1e-10 * std::max(1.0, std::abs(a(w))));
        CHECK(std::abs(a(w) - c(w)) < 1e-10 * std::max(1.0, std::abs(a(w))));
    }
}

TEST_CASE("omega regions") {
    CHECK(omega_classify(2.0, 1.0).region == OmegaRegion::Plus);
    CHECK(omega_classify(-0.5, 1.0).region == OmegaRegion::Minus);
    CHECK(omega_classify(C(0.0, 1.0), 1.0).region == OmegaRegion::Outside);
    CHECK_THROWS_AS(omega_classify(0.0, 1.0), InvalidLambda);
}

TEST_CASE("perturbation formula for the 0.8 power") {
    const SpirallikeFn h{principal_power(1.0 - z, 0.8), 0.8, z - 1.0, 1.0};
    for (C tau : {C(0.5), C(0.3, 0.4), C(0.9)}) {
        const SpirallikeFn ht = perturb(h, 0.8, tau);
        CHECK(sup_diff(ht.h, [tau](C w) { return (tau - w) * (1.0 - w * std::conj(tau)) / std::pow(1.0 - w, 1.2); },
                       DiskGrid::standard()) < 1e-9);
        CHECK(std::abs(ht.h(tau)) < 1e-10);
        CHECK(std::abs(ht.h(0.0) - tau) < 1e-10);
    }
    const SpirallikeFn near = perturb(h, 0.8, 0.999);
    CHECK(sup_diff(near.h, [](C w) { return std::pow(1.0 - w, 0.8); }, DiskGrid::compact(0.5)) < 0.02);
    CHECK_THROWS_AS(perturb(h, C(0.0, 1.0), 0.5), NotAdmissible);
}

TEST_CASE("perturbed functions solve the interior equation against q_tau") {
    const SpirallikeFn h = koenigs(z - 1.0, 0.8);
    for (C mu : {C(0.8), C(1.0, 0.6)}) {
        for (C tau : {C(0.5), C(0.2, -0.6)}) {
            const SpirallikeFn ht = perturb(h, mu, tau);
            // q_tau for q = -(1 - z)^2 / f and gamma = 1/mu, built directly.
            const CaratheodoryFn q = certify_positive(-((1.0 - z) * (1.0 - z)) / (z - 1.0));
            const C gamma = 1.0 / mu;
            const CaratheodoryFn qt = build_q_tau(build_r(q, gamma), gamma, tau);
            double worst = 0.0;
            for (C w : DiskGrid::standard().points) {
                const Jet j = ht.h.jet(w);
                worst = std::max(worst, std::abs(mu * j.value * qt(w) - j.slope * (w - tau) * (1.0 - w * std::conj(tau))));
            }
            CHECK(worst < 1e-7);
            CHECK(ode_residual(ht.h, ht.f, mu) < 1e-7);
            CHECK(std::abs(ht.h(0.0) - tau) < 1e-10);
        }
    }
}

TEST_CASE("factorization") {
    for (auto [h, lambda] : std::vector<std::pair<HoloMap, C>>{{principal_power(1.0 - z, 0.8), 0.8},
                                                               {(1.0 - z) * (1.0 - z), 2.0},
                                                               {koenigs(z - 1.0, C(1.0, 0.5)).h, C(1.0, 0.5)}}) {
        const Factorization fz = factorize({h, lambda, z - 1.0, 1.0});
        CHECK(sup_diff(fz.h_star, [](C w) { return w / (1.0 - w); }, DiskGrid::standard()) < 1e-10);
        CHECK(sup_diff(reconstruct_from_factor(fz.h_star, lambda), [&](C w) { return h(w); }, DiskGrid::standard()) < 1e-10);
        CHECK(std::abs(fz.inf_value - 1.0) < 0.05);
    }
}

TEST_CASE("Robertson residual identities") {
    const DiskGrid g = DiskGrid::standard();
    CHECK(std::abs(robertson_residual(principal_power(1.0 - z, 0.8), 0.8, std::nullopt, 1.0, g) - 1.0) < 1e-9);
    CHECK(std::abs(robertson_residual((1.0 - z) * (1.0 - z), 2.0, std::nullopt, 1.0, g) - 1.0) < 1e-9);
    CHECK(std::abs(robertson_residual((1.0 - z) * (1.0 - z), 2.0, HoloMap::constant(1.0), 1.0, g) - 1.0) < 1e-9);
}

TEST_CASE("ODE residual examples") {
    const DiskGrid g = DiskGrid::standard();
    CHECK(ode_residual(1.0 - z, z - 1.0, 1.0, g) < 1e-12);
    CHECK(ode_residual(principal_power(1.0 - z, 0.8), z - 1.0, 0.8, g) < 1e-12);
    double min_h = 1e300;
    for (C w : g.points) min_h = std::min(min_h, std::abs(1.0 - w));
    CHECK(ode_residual(1.0 - z, z - 1.0, 2.0, g) >= min_h);
}

TEST_CASE("unstable koenigs family") {
    const DiskGrid k = DiskGrid::compact(0.5);
    for (double t : {0.5, 0.9, 0.999}) {
        const HoloMap ft = (z - t) * (1.0 - z * t) / (1.0 - z);
        const HoloMap ht = koenigs(ft, 1.0 + t).h;
        const auto closed = [t](C w) { return (t - w) * std::pow(1.0 - w * t, 1.0 / t) / t; };
        // Segments from 0 must not cross the interior zero of f_tau.
        CHECK(sup_diff(ht, closed, DiskGrid::compact(0.45)) < 1e-8);
    }
    const double t = 0.999;
    const auto closed = [t](C w) { return (t - w) * std::pow(1.0 - w * t, 1.0 / t) / t; };
    double to_square = 0.0, to_linear = 0.0;
    for (C w : k.points) {
        to_square = std::max(to_square, std::abs(closed(w) - (1.0 - w) * (1.0 - w)));
        to_linear = std::max(to_linear, std::abs(closed(w) - (1.0 - w)));
    }
    CHECK(to_square < 0.02);
    CHECK(to_linear > 0.2);
    const HoloMap alt = koenigs(z - t, 1.0).h;
    CHECK(sup_diff(alt, [](C w) { return 1.0 - w; }, k) < 0.01);
    CHECK(sup_diff(alt, [t](C w) { return 1.0 - w / t; }, k) < 1e-10);
}
