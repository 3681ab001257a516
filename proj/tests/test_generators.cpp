#include <cmath>

#include "doctest.h"
#include "holo/generators.hpp"
#include "oracles.hpp"

using namespace holo;
using oracle::C;

namespace {
const HoloMap z = HoloMap::identity();
const HoloMap half_plane = 1.0 / (1.0 - z);
const HoloMap cayley = (1.0 + z) / (1.0 - z);
const HoloMap one = HoloMap::constant(1.0);

double sup_diff(const HoloMap& a, const std::function<C(C)>& b, const DiskGrid& g) {
    double w = 0.0;
    for (C p : g.points) w = std::max(w, std::abs(a(p) - b(p)));
    return w;
}
}  // namespace

TEST_CASE("assemble examples") {
    const DiskGrid g = DiskGrid::standard();
    CHECK(sup_diff(assemble(1.0, certify_positive(half_plane)).f(), [](C w) { return w - 1.0; }, g) < 1e-13);
    CHECK(sup_diff(assemble(0.0, certify_positive(one)).f(), [](C w) { return w; }, g) == 0.0);
    CHECK(sup_diff(assemble(1.0, certify_positive(one)).f(), [](C w) { return -(1.0 - w) * (1.0 - w); }, g) < 1e-14);
}

TEST_CASE("decompose examples") {
    const DiskGrid g = DiskGrid::certification();
    CHECK(sup_diff(decompose(z - 1.0, 1.0).map(), [](C w) { return 1.0 / (1.0 - w); }, g) < 1e-10);
    CHECK(sup_diff(decompose(z, 0.0).map(), [](C) { return C(1.0); }, g) < 1e-12);
    CHECK_THROWS_AS(decompose(-(1.0 - z) * (1.0 - z), 0.0), NotPositive);
    // Oracle for the previous line: the candidate quotient at 0.5.
    CHECK((-(1.0 - C(0.5)) * (1.0 - C(0.5)) / C(0.5)).real() == doctest::Approx(-0.5));
}

TEST_CASE("boundary derivative") {
    CHECK(std::abs(boundary_derivative(assemble(1.0, certify_positive(half_plane))) - 1.0) < 1e-12);
    CHECK(std::abs(boundary_derivative(assemble(1.0, certify_positive(one)))) < 1e-12);
    CHECK(std::abs(boundary_derivative(assemble(0.5, certify_positive(one))) - 0.75) < 1e-14);
}

TEST_CASE("membership in G+[1]") {
    const GPlusVerdict a = is_G_plus_1(z - 1.0);
    CHECK(a.member);
    CHECK(a.beta == doctest::Approx(1.0));
    const GPlusVerdict b = is_G_plus_1(-(1.0 - z) * (1.0 - z));
    CHECK_FALSE(b.member);
    CHECK(std::abs(b.beta) < 1e-12);
    CHECK_FALSE(is_G_plus_1(z).member);
    CHECK((C(0.5) / ((C(0.5) - 1.0) * (1.0 - C(0.5)))).real() == doctest::Approx(-2.0));
}

TEST_CASE("assemble/decompose roundtrip") {
    const DiskGrid g = DiskGrid::certification();
    for (C tau : {C(0.0), C(0.5), C(0.0, 0.5), C(1.0)}) {
        for (const HoloMap& pm : {one, half_plane, cayley}) {
            const CaratheodoryFn p = certify_positive(pm);
            const CaratheodoryFn back = decompose(assemble(tau, p).f(), tau);
            double worst = 0.0;
            for (C w : g.points) worst = std::max(worst, std::abs(back(w) - p(w)) / std::max(1.0, std::abs(p(w))));
            CHECK(worst < 1e-11);
        }
    }
}

TEST_CASE("generators with a common null point form a real cone") {
    for (C tau : {C(0.0), C(0.5), C(1.0)}) {
        const HoloMap f1 = assemble(tau, certify_positive(half_plane)).f();
        const HoloMap f2 = assemble(tau, certify_positive(cayley)).f();
        for (double a : {0.0, 0.3, 2.0})
            for (double b : {0.0, 1.5})
                if (a + b > 0.0) CHECK_NOTHROW(decompose(a * f1 + b * f2, tau));
    }
}

TEST_CASE("angular derivative equals the charge at 1") {
    for (const HoloMap& pm : {one, half_plane, cayley}) {
        const CaratheodoryFn p = certify_positive(pm);
        const double beta = boundary_derivative(assemble(1.0, p)).real();
        CHECK(std::abs(beta - charge(p, 1.0).delta) < 1e-6);
    }
}

TEST_CASE("elliptic warning for imaginary p") {
    const Generator rot = assemble(0.0, certify_positive(HoloMap::constant(C(0.0, 1.0))));
    CHECK(rot.elliptic_warning());
    CHECK_FALSE(assemble(0.0, certify_positive(one)).elliptic_warning());
}
