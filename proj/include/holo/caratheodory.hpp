#pragma once

#include <functional>
#include <utility>

#include "holo/grid.hpp"
#include "holo/holomap.hpp"

namespace holo {

namespace tol {
/// Sampled real parts below this fail the positivity test.
inline constexpr double kPositivity = -1e-9;
}  // namespace tol

struct PositivityCertificate {
    int n_radial = 0;
    int n_angular = 0;
    double r_max = 0.0;
    std::size_t n_points = 0;
    double min_re = 0.0;
    Complex argmin;
    /// Largest |Re| seen; used to flag Re p == 0 (rotation generators).
    double max_abs_re = 0.0;
};

/// A map with sampled nonnegative real part.
class CaratheodoryFn {
public:
    const HoloMap& map() const noexcept { return map_; }
    const PositivityCertificate& certificate() const noexcept { return cert_; }
    Complex operator()(Complex z) const { return map_(z); }

private:
    CaratheodoryFn(HoloMap m, PositivityCertificate c) : map_(std::move(m)), cert_(c) {}
    friend CaratheodoryFn certify_positive(const HoloMap& m, const DiskGrid& grid);

    HoloMap map_;
    PositivityCertificate cert_;
};

/// Throws NotPositive when min Re m over the grid is below -1e-9. Singular
/// points hit by the grid count as violations.
CaratheodoryFn certify_positive(const HoloMap& m, const DiskGrid& grid = DiskGrid::certification());

enum class ChargeMethod { RadialLimit, InfForm };

struct ChargeReport {
    Complex tau;
    double delta = 0.0;
    ChargeMethod method = ChargeMethod::RadialLimit;
    double error_estimate = 0.0;
};

/// Options of the inf-form estimate.
struct InfFormOptions {
    int depth = 10;          // radii 1 - 2^-k, k = 1..depth
    double r_max = 0.999;    // radii are clipped here
    int n_angular = 64;      // offsets on each side of tau
};

/// Point charge of p at the unimodular tau. The radial method takes the
/// limit of (1 - z conj(tau)) p(z); the inf form is 2 inf of
/// |1 - z conj(tau)|^2 / (1 - |z|^2) Re p(z) on a grid crowding toward tau,
/// which over-estimates the true infimum.
ChargeReport charge(const CaratheodoryFn& p, Complex tau,
                    ChargeMethod method = ChargeMethod::RadialLimit,
                    const InfFormOptions& inf_opts = {});

/// Infimum part of the inf form for an arbitrary map (no certification).
/// Returns {2 * inf, change between the two outermost radii}.
std::pair<double, double> inf_form(const HoloMap& p, Complex tau, const InfFormOptions& opts = {});
/// Same, for values supplied by a callable.
std::pair<double, double> inf_form(const std::function<Complex(Complex)>& p, Complex tau,
                                   const InfFormOptions& opts = {});

/// q = 1/p. When p carries a charge beta > 0 at 1 the relations q(1) = 0 and
/// q'(1) = -1/beta are checked on the radial limits.
CaratheodoryFn reciprocal(const CaratheodoryFn& p);

struct BoundaryConformality {
    Complex value;
    Complex slope;
    bool conformal = false;
};

/// Radial value and angular derivative of q at 1.
BoundaryConformality conformality_at_one(const CaratheodoryFn& q);
BoundaryConformality conformality_at_one(const HoloMap& q);

}  // namespace holo
