#pragma once

#include <vector>

#include "holo/errors.hpp"

namespace holo {

enum class RadialSpacing {
    Uniform,   // r_i = r_max * i / n
    Boundary,  // r_i = r_max * (1 - (1 - i/n)^2), denser toward |z| = r_max
};

/// Finite sample of the disk standing in for "uniformly on compact subsets".
struct DiskGrid {
    std::vector<Complex> points;
    int n_radial = 0;
    int n_angular = 0;
    double r_max = 0.0;

    /// Polar grid with angles 2 pi j / n_angular.
    static DiskGrid polar(int n_radial, int n_angular, double r_max,
                          RadialSpacing spacing = RadialSpacing::Uniform,
                          bool include_origin = false);

    /// 48 x 128 boundary-concentrated, r_max = 0.995. Used for positivity.
    static DiskGrid certification();
    /// 21 x 64 uniform, r_max = 0.95.
    static DiskGrid standard();
    /// The closed disk |z| <= radius, origin included.
    static DiskGrid compact(double radius, int n_radial = 10, int n_angular = 64);
    /// n points on the circle |z| = radius.
    static DiskGrid circle(double radius, int n);

    std::size_t size() const noexcept { return points.size(); }
};

}  // namespace holo
