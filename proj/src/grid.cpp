#include "holo/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace holo {

DiskGrid DiskGrid::polar(int n_radial, int n_angular, double r_max, RadialSpacing spacing,
                         bool include_origin) {
    if (n_radial < 1 || n_angular < 1) throw DomainError("grid needs at least one radius and angle");
    if (!(r_max > 0.0 && r_max < 1.0))
        throw DomainError("grid radius must lie in (0, 1), got " + std::to_string(r_max));
    DiskGrid g;
    g.n_radial = n_radial;
    g.n_angular = n_angular;
    g.r_max = r_max;
    g.points.reserve(static_cast<std::size_t>(n_radial) * n_angular + (include_origin ? 1 : 0));
    if (include_origin) g.points.emplace_back(0.0, 0.0);
    for (int i = 1; i <= n_radial; ++i) {
        const double s = double(i) / n_radial;
        const double r =
            spacing == RadialSpacing::Uniform ? r_max * s : r_max * (1.0 - (1.0 - s) * (1.0 - s));
        for (int j = 0; j < n_angular; ++j)
            g.points.push_back(std::polar(r, 2.0 * std::numbers::pi * j / n_angular));
    }
    return g;
}

DiskGrid DiskGrid::certification() {
    static const DiskGrid g = polar(48, 128, 0.995, RadialSpacing::Boundary);
    return g;
}

DiskGrid DiskGrid::standard() {
    static const DiskGrid g = polar(21, 64, 0.95);
    return g;
}

DiskGrid DiskGrid::compact(double radius, int n_radial, int n_angular) {
    return polar(n_radial, n_angular, radius, RadialSpacing::Uniform, true);
}

DiskGrid DiskGrid::circle(double radius, int n) {
    DiskGrid g = polar(1, n, radius);
    return g;
}

}  // namespace holo
