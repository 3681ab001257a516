#pragma once

#include <functional>
#include <vector>

#include "holo/errors.hpp"

namespace holo::quad {

/// Nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule of the given order (1..128).
const GaussLegendreRule& gauss_legendre(int order);

struct AdaptiveOptions {
    int order = 16;
    double abs_tol = 1e-11;
    int max_depth = 20;
};

/// Integral of g along the straight segment [a, b] in the complex plane.
/// Panels are bisected until the single-panel and two-half estimates agree
/// to the (per-panel share of the) absolute tolerance. Throws NonConvergent
/// when max_depth is exceeded.
Complex integrate_segment(const std::function<Complex(Complex)>& g, Complex a, Complex b,
                          const AdaptiveOptions& opts = {});

}  // namespace holo::quad
