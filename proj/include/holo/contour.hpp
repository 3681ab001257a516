#pragma once

#include <vector>

#include "holo/holomap.hpp"

namespace holo {

/// Samples of m and m' on the circle |z| = r at 2^k-refinable trapezoid
/// nodes. Refinement only evaluates the new odd nodes, so many targets can
/// share one sampler.
class ContourSampler {
public:
    ContourSampler(HoloMap m, double r, int initial_nodes, int max_nodes = 1 << 19);

    double radius() const noexcept { return r_; }
    int max_nodes() const noexcept { return max_nodes_; }

    /// Winding estimate (1/2 pi i) of the contour integral of m'/(m - w0)
    /// using the first `nodes` trapezoid nodes (nodes must be a power-of-two
    /// multiple of the initial count and at most max_nodes).
    Complex winding_estimate(Complex w0, int nodes);

    /// Minimum |m - w0| over the nodes of that level.
    double min_distance(Complex w0, int nodes);

    /// Count with doubling refinement; see count_preimages.
    int count(Complex w0);

    /// Extremes of |m| on the currently sampled nodes.
    double min_modulus();
    double max_modulus();

    int initial_nodes() const noexcept { return initial_; }

private:
    void ensure(int nodes);

    HoloMap m_;
    double r_;
    int initial_;
    int max_nodes_;
    int level_nodes_ = 0;
    // Stored in natural angular order for the current level.
    std::vector<Complex> z_;
    std::vector<Jet> jets_;
};

}  // namespace holo
