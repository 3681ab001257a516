#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holo/contour.hpp"
#include "holo/spiral.hpp"

namespace holo {

/// Valence class of an eigenvalue: k is empty for infinite valence.
struct ValenceCell {
    Complex lambda;
    double beta = 0.0;
    std::optional<std::int64_t> k;

    bool infinite() const noexcept { return !k.has_value(); }
};

/// Smallest k >= 1 with lambda in k Omega+ or k Omega-, infinite when
/// Re lambda = 0 (within 1e-12).
ValenceCell classify_lambda(Complex lambda, double beta);

/// h' f + h f w'/w = lambda h with f in G+[1]. An absent weight means w = 1.
struct WeightedEigenproblem {
    HoloMap f;
    std::optional<HoloMap> w;
    Complex lambda;
};

struct Eigenfunction {
    HoloMap h;
    /// Koenigs function h* = exp(beta * integral of 1/f).
    HoloMap h_star;
    double beta = 0.0;
    /// The normalizing constant a in w h = a (h*)^(lambda/beta).
    Complex a;
};

/// h = a (h*)^(lambda/beta) / w. The constant a makes w h equal 1 at 0 when
/// w(0) is finite and nonzero, otherwise it makes the coefficient of z in h
/// equal to 1.
Eigenfunction eigenfunction(const WeightedEigenproblem& prob);

/// sup over the grid of |h' f + h f w'/w - lambda h|.
double eigen_residual(const WeightedEigenproblem& prob, const HoloMap& h,
                      const DiskGrid& grid = DiskGrid::standard());

struct ValenceOptions {
    int initial_nodes = 1024;
    int max_nodes = 1 << 19;
    std::uint64_t seed = 0x5eed;
};

struct ValenceReport {
    int valence = 0;
    int targets = 0;
    int counted = 0;  // targets that produced a clean count
};

/// Maximum of count_preimages(h, w0, r) over n_targets values w0 with
/// log-spaced moduli between the extremes of |h| on the circle and
/// uniformly spread, jittered arguments. Targets whose count is unresolved
/// are skipped. A lower bound for the valence of h on the disk.
ValenceReport measure_valence_report(const HoloMap& h, double r, int n_targets,
                                     const ValenceOptions& opts = {});
int measure_valence(const HoloMap& h, double r, int n_targets, const ValenceOptions& opts = {});

struct BshoutyLyzzaik {
    HoloMap h;
    HoloMap f;
    double alpha = 0.0;
    int k_predicted = 0;
};

/// p = (alpha/2)(1 + omega)/(1 - omega), f = -(1 - z)^2 p, h = koenigs(f, 2 alpha).
BshoutyLyzzaik bshouty_lyzzaik(const HoloMap& omega);

struct SigmaCell {
    double re = 0.0;
    double im = 0.0;
    std::int64_t k = 0;  // -1 for infinite valence
};

/// classify_lambda over the rectangle [re_min, re_max] x [im_min, im_max].
std::vector<SigmaCell> sigma_map(double beta, double re_min, double re_max, double im_min,
                                 double im_max, double step);

}  // namespace holo
