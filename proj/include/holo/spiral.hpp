#pragma once

#include <optional>

#include "holo/grid.hpp"
#include "holo/holomap.hpp"

namespace holo {

/// Solution h of lambda h = h' f, normalized h(0) = 1 for a boundary null
/// point, or h(tau) = 0 and h(0) = tau for an interior one.
struct SpirallikeFn {
    HoloMap h;
    Complex lambda;
    HoloMap f;
    Complex tau{1.0, 0.0};
};

/// h = exp(mu * integral of 1/f along [0, z]).
SpirallikeFn koenigs(const HoloMap& f, Complex mu);

enum class OmegaRegion { Plus, Minus, Outside };

struct OmegaVerdict {
    OmegaRegion region = OmegaRegion::Outside;
    double beta = 0.0;
};

/// Locates lambda relative to the closed disks |w -+ beta| <= beta without 0.
/// Throws InvalidLambda for lambda = 0 and DomainError for beta <= 0.
OmegaVerdict omega_classify(Complex lambda, double beta);
bool in_omega_plus(Complex lambda, double beta);

/// h_tau = h^(mu/lambda) (z - tau)(1 - z conj(tau))^(mu/conj(mu)) / (-(1 - z)^(1 + mu/conj(mu))),
/// where h solves against h.f in G+[1]. The result carries the generator
/// f_tau = (z - tau)(1 - z conj(tau)) / q_tau with q_tau built for gamma = 1/mu.
SpirallikeFn perturb(const SpirallikeFn& h, Complex mu, Complex tau);

struct Factorization {
    HoloMap h_star;
    /// 2 inf |1 - z|^2 / (1 - |z|^2) Re(z h_*'/h_*), expected near 1.
    double inf_value = 0.0;
};

/// h_* = z h^(1/lambda) / (1 - z)^2, so that h = (1 - z)^(2 lambda) (h_*/z)^lambda.
Factorization factorize(const SpirallikeFn& h);
/// (1 - z)^(2 lambda) (h_*/z)^lambda.
HoloMap reconstruct_from_factor(const HoloMap& h_star, Complex lambda);

/// min over the grid of
/// Re[(2 beta/lambda) z h'/h + (1 + z)/(1 - z) + (2 beta/lambda) z w'/w],
/// the weight term dropped when w is absent.
double robertson_residual(const HoloMap& h, Complex lambda, const std::optional<HoloMap>& w,
                          double beta, const DiskGrid& grid = DiskGrid::standard());

/// sup over the grid of |mu h - h' f|.
double ode_residual(const HoloMap& h, const HoloMap& f, Complex mu,
                    const DiskGrid& grid = DiskGrid::standard());

}  // namespace holo
