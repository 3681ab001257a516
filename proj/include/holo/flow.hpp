#pragma once

#include <vector>

#include "holo/grid.hpp"
#include "holo/spiral.hpp"

namespace holo {

struct FlowOptions {
    double atol = 1e-10;
    double rtol = 1e-10;
    int max_steps = 1000000;
    /// Trial points with |z| >= 1 - disk_margin are rejected.
    double disk_margin = 1e-12;
};

/// Samples (t_i, F_{t_i}(z0)) of the semigroup generated by f.
struct Trajectory {
    std::vector<double> t;
    std::vector<Complex> z;
    HoloMap f;
    Complex z0;

    Complex back() const { return z.back(); }
    std::size_t size() const noexcept { return t.size(); }
};

/// Solves dz/dt = -f(z), z(0) = z0, on [0, T] with an embedded
/// Dormand-Prince 5(4) pair. With `times` empty every accepted step is
/// recorded; otherwise the trajectory holds exactly 0, the requested times
/// (sorted, inside [0, T]) and T, from the dense output.
Trajectory integrate_flow(const HoloMap& f, Complex z0, double T,
                          const std::vector<double>& times = {}, const FlowOptions& opts = {});

/// F_t(z0) by integration.
Complex flow_point(const HoloMap& f, Complex z0, double t, const FlowOptions& opts = {});

/// Solves h(zeta) = e^{-mu t} h(z) by damped Newton from the integrated
/// endpoint under h.f. Throws NewtonDiverged when the residual does not drop
/// below 1e-11 max(1, |target|) within 50 iterations.
Complex schroder_flow(const SpirallikeFn& h, Complex mu, Complex z, double t,
                      const FlowOptions& opts = {});

struct RecoveryRow {
    Complex z;
    Complex estimate;  // (z - F_t(z)) / t
    Complex exact;     // f(z)
    double error = 0.0;
};

std::vector<RecoveryRow> generator_recovery(const HoloMap& f, const DiskGrid& grid, double t,
                                            const FlowOptions& opts = {});
double max_recovery_error(const std::vector<RecoveryRow>& rows);

/// [|F_t(z) - tau|^2 / (1 - |F_t(z)|^2)] / [e^{-t gamma} |z - tau|^2 / (1 - |z|^2)].
double julia_ratio(const HoloMap& f, Complex tau, double gamma, Complex z, double t,
                   const FlowOptions& opts = {});

struct StabilityRow {
    Complex tau;
    double sup_error = 0.0;
};

/// For each tau, sup over grid x {16 times in [0, T]} of |F_t^(tau) - F_t|
/// with F^(tau) generated by build_f_tau(f, mu, tau).
std::vector<StabilityRow> stability_table(const HoloMap& f, Complex mu,
                                          const std::vector<Complex>& taus, double T,
                                          const DiskGrid& grid, const FlowOptions& opts = {});

}  // namespace holo
