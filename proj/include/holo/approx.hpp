#pragma once

#include <functional>
#include <vector>

#include "holo/generators.hpp"

namespace holo {

namespace tol {
/// Inclusive slack on the admissibility inequalities, relative to their scale.
inline constexpr double kAdmissible = 1e-12;
/// Smallest |mu| accepted as "mu != 0".
inline constexpr double kMinMu = 1e-6;
}  // namespace tol

struct ApproxConfig {
    Complex gamma;
    double alpha = 0.0;  // -q'(1)
    bool admissible = false;
};

/// Reads alpha = -q'(1) from the radial data of q and tests Re gamma >= alpha/2.
/// Throws NotAdmissible when q(1) != 0 or q is not conformal at 1.
ApproxConfig approx_config(const CaratheodoryFn& q, Complex gamma);

/// True when |mu - beta| <= beta and mu != 0.
bool mu_admissible(Complex mu, double beta);

/// r(z) = [z q(z) + gamma z^2 - conj(gamma) - 2iz Im gamma] / (-(1 - z)^2).
CaratheodoryFn build_r(const CaratheodoryFn& q, Complex gamma);

/// q_tau(z) = [(z - tau)(1 - z conj(tau)) r(z) + conj(gamma) tau
///             - gamma conj(tau) z^2 + 2iz Im gamma] / z.
/// The bracket vanishes at 0, and the division is carried out as a
/// removable quotient.
CaratheodoryFn build_q_tau(const CaratheodoryFn& r, Complex gamma, Complex tau);

/// p_tau = 1/q_tau for q = 1/p and gamma = 1/mu; p_tau(tau) = mu/(1 - |tau|^2).
CaratheodoryFn build_p_tau(const CaratheodoryFn& p, Complex mu, Complex tau);

/// f_tau = (z - tau)(1 - z conj(tau)) p_tau with p = decompose(f, 1).
Generator build_f_tau(const HoloMap& f, Complex mu, Complex tau);

enum class FamilyKind { Q, P, F };

/// A tau-indexed approximating family. Members are built on demand.
class ApproximantFamily {
public:
    using Builder = std::function<HoloMap(Complex)>;

    ApproximantFamily(FamilyKind kind, HoloMap base, Complex parameter, Builder member);

    /// {q_tau} for r = build_r(q, gamma).
    static ApproximantFamily q_family(const CaratheodoryFn& q, Complex gamma);
    /// {p_tau} interpolating mu / (1 - |tau|^2).
    static ApproximantFamily p_family(const CaratheodoryFn& p, Complex mu);
    /// {f_tau} with f_tau'(tau) = mu.
    static ApproximantFamily f_family(const HoloMap& f, Complex mu);

    FamilyKind kind() const noexcept { return kind_; }
    const HoloMap& base() const noexcept { return base_; }
    Complex parameter() const noexcept { return parameter_; }
    HoloMap member(Complex tau) const { return member_(tau); }

private:
    FamilyKind kind_;
    HoloMap base_;
    Complex parameter_;
    Builder member_;
};

struct ConvergenceRow {
    Complex tau;
    /// One sup error per compact.
    std::vector<double> sup_error;
};

/// sup over each compact of |member(tau) - target| for each tau.
std::vector<ConvergenceRow> convergence_report(const ApproximantFamily& fam, const HoloMap& target,
                                               const std::vector<Complex>& taus,
                                               const std::vector<DiskGrid>& compacts);

/// sup over the grid of |a - b|.
double sup_distance(const HoloMap& a, const HoloMap& b, const DiskGrid& grid);

/// Whether column `compact` of the report decreases from some row on
/// through to the end (the last two rows at least).
bool eventually_decreasing(const std::vector<ConvergenceRow>& rows, std::size_t compact);

}  // namespace holo
