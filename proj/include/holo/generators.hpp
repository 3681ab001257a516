#pragma once

#include <optional>
#include <string>

#include "holo/caratheodory.hpp"

namespace holo {

/// Berkson-Porta generator f(z) = (z - tau)(1 - z conj(tau)) p(z).
class Generator {
public:
    Complex tau() const noexcept { return tau_; }
    const CaratheodoryFn& p() const noexcept { return p_; }
    const HoloMap& f() const noexcept { return f_; }
    Complex operator()(Complex z) const { return f_(z); }
    bool boundary() const noexcept { return std::abs(tau_) >= 1.0 - 1e-12; }
    /// Set when Re p vanishes on the whole grid, i.e. p is an imaginary
    /// constant and f may generate a group of elliptic automorphisms.
    bool elliptic_warning() const noexcept { return p_.certificate().max_abs_re < 1e-9; }

private:
    Generator(Complex tau, CaratheodoryFn p, HoloMap f)
        : tau_(tau), p_(std::move(p)), f_(std::move(f)) {}
    friend Generator assemble(Complex tau, const CaratheodoryFn& p);

    Complex tau_;
    CaratheodoryFn p_;
    HoloMap f_;
};

/// The divisor (z - tau)(1 - z conj(tau)).
HoloMap berkson_porta_factor(Complex tau);

/// Builds f and checks the null-point conditions at tau.
Generator assemble(Complex tau, const CaratheodoryFn& p);

/// p = f / ((z - tau)(1 - z conj(tau))), certified positive.
CaratheodoryFn decompose(const HoloMap& f, Complex tau,
                         const DiskGrid& grid = DiskGrid::certification());

/// f'(tau) for interior tau, the angular derivative beta at a boundary tau.
/// The boundary value is real and nonnegative (imaginary part exactly 0).
Complex boundary_derivative(const Generator& g);
/// Angular derivative of f at the unimodular tau.
double angular_derivative(const HoloMap& f, Complex tau);

struct GPlusVerdict {
    bool member = false;
    /// NaN when the decomposition at 1 already fails.
    double beta = 0.0;
    std::string reason;
};

/// Whether f lies in G+[1]: decomposes at 1 with beta > 0.
GPlusVerdict is_G_plus_1(const HoloMap& f);

}  // namespace holo
