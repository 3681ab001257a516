#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library beyond evaluating maps.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using C = std::complex<double>;

inline C central_difference(const std::function<C(C)>& f, C z, double h = 1e-5) {
    return (f(z + h) - f(z - h)) / (2.0 * h);
}

/// Composite Simpson rule along [a, b] with n (even) panels.
inline C simpson(const std::function<C(C)>& g, C a, C b, int n = 2000) {
    const C h = (b - a) / double(n);
    C s = g(a) + g(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * g(a + double(i) * h);
    return s * h / 3.0;
}

/// Roots of the monic polynomial with the given coefficients (lowest
/// degree first) by Durand-Kerner iteration.
inline std::vector<C> poly_roots(std::vector<C> coeffs) {
    const std::size_t n = coeffs.size() - 1;
    std::vector<C> roots(n);
    for (std::size_t i = 0; i < n; ++i) roots[i] = std::pow(C(0.4, 0.9), double(i));
    auto eval = [&](C z) {
        C v = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;) v = v * z + coeffs[i];
        return v;
    };
    for (int it = 0; it < 500; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            C den = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) den *= roots[i] - roots[j];
            roots[i] -= eval(roots[i]) / den;
        }
    }
    return roots;
}

inline std::vector<C> polar_samples(double r_max, int n_r, int n_a, bool origin = true) {
    std::vector<C> pts;
    if (origin) pts.emplace_back(0.0, 0.0);
    for (int i = 1; i <= n_r; ++i)
        for (int j = 0; j < n_a; ++j)
            pts.push_back(std::polar(r_max * i / n_r, 2.0 * std::numbers::pi * (j + 0.25) / n_a));
    return pts;
}

}  // namespace oracle
