#include "holo/errors.hpp"

#include <cstdio>

namespace holo {

NotPositive::NotPositive(double min_re, Complex argmin)
    : Error("real part " + std::to_string(min_re) + " below the positivity threshold at z = " +
            format_complex(argmin)),
      min_re_(min_re),
      argmin_(argmin) {}

std::string format_complex(Complex z) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
    return buf;
}

}  // namespace holo
