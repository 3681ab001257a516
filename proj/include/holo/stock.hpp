#pragma once

#include <string>
#include <vector>

#include "holo/holomap.hpp"

namespace holo {

/// Named maps used by configs and the invariant suite:
/// identity, one-minus-z, z-minus-one, one-plus-z, cayley ((1+z)/(1-z)),
/// half-plane (1/(1-z)), z-one-minus-z, example1 (1 - z), example2-approx
/// (q = 1 - z), example3-perturb ((1 - z)^0.8), bshouty-omega-z,
/// bshouty-omega-z2 (the Bshouty-Lyzzaik maps for omega = z, z^2).
HoloMap stock_map(const std::string& name);
const std::vector<std::string>& stock_names();

/// Generator of the unstable family: (z - tau)(1 - z tau)/(1 - z).
HoloMap example1_generator(Complex tau);

}  // namespace holo
