#include "holo/stock.hpp"

#include <algorithm>

#include "holo/spectrum.hpp"

namespace holo {

const std::vector<std::string>& stock_names() {
    static const std::vector<std::string> names = {
        "identity",       "one-minus-z",      "z-minus-one",     "one-plus-z",
        "cayley",         "half-plane",       "z-one-minus-z",   "example1",
        "example2-approx", "example3-perturb", "bshouty-omega-z", "bshouty-omega-z2",
    };
    return names;
}

HoloMap stock_map(const std::string& name) {
    const HoloMap z = HoloMap::identity();
    if (name == "identity") return z;
    if (name == "one-minus-z" || name == "example1" || name == "example2-approx") return 1.0 - z;
    if (name == "z-minus-one") return z - 1.0;
    if (name == "one-plus-z") return 1.0 + z;
    if (name == "cayley") return (1.0 + z) / (1.0 - z);
    if (name == "half-plane") return 1.0 / (1.0 - z);
    if (name == "z-one-minus-z") return z * (1.0 - z);
    if (name == "example3-perturb") return principal_power(1.0 - z, 0.8);
    if (name == "bshouty-omega-z") return bshouty_lyzzaik(z).h;
    if (name == "bshouty-omega-z2") return bshouty_lyzzaik(z * z).h;
    std::string known;
    for (const auto& n : stock_names()) known += (known.empty() ? "" : ", ") + n;
    throw DomainError("unknown stock map '" + name + "' (known: " + known + ")");
}

HoloMap example1_generator(Complex tau) {
    const HoloMap z = HoloMap::identity();
    return (z - tau) * (1.0 - z * tau) / (1.0 - z);
}

}  // namespace holo
