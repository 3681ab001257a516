#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "holo/cli/config.hpp"
#include "holo/csv.hpp"
#include "holo/holomap.hpp"

namespace holo::cli {

/// Image of the circle |z| = r under one map.
struct Curve {
    std::string name;  // goes into the "# map=<name> r=<r>" header
    std::string stem;  // output file name without extension
    HoloMap map;
    double r = 0.0;
    std::vector<double> theta;
    std::vector<Complex> w;

    csv::Table table() const;
};

/// Samples m(r e^{i theta}) at theta_j = 2 pi j / n_theta.
Curve sample_curve(std::string name, std::string stem, const HoloMap& m, double r, int n_theta);

/// Curves described by the [figure] section. Families:
///   example2-approx   q = 1 - z and q_tau built with `gamma` (default 1)
///   example3-perturb  h = (1 - z)^0.8 and perturb(h, mu, tau), mu default 0.8
///   example1          koenigs of (z - tau)(1 - z tau)/(1 - z) with mu = 1 + tau
///   stock             one curve for each name in `maps`
/// The tau sequence comes from `taus` or `tau_scale` with `n`.
std::vector<Curve> figure_curves(const Config& cfg);

/// Writes the figure described by the config into out_dir and returns the
/// written paths. `kind = sigma` writes the valence regions instead.
std::vector<std::filesystem::path> write_figure(const Config& cfg, const std::filesystem::path& out_dir);

/// Valence regions over a window of the lambda plane read from `section`
/// (beta, re_min, re_max, im_min, im_max, step, name), columns re,im,k.
std::vector<std::filesystem::path> write_sigma(const Config& cfg, const std::string& section,
                                               const std::filesystem::path& out_dir);

}  // namespace holo::cli
