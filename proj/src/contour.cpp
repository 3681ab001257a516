#include "holo/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace holo {

ContourSampler::ContourSampler(HoloMap m, double r, int initial_nodes, int max_nodes)
    : m_(std::move(m)), r_(r), initial_(initial_nodes), max_nodes_(max_nodes) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("contour radius must lie in (0, 1)");
    if (initial_nodes < 4 || max_nodes < initial_nodes)
        throw DomainError("contour node counts must satisfy 4 <= initial <= max");
    ensure(initial_);
}

void ContourSampler::ensure(int nodes) {
    if (nodes > max_nodes_) throw DomainError("requested more contour nodes than the cap");
    if (level_nodes_ == 0) {
        z_.resize(initial_);
        jets_.resize(initial_);
        for (int j = 0; j < initial_; ++j) {
            z_[j] = std::polar(r_, 2.0 * std::numbers::pi * j / initial_);
            jets_[j] = m_.jet(z_[j]);
        }
        level_nodes_ = initial_;
    }
    while (level_nodes_ < nodes) {
        const int n = 2 * level_nodes_;
        std::vector<Complex> z(n);
        std::vector<Jet> jets(n);
        for (int j = 0; j < level_nodes_; ++j) {
            z[2 * j] = z_[j];
            jets[2 * j] = jets_[j];
            z[2 * j + 1] = std::polar(r_, 2.0 * std::numbers::pi * (2 * j + 1) / n);
            jets[2 * j + 1] = m_.jet(z[2 * j + 1]);
        }
        z_ = std::move(z);
        jets_ = std::move(jets);
        level_nodes_ = n;
    }
}

Complex ContourSampler::winding_estimate(Complex w0, int nodes) {
    ensure(nodes);
    const int stride = level_nodes_ / nodes;
    Complex sum{0.0, 0.0};
    for (int j = 0; j < level_nodes_; j += stride)
        sum += jets_[j].slope * z_[j] / (jets_[j].value - w0);
    return sum / double(nodes);
}

double ContourSampler::min_distance(Complex w0, int nodes) {
    ensure(nodes);
    const int stride = level_nodes_ / nodes;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < level_nodes_; j += stride)
        best = std::min(best, std::abs(jets_[j].value - w0));
    return best;
}

int ContourSampler::count(Complex w0) {
    int n = initial_;
    if (min_distance(w0, n) < tol::kContourRoot)
        throw RootOnContour("m - w0 vanishes on the contour for w0 = " + format_complex(w0));
    Complex prev = winding_estimate(w0, n);
    bool settled = false;
    while (2 * n <= max_nodes_) {
        n *= 2;
        if (min_distance(w0, n) < tol::kContourRoot)
            throw RootOnContour("m - w0 vanishes on the contour for w0 = " + format_complex(w0));
        const Complex est = winding_estimate(w0, n);
        const bool close = std::abs(est - prev) < 1e-6;
        prev = est;
        if (close) {
            settled = true;
            break;
        }
    }
    const double k = std::round(prev.real());
    const double residual = std::abs(prev - Complex{k, 0.0});
    if (!settled || residual >= 0.1)
        throw Unresolved("winding estimate " + format_complex(prev) + " for w0 = " +
                         format_complex(w0) + " does not round cleanly");
    return static_cast<int>(k);
}

double ContourSampler::min_modulus() {
    double best = std::numeric_limits<double>::infinity();
    for (const Jet& j : jets_) best = std::min(best, std::abs(j.value));
    return best;
}

double ContourSampler::max_modulus() {
    double best = 0.0;
    for (const Jet& j : jets_) best = std::max(best, std::abs(j.value));
    return best;
}

int count_preimages(const HoloMap& m, Complex w0, double r, int nodes) {
    ContourSampler sampler(m, r, nodes);
    return sampler.count(w0);
}

}  // namespace holo
