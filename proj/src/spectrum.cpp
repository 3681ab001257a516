#include "holo/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "holo/caratheodory.hpp"
#include "holo/generators.hpp"
#include "holo/parallel.hpp"

namespace holo {

namespace {

bool in_k_disk(Complex lambda, double beta, std::int64_t k) {
    const double kb = double(k) * beta;
    const double sign = lambda.real() > 0.0 ? 1.0 : -1.0;
    return std::abs(lambda - sign * kb) <= kb + 1e-12;
}

}  // namespace

ValenceCell classify_lambda(Complex lambda, double beta) {
    if (!(beta > 0.0)) throw DomainError("classify_lambda needs beta > 0");
    ValenceCell cell{lambda, beta, std::nullopt};
    if (std::abs(lambda.real()) <= 1e-12) return cell;
    const double x = std::norm(lambda) / (2.0 * beta * std::abs(lambda.real()));
    std::int64_t k = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(x)) - 1);
    while (k > 1 && in_k_disk(lambda, beta, k - 1)) --k;
    while (!in_k_disk(lambda, beta, k)) ++k;
    cell.k = k;
    return cell;
}

Eigenfunction eigenfunction(const WeightedEigenproblem& prob) {
    if (prob.lambda == Complex{0.0, 0.0}) throw InvalidLambda("eigenfunction needs lambda != 0");
    const GPlusVerdict v = is_G_plus_1(prob.f);
    if (!v.member) throw NotAdmissible("eigenfunction needs f in G+[1]: " + v.reason);
    Eigenfunction out;
    out.beta = v.beta;
    out.h_star = koenigs(prob.f, v.beta).h;
    const HoloMap power = transported_power(out.h_star, prob.lambda / v.beta);
    if (!prob.w) {
        out.a = 1.0;
        out.h = power;
        return out;
    }
    const HoloMap raw = power * reciprocal_of(*prob.w);
    const Complex origin{0.0, 0.0};
    Complex w0;
    bool w0_finite = true;
    try {
        w0 = (*prob.w)(origin);
    } catch (const SingularPoint&) {
        w0_finite = false;
    }
    if (w0_finite && std::abs(w0) > tol::kSingular) {
        out.a = 1.0 / (w0 * power(origin));
    } else {
        const Jet j = raw.jet(origin);
        if (std::abs(j.value) > 1e-12 || std::abs(j.slope) < tol::kSingular)
            throw SingularPoint("weight gives no simple zero of h at 0");
        out.a = 1.0 / j.slope;
    }
    out.h = out.a * raw;
    return out;
}

double eigen_residual(const WeightedEigenproblem& prob, const HoloMap& h, const DiskGrid& grid) {
    std::vector<double> v(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const Complex z = grid.points[i];
        const Jet hj = h.jet(z);
        const Complex fz = prob.f(z);
        Complex e = hj.slope * fz - prob.lambda * hj.value;
        if (prob.w) {
            const Jet wj = prob.w->jet(z);
            e += hj.value * fz * wj.slope / wj.value;
        }
        v[i] = std::abs(e);
    });
    return *std::max_element(v.begin(), v.end());
}

ValenceReport measure_valence_report(const HoloMap& h, double r, int n_targets,
                                     const ValenceOptions& opts) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("valence radius must lie in (0, 1)");
    if (n_targets < 1) throw DomainError("valence needs at least one target");
    ContourSampler sampler(h, r, opts.initial_nodes, opts.max_nodes);
    const double lo = std::max(sampler.min_modulus(), 1e-12);
    const double hi = std::max(sampler.max_modulus(), 2.0 * lo);
    const int n_mod = static_cast<int>(std::ceil(std::sqrt(double(n_targets))));
    const int n_arg = (n_targets + n_mod - 1) / n_mod;

    std::mt19937_64 rng(opts.seed);
    const double offset = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);

    ValenceReport rep;
    for (int i = 0; i < n_mod && rep.targets < n_targets; ++i) {
        const double s = (i + 0.5) / n_mod;
        const double modulus = std::exp(std::log(lo) + s * (std::log(hi) - std::log(lo)));
        double jitter = offset + golden * i;
        jitter -= std::floor(jitter);
        for (int j = 0; j < n_arg && rep.targets < n_targets; ++j) {
            const double theta = 2.0 * std::numbers::pi * (j + jitter) / n_arg;
            const Complex w0 = std::polar(modulus, theta);
            ++rep.targets;
            try {
                rep.valence = std::max(rep.valence, sampler.count(w0));
                ++rep.counted;
            } catch (const Unresolved&) {
            } catch (const RootOnContour&) {
            }
        }
    }
    if (rep.counted == 0) throw Unresolved("no valence target produced a clean count");
    return rep;
}

int measure_valence(const HoloMap& h, double r, int n_targets, const ValenceOptions& opts) {
    return measure_valence_report(h, r, n_targets, opts).valence;
}

BshoutyLyzzaik bshouty_lyzzaik(const HoloMap& omega) {
    const Complex one{1.0, 0.0};
    for (Complex z : DiskGrid::certification().points)
        if (!(std::abs(omega(z)) < 1.0 + 1e-12))
            throw NotAdmissible("omega is not a self-map of the disk at z = " + format_complex(z));
    Complex at_one;
    Complex slope;
    try {
        at_one = radial_limit(omega, one).value;
        slope = radial_limit((1.0 - omega) / (1.0 - HoloMap::identity()), one).value;
    } catch (const NoFiniteLimit& e) {
        throw NotAdmissible(std::string("omega has no usable boundary data at 1: ") + e.what());
    }
    if (std::abs(at_one - one) > 1e-8)
        throw NotAdmissible("omega(1) = " + format_complex(at_one) + " is not 1");
    if (std::abs(slope.imag()) > 1e-8 || !(slope.real() > 1e-12))
        throw NotAdmissible("angular derivative " + format_complex(slope) + " is not positive");
    BshoutyLyzzaik out;
    out.alpha = slope.real();
    const HoloMap z = HoloMap::identity();
    const HoloMap p = (out.alpha / 2.0) * (1.0 + omega) / (1.0 - omega);
    out.f = -((1.0 - z) * (1.0 - z)) * p;
    out.h = koenigs(out.f, 2.0 * out.alpha).h;
    out.k_predicted = static_cast<int>(std::ceil(out.alpha - 1e-9));
    return out;
}

std::vector<SigmaCell> sigma_map(double beta, double re_min, double re_max, double im_min,
                                 double im_max, double step) {
    if (!(step > 0.0) || re_max < re_min || im_max < im_min)
        throw DomainError("invalid sigma map window");
    const int nr = static_cast<int>(std::floor((re_max - re_min) / step + 1e-9)) + 1;
    const int ni = static_cast<int>(std::floor((im_max - im_min) / step + 1e-9)) + 1;
    std::vector<SigmaCell> cells;
    cells.reserve(static_cast<std::size_t>(nr) * ni);
    for (int j = 0; j < ni; ++j) {
        for (int i = 0; i < nr; ++i) {
            const double re = re_min + i * step;
            const double im = im_min + j * step;
            const ValenceCell c = classify_lambda({re, im}, beta);
            cells.push_back({re, im, c.k ? *c.k : -1});
        }
    }
    return cells;
}

}  // namespace holo
