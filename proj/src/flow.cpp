#include "holo/flow.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "holo/approx.hpp"
#include "holo/parallel.hpp"

namespace holo {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
// Dense output (Hairer's contd5 coefficients).
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

struct Step {
    Complex y1;
    std::array<Complex, 7> k;
    double err;
};

class Rhs {
public:
    Rhs(const HoloMap& f, double limit) : f_(f), limit_(limit) {}
    // Returns false when the point leaves the admissible disk.
    bool operator()(Complex z, Complex* out) const {
        if (!(std::abs(z) < limit_)) return false;
        try {
            *out = -f_(z);
        } catch (const Error&) {
            return false;
        }
        return std::isfinite(out->real()) && std::isfinite(out->imag());
    }

private:
    const HoloMap& f_;
    double limit_;
};

bool try_step(const Rhs& rhs, Complex y, Complex k1, double h, const FlowOptions& opts, Step* s) {
    auto& k = s->k;
    k[0] = k1;
    if (!rhs(y + h * a21 * k[0], &k[1])) return false;
    if (!rhs(y + h * (a31 * k[0] + a32 * k[1]), &k[2])) return false;
    if (!rhs(y + h * (a41 * k[0] + a42 * k[1] + a43 * k[2]), &k[3])) return false;
    if (!rhs(y + h * (a51 * k[0] + a52 * k[1] + a53 * k[2] + a54 * k[3]), &k[4])) return false;
    if (!rhs(y + h * (a61 * k[0] + a62 * k[1] + a63 * k[2] + a64 * k[3] + a65 * k[4]), &k[5]))
        return false;
    s->y1 = y + h * (b1 * k[0] + b3 * k[2] + b4 * k[3] + b5 * k[4] + b6 * k[5]);
    if (!rhs(s->y1, &k[6])) return false;
    const Complex e =
        h * (e1 * k[0] + e3 * k[2] + e4 * k[3] + e5 * k[4] + e6 * k[5] + e7 * k[6]);
    const double sc = opts.atol + opts.rtol * std::max(std::abs(y), std::abs(s->y1));
    s->err = std::abs(e) / sc;
    return std::isfinite(s->err);
}

Complex dense(Complex y0, const Step& s, double h, double theta) {
    const auto& k = s.k;
    const Complex r1 = y0;
    const Complex r2 = s.y1 - y0;
    const Complex r3 = h * k[0] - r2;
    const Complex r4 = r2 - h * k[6] - r3;
    const Complex r5 =
        h * (d1 * k[0] + d3 * k[2] + d4 * k[3] + d5 * k[4] + d6 * k[5] + d7 * k[6]);
    const double t1 = 1.0 - theta;
    return r1 + theta * (r2 + t1 * (r3 + theta * (r4 + t1 * r5)));
}

}  // namespace

Trajectory integrate_flow(const HoloMap& f, Complex z0, double T, const std::vector<double>& times,
                          const FlowOptions& opts) {
    if (!(std::abs(z0) < 1.0)) throw DomainError("flow start outside the disk");
    if (!(T >= 0.0)) throw DomainError("flow horizon must be nonnegative");
    Trajectory tr;
    tr.f = f;
    tr.z0 = z0;
    tr.t.push_back(0.0);
    tr.z.push_back(z0);

    std::vector<double> want;
    const bool dense_mode = !times.empty();
    if (dense_mode) {
        for (double t : times)
            if (t > 0.0 && t <= T) want.push_back(t);
        want.push_back(T);
        std::sort(want.begin(), want.end());
        want.erase(std::unique(want.begin(), want.end()), want.end());
    }
    if (T == 0.0) return tr;

    const Rhs rhs(f, 1.0 - opts.disk_margin);
    Complex y = z0;
    Complex k1;
    if (!rhs(y, &k1)) throw StepFailure("generator not evaluable at the start point");
    double t = 0.0;
    double h = std::min(T, 1e-2);
    std::size_t next = 0;
    Step s;
    for (int n = 0; t < T; ++n) {
        if (n >= opts.max_steps) throw StepFailure("too many integration steps");
        if (h < 1e-14 * std::max(1.0, t))
            throw StepFailure("step size underflow at t = " + std::to_string(t));
        const bool last = t + h >= T;
        const double hh = last ? T - t : h;
        if (!try_step(rhs, y, k1, hh, opts, &s)) {
            h = 0.5 * hh;
            continue;
        }
        const double factor =
            std::clamp(0.9 * std::pow(std::max(s.err, 1e-16), -0.2), 0.2, 10.0);
        if (s.err > 1.0) {
            h = hh * std::max(0.2, factor);
            continue;
        }
        const double t1 = last ? T : t + hh;
        if (dense_mode) {
            while (next < want.size() && want[next] <= t1) {
                const double theta = (want[next] - t) / hh;
                tr.t.push_back(want[next]);
                tr.z.push_back(want[next] == t1 ? s.y1 : dense(y, s, hh, theta));
                ++next;
            }
        } else {
            tr.t.push_back(t1);
            tr.z.push_back(s.y1);
        }
        t = t1;
        y = s.y1;
        k1 = s.k[6];
        h = hh * factor;
    }
    return tr;
}

Complex flow_point(const HoloMap& f, Complex z0, double t, const FlowOptions& opts) {
    return integrate_flow(f, z0, t, {}, opts).back();
}

Complex schroder_flow(const SpirallikeFn& h, Complex mu, Complex z, double t,
                      const FlowOptions& opts) {
    if (!(std::abs(z) < 1.0)) throw DomainError("schroder_flow start outside the disk");
    if (t == 0.0) return z;
    const Complex target = std::exp(-mu * t) * h.h(z);
    const double tol = 1e-11 * std::max(1.0, std::abs(target));
    Complex zeta = flow_point(h.f, z, t, opts);
    Jet j = h.h.jet(zeta);
    double res = std::abs(j.value - target);
    for (int it = 0; it < 50 && res >= tol; ++it) {
        if (std::abs(j.slope) < tol::kSingular)
            throw NewtonDiverged("vanishing derivative at " + format_complex(zeta));
        Complex step = (j.value - target) / j.slope;
        bool improved = false;
        for (int halving = 0; halving < 40; ++halving, step *= 0.5) {
            const Complex cand = zeta - step;
            if (!(std::abs(cand) < 1.0)) continue;
            Jet cj;
            try {
                cj = h.h.jet(cand);
            } catch (const Error&) {
                continue;
            }
            const double cres = std::abs(cj.value - target);
            if (cres < res) {
                zeta = cand;
                j = cj;
                res = cres;
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    if (!(res < tol))
        throw NewtonDiverged("Schroder inversion stalled at residual " + std::to_string(res));
    return zeta;
}

std::vector<RecoveryRow> generator_recovery(const HoloMap& f, const DiskGrid& grid, double t,
                                            const FlowOptions& opts) {
    if (!(t > 0.0)) throw DomainError("generator recovery needs t > 0");
    std::vector<RecoveryRow> rows(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const Complex z = grid.points[i];
        RecoveryRow& r = rows[i];
        r.z = z;
        r.estimate = (z - flow_point(f, z, t, opts)) / t;
        r.exact = f(z);
        r.error = std::abs(r.estimate - r.exact);
    });
    return rows;
}

double max_recovery_error(const std::vector<RecoveryRow>& rows) {
    double m = 0.0;
    for (const auto& r : rows) m = std::max(m, r.error);
    return m;
}

double julia_ratio(const HoloMap& f, Complex tau, double gamma, Complex z, double t,
                   const FlowOptions& opts) {
    const Complex w = t == 0.0 ? z : flow_point(f, z, t, opts);
    const double lhs = std::norm(w - tau) / (1.0 - std::norm(w));
    const double rhs = std::exp(-t * gamma) * std::norm(z - tau) / (1.0 - std::norm(z));
    return lhs / rhs;
}

std::vector<StabilityRow> stability_table(const HoloMap& f, Complex mu,
                                          const std::vector<Complex>& taus, double T,
                                          const DiskGrid& grid, const FlowOptions& opts) {
    constexpr int kTimes = 16;
    std::vector<double> times(kTimes);
    for (int i = 0; i < kTimes; ++i) times[i] = T * i / (kTimes - 1);
    const std::size_t n = grid.size();

    std::vector<std::vector<Complex>> reference(n);
    if (T > 0.0)
        parallel_for(n, [&](std::size_t i) {
            reference[i] = integrate_flow(f, grid.points[i], T, times, opts).z;
        });

    std::vector<StabilityRow> rows;
    for (Complex tau : taus) {
        StabilityRow row{tau, 0.0};
        if (T > 0.0) {
            const HoloMap f_tau = build_f_tau(f, mu, tau).f();
            std::vector<double> err(n, 0.0);
            parallel_for(n, [&](std::size_t i) {
                const Trajectory tr = integrate_flow(f_tau, grid.points[i], T, times, opts);
                for (std::size_t k = 0; k < tr.size(); ++k)
                    err[i] = std::max(err[i], std::abs(tr.z[k] - reference[i][k]));
            });
            for (double e : err) row.sup_error = std::max(row.sup_error, e);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace holo
