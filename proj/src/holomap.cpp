#include "holo/holomap.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "holo/quadrature.hpp"

namespace holo {

struct HoloMap::Node {
    Kind kind;
    Complex param;  // constant value, exponent or removable center
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

struct NodeFactory {
    static HoloMap make(HoloMap::Kind kind, Complex param = {},
                        std::shared_ptr<const HoloMap::Node> lhs = nullptr,
                        std::shared_ptr<const HoloMap::Node> rhs = nullptr) {
        return HoloMap(std::make_shared<const HoloMap::Node>(
            HoloMap::Node{kind, param, std::move(lhs), std::move(rhs)}));
    }
    static HoloMap wrap(std::shared_ptr<const HoloMap::Node> node) {
        return HoloMap(std::move(node));
    }
    static const std::shared_ptr<const HoloMap::Node>& ptr(const HoloMap& m) { return m.node_; }
};

namespace {

using Node = HoloMap::Node;
using Kind = HoloMap::Kind;

Jet eval_node(const Node& n, Complex z);

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Removable singularity g(z)/(z - c): Cauchy integral over a small circle
// around c reproduces the holomorphic extension and its derivative.
Jet removable_cauchy(const Node& g, Complex c, Complex z, double rho) {
    constexpr int kNodes = 32;
    Complex value{0.0, 0.0};
    Complex slope{0.0, 0.0};
    for (int j = 0; j < kNodes; ++j) {
        const Complex offset =
            std::polar(rho, 2.0 * std::numbers::pi * (j + 0.5) / kNodes);
        const Complex zeta = c + offset;
        const Complex h = eval_node(g, zeta).value / offset;
        const Complex d = zeta - z;
        value += h * offset / d;
        slope += h * offset / (d * d);
    }
    return {value / double(kNodes), slope / double(kNodes)};
}

double removable_radius(Complex center) {
    const double room = 1.0 - std::abs(center);
    return room > 0.0 ? std::min(0.05, 0.5 * room) : 0.05;
}

Jet eval_node(const Node& n, Complex z) {
    switch (n.kind) {
    case Kind::Constant:
        return {n.param, {0.0, 0.0}};
    case Kind::Identity:
        return {z, {1.0, 0.0}};
    case Kind::Sum: {
        const Jet a = eval_node(*n.lhs, z);
        const Jet b = eval_node(*n.rhs, z);
        return {a.value + b.value, a.slope + b.slope};
    }
    case Kind::Product: {
        const Jet a = eval_node(*n.lhs, z);
        const Jet b = eval_node(*n.rhs, z);
        return {a.value * b.value, a.slope * b.value + a.value * b.slope};
    }
    case Kind::Quotient: {
        const Jet a = eval_node(*n.lhs, z);
        const Jet b = eval_node(*n.rhs, z);
        if (std::abs(b.value) < tol::kSingular)
            throw SingularPoint("denominator vanishes at z = " + format_complex(z));
        const Complex v = a.value / b.value;
        return {v, (a.slope - v * b.slope) / b.value};
    }
    case Kind::Compose: {
        const Jet inner = eval_node(*n.rhs, z);
        const Jet outer = eval_node(*n.lhs, inner.value);
        return {outer.value, outer.slope * inner.slope};
    }
    case Kind::Power: {
        const Jet b = eval_node(*n.lhs, z);
        if (std::abs(b.value) < tol::kSingular ||
            (b.value.real() <= 0.0 && std::abs(b.value.imag()) <= tol::kSingular))
            throw BranchCut("power base " + format_complex(b.value) + " on the branch cut at z = " +
                            format_complex(z));
        const Complex v = std::exp(n.param * std::log(b.value));
        return {v, n.param * v * b.slope / b.value};
    }
    case Kind::Exp: {
        const Jet a = eval_node(*n.lhs, z);
        const Complex v = std::exp(a.value);
        return {v, v * a.slope};
    }
    case Kind::Log: {
        const Jet a = eval_node(*n.lhs, z);
        if (std::abs(a.value) < tol::kSingular)
            throw SingularPoint("logarithm of zero at z = " + format_complex(z));
        return {std::log(a.value), a.slope / a.value};
    }
    case Kind::ReciprocalIntegral: {
        const HoloMap f = NodeFactory::wrap(n.lhs);
        const Complex fz = eval_node(*n.lhs, z).value;
        if (std::abs(fz) < tol::kZeroOnPath)
            throw ZeroOnPath("integrand denominator vanishes at z = " + format_complex(z));
        return {segment_integral_reciprocal(f, z), 1.0 / fz};
    }
    case Kind::RemovableQuotient: {
        const Complex c = n.param;
        const Complex d = z - c;
        const double rho = removable_radius(c);
        if (d == Complex{0.0, 0.0}) {
            const Jet g = eval_node(*n.lhs, c);
            return {g.slope, removable_cauchy(*n.lhs, c, z, rho).slope};
        }
        if (std::abs(d) < rho / 50.0) return removable_cauchy(*n.lhs, c, z, rho);
        const Jet g = eval_node(*n.lhs, z);
        const Complex v = g.value / d;
        return {v, (g.slope - v) / d};
    }
    }
    throw Error("unknown node kind");
}

void print(std::ostream& os, const Node& n) {
    switch (n.kind) {
    case Kind::Constant:
        if (n.param.imag() == 0.0)
            os << n.param.real();
        else
            os << '(' << format_complex(n.param) << ')';
        return;
    case Kind::Identity:
        os << 'z';
        return;
    case Kind::Sum:
        os << '(';
        print(os, *n.lhs);
        os << " + ";
        print(os, *n.rhs);
        os << ')';
        return;
    case Kind::Product:
        print(os, *n.lhs);
        os << '*';
        print(os, *n.rhs);
        return;
    case Kind::Quotient:
        print(os, *n.lhs);
        os << "/(";
        print(os, *n.rhs);
        os << ')';
        return;
    case Kind::Compose:
        os << '[';
        print(os, *n.lhs);
        os << "]o[";
        print(os, *n.rhs);
        os << ']';
        return;
    case Kind::Power:
        os << '(';
        print(os, *n.lhs);
        os << ")^(" << format_complex(n.param) << ')';
        return;
    case Kind::Exp:
        os << "exp(";
        print(os, *n.lhs);
        os << ')';
        return;
    case Kind::Log:
        os << "Log(";
        print(os, *n.lhs);
        os << ')';
        return;
    case Kind::ReciprocalIntegral:
        os << "int_0^z 1/(";
        print(os, *n.lhs);
        os << ')';
        return;
    case Kind::RemovableQuotient:
        os << '[';
        print(os, *n.lhs);
        os << "]/(z - " << format_complex(n.param) << ')';
        return;
    }
}

const Complex kZero{0.0, 0.0};
const Complex kOne{1.0, 0.0};

bool is_const(const HoloMap& m, Complex c) { return m.is_constant() && m.constant_value() == c; }

}  // namespace

HoloMap::HoloMap() : HoloMap(identity()) {}

HoloMap::HoloMap(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

HoloMap HoloMap::constant(Complex c) {
    if (!finite(c)) throw DomainError("non-finite constant " + format_complex(c));
    return NodeFactory::make(Kind::Constant, c);
}

HoloMap HoloMap::identity() {
    static const HoloMap id = NodeFactory::make(Kind::Identity);
    return id;
}

HoloMap::Kind HoloMap::kind() const noexcept { return node_->kind; }

Complex HoloMap::constant_value() const noexcept { return node_->param; }

Jet HoloMap::jet_unchecked(Complex z) const { return eval_node(*node_, z); }

Jet HoloMap::jet(Complex z) const {
    if (!finite(z) || std::abs(z) >= 1.0)
        throw DomainError("evaluation point " + format_complex(z) + " outside the open disk");
    return eval_node(*node_, z);
}

Complex HoloMap::operator()(Complex z) const { return jet(z).value; }

std::string HoloMap::to_string() const {
    std::ostringstream os;
    os.precision(6);
    print(os, *node_);
    return os.str();
}

HoloMap operator+(const HoloMap& a, const HoloMap& b) {
    if (a.is_constant() && b.is_constant())
        return HoloMap::constant(a.constant_value() + b.constant_value());
    if (is_const(a, kZero)) return b;
    if (is_const(b, kZero)) return a;
    return NodeFactory::make(Kind::Sum, {}, NodeFactory::ptr(a), NodeFactory::ptr(b));
}

HoloMap operator*(const HoloMap& a, const HoloMap& b) {
    if (a.is_constant() && b.is_constant())
        return HoloMap::constant(a.constant_value() * b.constant_value());
    if (is_const(a, kZero) || is_const(b, kZero)) return HoloMap::constant(kZero);
    if (is_const(a, kOne)) return b;
    if (is_const(b, kOne)) return a;
    return NodeFactory::make(Kind::Product, {}, NodeFactory::ptr(a), NodeFactory::ptr(b));
}

HoloMap operator/(const HoloMap& a, const HoloMap& b) {
    if (b.is_constant()) {
        if (std::abs(b.constant_value()) < tol::kSingular)
            throw SingularPoint("division by the zero constant");
        if (a.is_constant()) return HoloMap::constant(a.constant_value() / b.constant_value());
        if (is_const(b, kOne)) return a;
    }
    return NodeFactory::make(Kind::Quotient, {}, NodeFactory::ptr(a), NodeFactory::ptr(b));
}

HoloMap operator-(const HoloMap& a) {
    if (a.is_constant()) return HoloMap::constant(-a.constant_value());
    return HoloMap::constant(-kOne) * a;
}

HoloMap operator-(const HoloMap& a, const HoloMap& b) {
    if (a.is_constant() && b.is_constant())
        return HoloMap::constant(a.constant_value() - b.constant_value());
    return a + (-b);
}

HoloMap operator+(const HoloMap& a, Complex c) { return a + HoloMap::constant(c); }
HoloMap operator+(Complex c, const HoloMap& a) { return HoloMap::constant(c) + a; }
HoloMap operator-(const HoloMap& a, Complex c) { return a - HoloMap::constant(c); }
HoloMap operator-(Complex c, const HoloMap& a) { return HoloMap::constant(c) - a; }
HoloMap operator*(const HoloMap& a, Complex c) { return a * HoloMap::constant(c); }
HoloMap operator*(Complex c, const HoloMap& a) { return HoloMap::constant(c) * a; }
HoloMap operator/(const HoloMap& a, Complex c) { return a / HoloMap::constant(c); }
HoloMap operator/(Complex c, const HoloMap& a) { return HoloMap::constant(c) / a; }

HoloMap compose(const HoloMap& outer, const HoloMap& inner) {
    if (outer.is_constant()) return outer;
    if (outer.kind() == Kind::Identity) return inner;
    if (inner.kind() == Kind::Identity) return outer;
    if (inner.is_constant())
        return HoloMap::constant(outer.jet_unchecked(inner.constant_value()).value);
    return NodeFactory::make(Kind::Compose, {}, NodeFactory::ptr(outer), NodeFactory::ptr(inner));
}

HoloMap principal_power(const HoloMap& base, Complex exponent) {
    if (!finite(exponent)) throw DomainError("non-finite exponent");
    if (exponent == kZero) return HoloMap::constant(kOne);
    if (exponent == kOne) return base;
    const HoloMap node = NodeFactory::make(Kind::Power, exponent, NodeFactory::ptr(base));
    if (base.is_constant()) return HoloMap::constant(node.jet_unchecked(kZero).value);
    return node;
}

HoloMap exp(const HoloMap& m) {
    if (m.is_constant()) return HoloMap::constant(std::exp(m.constant_value()));
    return NodeFactory::make(Kind::Exp, {}, NodeFactory::ptr(m));
}

HoloMap log(const HoloMap& m) {
    const HoloMap node = NodeFactory::make(Kind::Log, {}, NodeFactory::ptr(m));
    if (m.is_constant()) return HoloMap::constant(node.jet_unchecked(kZero).value);
    return node;
}

HoloMap reciprocal_integral(const HoloMap& f) {
    if (f.is_constant()) {
        if (std::abs(f.constant_value()) < tol::kZeroOnPath)
            throw ZeroOnPath("reciprocal integral of the zero constant");
        return HoloMap::identity() / f.constant_value();
    }
    return NodeFactory::make(Kind::ReciprocalIntegral, {}, NodeFactory::ptr(f));
}

HoloMap removable_quotient(const HoloMap& g, Complex center) {
    return NodeFactory::make(Kind::RemovableQuotient, center, NodeFactory::ptr(g));
}

HoloMap transported_power(const HoloMap& m, Complex c) {
    if (m.kind() == Kind::Exp) return exp(c * NodeFactory::wrap(m.node().lhs));
    return principal_power(m, c);
}

HoloMap reciprocal_of(const HoloMap& m) {
    if (m.kind() == Kind::Quotient)
        return NodeFactory::wrap(m.node().rhs) / NodeFactory::wrap(m.node().lhs);
    return 1.0 / m;
}

Complex eval(const HoloMap& m, Complex z) { return m(z); }

Complex derivative(const HoloMap& m, Complex z) { return m.jet(z).slope; }

LimitEstimate directional_limit(const HoloMap& m, Complex point, Complex direction,
                                const LimitOptions& opts) {
    const int n = opts.halvings;
    std::vector<std::vector<Complex>> table(n + 1);
    double eps = opts.eps0;
    for (int k = 0; k <= n; ++k, eps *= 0.5) {
        const Complex v = m.jet(point + eps * direction).value;
        if (!finite(v)) throw NoFiniteLimit("non-finite sample approaching " + format_complex(point));
        table[k].resize(k + 1);
        table[k][0] = v;
        double pow2 = 1.0;
        for (int j = 1; j <= k; ++j) {
            pow2 *= 2.0;
            table[k][j] = table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / (pow2 - 1.0);
        }
    }
    const Complex value = table[n][n];
    const double err = std::max(std::abs(value - table[n][n - 1]),
                                std::abs(value - table[n - 1][n - 1]));
    if (!finite(value) || !(err <= opts.tol * std::max(1.0, std::abs(value))))
        throw NoFiniteLimit("extrapolants do not settle approaching " + format_complex(point) +
                            " (error estimate " + std::to_string(err) + ")");
    return {value, err};
}

LimitEstimate radial_limit(const HoloMap& m, Complex tau, const LimitOptions& opts) {
    if (std::abs(std::abs(tau) - 1.0) > 1e-12)
        throw DomainError("radial limit needs a unimodular point, got " + format_complex(tau));
    return directional_limit(m, tau, -tau, opts);
}

Complex segment_integral_reciprocal(const HoloMap& f, Complex z, int order) {
    if (z == kZero) return kZero;
    auto integrand = [&f](Complex zeta) {
        const Complex fz = f.jet_unchecked(zeta).value;
        if (std::abs(fz) < tol::kZeroOnPath)
            throw ZeroOnPath("integrand denominator vanishes at " + format_complex(zeta));
        return 1.0 / fz;
    };
    quad::AdaptiveOptions opts;
    opts.order = order;
    return quad::integrate_segment(integrand, kZero, z, opts);
}

}  // namespace holo
