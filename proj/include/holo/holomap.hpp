#pragma once

// Holomorphic maps on the unit disk as immutable expression trees.
//
// A HoloMap is a shared handle to a node of an expression tree. Nodes are
// never modified after construction, so handles can be copied freely and
// evaluated concurrently. Every node knows its own derivative rule, and
// evaluation always produces the value together with the exact derivative
// (forward mode), see Jet.

#include <cstdint>
#include <memory>
#include <string>

#include "holo/errors.hpp"

namespace holo {

/// Value and complex derivative at a point.
struct Jet {
    Complex value;
    Complex slope;
};

namespace tol {
/// Denominators and logarithm arguments below this modulus are singular.
inline constexpr double kSingular = 1e-13;
/// Reciprocal integrands below this modulus count as zeros on the path.
inline constexpr double kZeroOnPath = 1e-12;
/// Minimum |m - w0| on a counting contour.
inline constexpr double kContourRoot = 1e-8;
}  // namespace tol

class HoloMap {
public:
    enum class Kind : std::uint8_t {
        Constant,
        Identity,
        Sum,
        Product,
        Quotient,
        Compose,
        Power,
        Exp,
        Log,
        ReciprocalIntegral,
        RemovableQuotient,
    };

    /// The identity map z.
    HoloMap();

    static HoloMap constant(Complex c);
    static HoloMap identity();

    /// Value at z. Requires |z| < 1.
    Complex operator()(Complex z) const;
    /// Value and derivative at z. Requires |z| < 1.
    Jet jet(Complex z) const;

    /// Evaluation without the disk check, used when tree nodes are probed
    /// at intermediate values (composition, contour integrals near 0).
    Jet jet_unchecked(Complex z) const;

    Kind kind() const noexcept;
    bool is_constant() const noexcept { return kind() == Kind::Constant; }
    /// Only meaningful when is_constant().
    Complex constant_value() const noexcept;

    std::string to_string() const;

    struct Node;
    const Node& node() const noexcept { return *node_; }

private:
    explicit HoloMap(std::shared_ptr<const Node> node);
    friend struct NodeFactory;

    std::shared_ptr<const Node> node_;
};

// Builders. All of them fold constants; none of them rewrites an existing node.
HoloMap operator+(const HoloMap& a, const HoloMap& b);
HoloMap operator-(const HoloMap& a, const HoloMap& b);
HoloMap operator*(const HoloMap& a, const HoloMap& b);
HoloMap operator/(const HoloMap& a, const HoloMap& b);
HoloMap operator-(const HoloMap& a);
HoloMap operator+(const HoloMap& a, Complex c);
HoloMap operator+(Complex c, const HoloMap& a);
HoloMap operator-(const HoloMap& a, Complex c);
HoloMap operator-(Complex c, const HoloMap& a);
HoloMap operator*(const HoloMap& a, Complex c);
HoloMap operator*(Complex c, const HoloMap& a);
HoloMap operator/(const HoloMap& a, Complex c);
HoloMap operator/(Complex c, const HoloMap& a);

/// outer(inner(z)).
HoloMap compose(const HoloMap& outer, const HoloMap& inner);
/// exp(exponent * Log(base)) on the principal branch.
HoloMap principal_power(const HoloMap& base, Complex exponent);
HoloMap exp(const HoloMap& m);
/// Principal logarithm.
HoloMap log(const HoloMap& m);
/// z -> integral of 1/f along the segment [0, z].
HoloMap reciprocal_integral(const HoloMap& f);
/// g(z)/(z - center) where g(center) = 0 analytically. Evaluation at the
/// center returns g'(center); near it the removable singularity is resolved
/// by a Cauchy integral on a small circle.
HoloMap removable_quotient(const HoloMap& g, Complex center = Complex{0.0, 0.0});

/// m^c where m = exp(X) is transported as exp(c X) and any other map uses the
/// principal power. Avoids branch cuts for Koenigs-type maps.
HoloMap transported_power(const HoloMap& m, Complex c);

/// 1/m, where a quotient a/b is inverted to b/a so that removable zeros of
/// b do not become poles of the result.
HoloMap reciprocal_of(const HoloMap& m);

Complex eval(const HoloMap& m, Complex z);
Complex derivative(const HoloMap& m, Complex z);

/// Parameters of the radial Richardson extrapolation.
struct LimitOptions {
    double eps0 = 0.1;
    int halvings = 8;
    double tol = 1e-6;
};

struct LimitEstimate {
    Complex value;
    double error;
};

/// Limit of m(point + eps * direction) as eps -> 0+, sampled at
/// eps_k = eps0 * 2^-k and accelerated by Richardson extrapolation.
/// Throws NoFiniteLimit when the extrapolants do not settle within tol.
LimitEstimate directional_limit(const HoloMap& m, Complex point, Complex direction,
                                const LimitOptions& opts = {});

/// Limit of m((1 - eps) tau) for |tau| = 1.
LimitEstimate radial_limit(const HoloMap& m, Complex tau, const LimitOptions& opts = {});

/// Integral of 1/f along [0, z] by adaptive Gauss-Legendre quadrature.
Complex segment_integral_reciprocal(const HoloMap& f, Complex z, int order = 16);

/// Argument-principle count of the roots of m(z) = w0 inside |z| < r.
/// `nodes` is the initial number of trapezoid nodes on the circle; the rule
/// is refined by doubling until successive estimates agree.
int count_preimages(const HoloMap& m, Complex w0, double r, int nodes = 1024);

}  // namespace holo
