#pragma once

#include <json.hpp>

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace lhsys {

/// Time-dependent coefficient function b(t): a small closed expression
/// language that is deterministic, exactly serializable, and analytically
/// differentiable (Sampled excepted).
///
/// Beyond the basic node kinds, Quotient and ExpIntegral exist because the
/// physical presets need reciprocals 1/m(t) and the Caldirola-Kanai factors
/// exp(+-2 int_0^t lambda).
class CoefficientFunction {
public:
    enum class Interp { Linear };

    CoefficientFunction();  // zero

    static CoefficientFunction constant(double value);
    /// c0 + c1 t + c2 t^2 + ...
    static CoefficientFunction polynomial_in_t(std::vector<double> coeffs);
    /// amplitude * sin(omega t + phase) + offset
    static CoefficientFunction harmonic(double amplitude, double omega, double phase,
                                        double offset);
    /// scale * exp(rate t)
    static CoefficientFunction exponential(double scale, double rate);
    static CoefficientFunction sum(std::vector<CoefficientFunction> terms);
    static CoefficientFunction product(std::vector<CoefficientFunction> factors);
    static CoefficientFunction quotient(CoefficientFunction num, CoefficientFunction den);
    /// Table interpolation; knots strictly increasing, evaluation outside the
    /// knot range throws.
    static CoefficientFunction sampled(std::vector<std::pair<double, double>> knots,
                                       Interp rule = Interp::Linear);
    /// exp(scale * int_0^t inner(s) ds), the integral evaluated by cached
    /// incremental adaptive quadrature (tolerance 1e-12).
    static CoefficientFunction exp_integral(CoefficientFunction inner, double scale);

    static CoefficientFunction negate(CoefficientFunction f);

    double operator()(double t) const;

    /// Analytic derivative; throws std::domain_error for Sampled nodes.
    CoefficientFunction derivative() const;

    bool is_zero() const;

    nlohmann::json to_json() const;
    static CoefficientFunction from_json(const nlohmann::json& j);

private:
    struct Node;
    explicit CoefficientFunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

}  // namespace lhsys
