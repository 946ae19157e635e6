#include "lhsys/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace lhsys {

struct CoefficientFunction::Node {
    enum class Kind {
        Constant,
        PolyInT,
        Harmonic,
        Exponential,
        Sum,
        Product,
        Quotient,
        Sampled,
        ExpIntegral
    };

    Kind kind = Kind::Constant;
    double a = 0, b = 0, c = 0, d = 0;  // kind-dependent parameters
    std::vector<double> coeffs;
    std::vector<CoefficientFunction> children;
    std::vector<std::pair<double, double>> knots;
    Interp rule = Interp::Linear;

    // ExpIntegral: cached cumulative integral values, keyed by t. Per-instance
    // and not synchronized; coefficient functions are not shared across
    // threads mid-integration.
    mutable std::map<double, double> integral_cache;
};

namespace {

double adaptive_simpson(const CoefficientFunction& f, double a, double fa, double b, double fb,
                        double fm, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0) return left + right;
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

double integrate_segment(const CoefficientFunction& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, fa, b, fb, fm, whole, tol, 48);
}

}  // namespace

CoefficientFunction::CoefficientFunction() : node_(std::make_shared<Node>()) {}

CoefficientFunction CoefficientFunction::constant(double value) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Constant;
    n->a = value;
    return CoefficientFunction(std::move(n));
}

CoefficientFunction CoefficientFunction::polynomial_in_t(std::vector<double> coeffs) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::PolyInT;
    n->coeffs = std::move(coeffs);
    return CoefficientFunction(std::move(n));
}

CoefficientFunction CoefficientFunction::harmonic(double amplitude, double omega, double phase,
                                                  double offset) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Harmonic;
    n->a = amplitude;
    n->b = omega;
    n->c = phase;
    n->d = offset;
    return CoefficientFunction(std::move(n));
}

CoefficientFunction CoefficientFunction::exponential(double scale, double rate) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Exponential;
    n->a = scale;
    n->b = rate;
    return CoefficientFunction(std::move(n));
}

CoefficientFunction CoefficientFunction::sum(std::vector<CoefficientFunction> terms) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Sum;
    n->children = std::move(terms);
    return CoefficientFunction(std::move(n));
}

CoefficientFunction CoefficientFunction::product(std::vector<CoefficientFunction> factors) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Product;
    n->children = std::move(factors);
    return CoefficientFunction(std::move(n));
}

CoefficientFunction CoefficientFunction::quotient(CoefficientFunction num,
                                                  CoefficientFunction den) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Quotient;
    n->children = {std::move(num), std::move(den)};
    return CoefficientFunction(std::move(n));
}

CoefficientFunction CoefficientFunction::sampled(std::vector<std::pair<double, double>> knots,
                                                 Interp rule) {
    if (knots.size() < 2) throw std::invalid_argument("sampled: at least two knots required");
    for (size_t i = 1; i < knots.size(); ++i)
        if (!(knots[i - 1].first < knots[i].first))
            throw std::invalid_argument("sampled: knots must be strictly increasing");
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Sampled;
    n->knots = std::move(knots);
    n->rule = rule;
    return CoefficientFunction(std::move(n));
}

CoefficientFunction CoefficientFunction::exp_integral(CoefficientFunction inner, double scale) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::ExpIntegral;
    n->a = scale;
    n->children = {std::move(inner)};
    n->integral_cache.emplace(0.0, 0.0);
    return CoefficientFunction(std::move(n));
}

CoefficientFunction CoefficientFunction::negate(CoefficientFunction f) {
    return product({constant(-1.0), std::move(f)});
}

double CoefficientFunction::operator()(double t) const {
    const Node& n = *node_;
    switch (n.kind) {
        case Node::Kind::Constant:
            return n.a;
        case Node::Kind::PolyInT: {
            double acc = 0.0;
            for (auto it = n.coeffs.rbegin(); it != n.coeffs.rend(); ++it) acc = acc * t + *it;
            return acc;
        }
        case Node::Kind::Harmonic:
            return n.a * std::sin(n.b * t + n.c) + n.d;
        case Node::Kind::Exponential:
            return n.a * std::exp(n.b * t);
        case Node::Kind::Sum: {
            double acc = 0.0;
            for (const auto& ch : n.children) acc += ch(t);
            return acc;
        }
        case Node::Kind::Product: {
            double acc = 1.0;
            for (const auto& ch : n.children) acc *= ch(t);
            return acc;
        }
        case Node::Kind::Quotient: {
            const double den = n.children[1](t);
            if (den == 0.0)
                throw std::domain_error("coefficient quotient: zero denominator at t = " +
                                        std::to_string(t));
            return n.children[0](t) / den;
        }
        case Node::Kind::Sampled: {
            const auto& k = n.knots;
            if (t < k.front().first || t > k.back().first)
                throw std::domain_error("sampled coefficient evaluated outside knot range at t = " +
                                        std::to_string(t));
            auto it = std::lower_bound(k.begin(), k.end(), t,
                                       [](const auto& kn, double x) { return kn.first < x; });
            if (it == k.begin()) return it->second;
            if (it == k.end()) return k.back().second;
            const auto& [t1, v1] = *it;
            const auto& [t0, v0] = *(it - 1);
            if (t == t1) return v1;
            return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
        }
        case Node::Kind::ExpIntegral: {
            auto& cache = n.integral_cache;
            auto it = cache.lower_bound(t);
            // Nearest cached knot, exact hit included.
            if (it != cache.end() && it->first == t) return std::exp(n.a * it->second);
            double t0, i0;
            if (it == cache.begin()) {
                t0 = it->first;
                i0 = it->second;
            } else if (it == cache.end()) {
                t0 = std::prev(it)->first;
                i0 = std::prev(it)->second;
            } else {
                auto lo = std::prev(it);
                if (t - lo->first <= it->first - t) {
                    t0 = lo->first;
                    i0 = lo->second;
                } else {
                    t0 = it->first;
                    i0 = it->second;
                }
            }
            const double tol = 1e-12 * std::max(1.0, std::abs(t - t0));
            const double value = i0 + integrate_segment(n.children[0], t0, t, tol);
            cache.emplace(t, value);
            return std::exp(n.a * value);
        }
    }
    throw std::logic_error("unreachable coefficient kind");
}

CoefficientFunction CoefficientFunction::derivative() const {
    const Node& n = *node_;
    switch (n.kind) {
        case Node::Kind::Constant:
            return constant(0.0);
        case Node::Kind::PolyInT: {
            std::vector<double> d;
            for (size_t i = 1; i < n.coeffs.size(); ++i)
                d.push_back(static_cast<double>(i) * n.coeffs[i]);
            if (d.empty()) d.push_back(0.0);
            return polynomial_in_t(std::move(d));
        }
        case Node::Kind::Harmonic:
            return harmonic(n.a * n.b, n.b, n.c + std::numbers::pi / 2.0, 0.0);
        case Node::Kind::Exponential:
            return exponential(n.a * n.b, n.b);
        case Node::Kind::Sum: {
            std::vector<CoefficientFunction> d;
            for (const auto& ch : n.children) d.push_back(ch.derivative());
            return sum(std::move(d));
        }
        case Node::Kind::Product: {
            std::vector<CoefficientFunction> terms;
            for (size_t i = 0; i < n.children.size(); ++i) {
                std::vector<CoefficientFunction> factors;
                for (size_t j = 0; j < n.children.size(); ++j)
                    factors.push_back(i == j ? n.children[j].derivative() : n.children[j]);
                terms.push_back(product(std::move(factors)));
            }
            return sum(std::move(terms));
        }
        case Node::Kind::Quotient: {
            const auto& f = n.children[0];
            const auto& g = n.children[1];
            auto num = sum({product({f.derivative(), g}),
                            negate(product({f, g.derivative()}))});
            return quotient(std::move(num), product({g, g}));
        }
        case Node::Kind::Sampled:
            throw std::domain_error("sampled coefficient has no analytic derivative");
        case Node::Kind::ExpIntegral:
            // d/dt exp(s I(t)) = s f(t) exp(s I(t)).
            return product({constant(n.a), n.children[0], *this});
    }
    throw std::logic_error("unreachable coefficient kind");
}

bool CoefficientFunction::is_zero() const {
    const Node& n = *node_;
    switch (n.kind) {
        case Node::Kind::Constant:
            return n.a == 0.0;
        case Node::Kind::PolyInT:
            return std::all_of(n.coeffs.begin(), n.coeffs.end(),
                               [](double c) { return c == 0.0; });
        case Node::Kind::Harmonic:
            return n.a == 0.0 && n.d == 0.0;
        case Node::Kind::Exponential:
            return n.a == 0.0;
        case Node::Kind::Sum:
            return std::all_of(n.children.begin(), n.children.end(),
                               [](const auto& c) { return c.is_zero(); });
        case Node::Kind::Product:
            return std::any_of(n.children.begin(), n.children.end(),
                               [](const auto& c) { return c.is_zero(); });
        case Node::Kind::Quotient:
            return n.children[0].is_zero();
        default:
            return false;
    }
}

nlohmann::json CoefficientFunction::to_json() const {
    const Node& n = *node_;
    using nlohmann::json;
    switch (n.kind) {
        case Node::Kind::Constant:
            return json{{"type", "constant"}, {"value", n.a}};
        case Node::Kind::PolyInT:
            return json{{"type", "poly"}, {"coeffs", n.coeffs}};
        case Node::Kind::Harmonic:
            return json{{"type", "harmonic"},
                        {"amplitude", n.a},
                        {"omega", n.b},
                        {"phase", n.c},
                        {"offset", n.d}};
        case Node::Kind::Exponential:
            return json{{"type", "exp"}, {"scale", n.a}, {"rate", n.b}};
        case Node::Kind::Sum: {
            json terms = json::array();
            for (const auto& ch : n.children) terms.push_back(ch.to_json());
            return json{{"type", "sum"}, {"terms", terms}};
        }
        case Node::Kind::Product: {
            json factors = json::array();
            for (const auto& ch : n.children) factors.push_back(ch.to_json());
            return json{{"type", "product"}, {"factors", factors}};
        }
        case Node::Kind::Quotient:
            return json{{"type", "quotient"},
                        {"num", n.children[0].to_json()},
                        {"den", n.children[1].to_json()}};
        case Node::Kind::Sampled: {
            json pts = json::array();
            for (const auto& [t, v] : n.knots) pts.push_back(json::array({t, v}));
            return json{{"type", "sampled"}, {"points", pts}, {"rule", "linear"}};
        }
        case Node::Kind::ExpIntegral:
            return json{{"type", "exp_integral"},
                        {"scale", n.a},
                        {"inner", n.children[0].to_json()}};
    }
    throw std::logic_error("unreachable coefficient kind");
}

CoefficientFunction CoefficientFunction::from_json(const nlohmann::json& j) {
    if (j.is_number()) return constant(j.get<double>());
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument("coefficient: expected number or {type: ...} object");
    const std::string type = j.at("type").get<std::string>();
    if (type == "constant") return constant(j.at("value").get<double>());
    if (type == "poly") return polynomial_in_t(j.at("coeffs").get<std::vector<double>>());
    if (type == "harmonic")
        return harmonic(j.at("amplitude").get<double>(), j.at("omega").get<double>(),
                        j.value("phase", 0.0), j.value("offset", 0.0));
    if (type == "exp") return exponential(j.at("scale").get<double>(), j.at("rate").get<double>());
    if (type == "sum") {
        std::vector<CoefficientFunction> terms;
        for (const auto& ch : j.at("terms")) terms.push_back(from_json(ch));
        return sum(std::move(terms));
    }
    if (type == "product") {
        std::vector<CoefficientFunction> factors;
        for (const auto& ch : j.at("factors")) factors.push_back(from_json(ch));
        return product(std::move(factors));
    }
    if (type == "quotient") return quotient(from_json(j.at("num")), from_json(j.at("den")));
    if (type == "sampled") {
        std::vector<std::pair<double, double>> knots;
        for (const auto& p : j.at("points"))
            knots.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        const std::string rule = j.value("rule", "linear");
        if (rule != "linear")
            throw std::invalid_argument("sampled: unsupported interpolation rule '" + rule + "'");
        return sampled(std::move(knots));
    }
    if (type == "exp_integral")
        return exp_integral(from_json(j.at("inner")), j.at("scale").get<double>());
    throw std::invalid_argument("coefficient: unknown type '" + type + "'");
}

}  // namespace lhsys
