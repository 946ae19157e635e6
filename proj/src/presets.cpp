#include "lhsys/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace lhsys {

namespace {

constexpr int kValidationSamples = 1024;

void require_on_window(const CoefficientFunction& f, const Window& w, double bound,
                       const std::string& what) {
    for (int i = 0; i < kValidationSamples; ++i) {
        const double t = w.t0 + (w.t1 - w.t0) * i / (kValidationSamples - 1.0);
        if (!(f(t) > bound))
            throw std::domain_error(what + " violated at t = " + std::to_string(t));
    }
}

CoefficientFunction reciprocal(const CoefficientFunction& f) {
    return CoefficientFunction::quotient(CoefficientFunction::constant(1.0), f);
}

}  // namespace

LHSystemSpec em_preset(const EMFieldData& data, const Window& window,
                       std::vector<std::string>* warnings) {
    using CF = CoefficientFunction;
    for (int i = 0; i < 3; ++i)
        require_on_window(data.m[static_cast<size_t>(i)], window, 0.0,
                          "em_preset: m" + std::to_string(i + 1) + " > 0");

    if (warnings) {
        // gamma-double-dot must not vanish for the electric field to stay
        // time-dependent; sampled, analytic derivative when available.
        bool vanish = false;
        double t_at = window.t0;
        try {
            const CF gdd = data.gamma.derivative().derivative();
            for (int i = 0; i < kValidationSamples; ++i) {
                const double t = window.t0 + (window.t1 - window.t0) * i / (kValidationSamples - 1.0);
                if (std::abs(gdd(t)) < 1e-12) {
                    vanish = true;
                    t_at = t;
                    break;
                }
            }
        } catch (const std::domain_error&) {
            const double h = 1e-4 * std::max(1.0, window.t1 - window.t0);
            for (int i = 1; i + 1 < kValidationSamples; ++i) {
                const double t = window.t0 + (window.t1 - window.t0) * i / (kValidationSamples - 1.0);
                const double gdd =
                    (data.gamma(t + h) - 2.0 * data.gamma(t) + data.gamma(t - h)) / (h * h);
                if (std::abs(gdd) < 1e-6) {
                    vanish = true;
                    t_at = t;
                    break;
                }
            }
        }
        if (vanish)
            warnings->push_back("em_preset: gamma'' vanishes near t = " + std::to_string(t_at) +
                                "; the electric field is not strictly time-dependent there");
    }

    const auto& g = data.gamma;
    const auto& e = data.e;
    const auto& m = data.m;
    auto half = CF::constant(0.5);
    auto quarter = CF::constant(0.25);

    std::map<std::string, CF> b;
    b["b2"] = CF::negate(CF::quotient(CF::product({half, g, e[1]}), m[1]));
    b["b4"] = CF::quotient(CF::product({half, g, e[0]}), m[0]);
    b["b9"] = CF::negate(CF::quotient(CF::product({half, g, e[2]}), m[2]));
    b["b10"] = CF::sum({e[0], CF::quotient(CF::product({quarter, g, g, e[1], e[1]}), m[1])});
    b["b13"] = CF::sum({e[1], CF::quotient(CF::product({quarter, g, g, e[0], e[0]}), m[0])});
    b["b15"] = CF::sum({e[2], CF::quotient(CF::product({quarter, g, g, e[2], e[2]}), m[2])});
    b["b16"] = reciprocal(m[0]);
    b["b19"] = reciprocal(m[1]);
    b["b21"] = reciprocal(m[2]);
    return LHSystemSpec(AlgebraKind::Sp6, std::move(b));
}

namespace {

// Shared oscillator plumbing: kinetic/potential coefficients per axis plus
// the h^II coupling pattern b4 = -b2, b7 = -b3, b8 = -b6.
std::map<std::string, CoefficientFunction> oscillator_couplings(const OscillatorData& data) {
    using CF = CoefficientFunction;
    std::map<std::string, CF> b;
    b["b2"] = data.b2;
    b["b3"] = data.b3;
    b["b6"] = data.b6;
    b["b4"] = CF::negate(data.b2);
    b["b7"] = CF::negate(data.b3);
    b["b8"] = CF::negate(data.b6);
    return b;
}

const std::array<const char*, 3> kKinetic = {"b16", "b19", "b21"};
const std::array<const char*, 3> kPotential = {"b10", "b13", "b15"};

}  // namespace

LHSystemSpec cho_preset(const OscillatorData& data, const Window& window) {
    using CF = CoefficientFunction;
    for (int i = 0; i < 3; ++i) {
        require_on_window(data.m[static_cast<size_t>(i)], window, 0.0,
                          "cho_preset: m" + std::to_string(i + 1) + " > 0");
        // k_i > gamma_i^2 / (4 m_i)
        const auto& gi = data.gamma[static_cast<size_t>(i)];
        const CF rhs = CF::quotient(CF::product({CF::constant(0.25), gi, gi}),
                                    data.m[static_cast<size_t>(i)]);
        const CF margin = CF::sum({data.k[static_cast<size_t>(i)], CF::negate(rhs)});
        require_on_window(margin, window, 0.0,
                          "cho_preset: k" + std::to_string(i + 1) + " > gamma^2/(4m)");
    }

    auto b = oscillator_couplings(data);
    for (int i = 0; i < 3; ++i) {
        const auto& mi = data.m[static_cast<size_t>(i)];
        const auto& ki = data.k[static_cast<size_t>(i)];
        const auto& gi = data.gamma[static_cast<size_t>(i)];
        b[kKinetic[static_cast<size_t>(i)]] = reciprocal(mi);
        // m_i Omega_i^2 = k_i - gamma_i^2 / (4 m_i)
        b[kPotential[static_cast<size_t>(i)]] = CF::sum(
            {ki, CF::negate(CF::quotient(CF::product({CF::constant(0.25), gi, gi}), mi))});
    }
    return LHSystemSpec(AlgebraKind::Sp6, std::move(b));
}

LHSystemSpec cck_preset(const OscillatorData& data, const Window& window) {
    using CF = CoefficientFunction;
    for (int i = 0; i < 3; ++i) {
        require_on_window(data.m[static_cast<size_t>(i)], window, 0.0,
                          "cck_preset: m" + std::to_string(i + 1) + " > 0");
        require_on_window(data.k[static_cast<size_t>(i)], window, 0.0,
                          "cck_preset: k" + std::to_string(i + 1) + " > 0");
    }

    auto b = oscillator_couplings(data);
    for (int i = 0; i < 3; ++i) {
        const auto& mi = data.m[static_cast<size_t>(i)];
        const auto& ki = data.k[static_cast<size_t>(i)];
        const CF lambda = CF::quotient(data.gamma[static_cast<size_t>(i)], mi);
        // (1/m) e^{-2 int lambda} and m Omega^2 e^{+2 int lambda} = k e^{+2 int lambda}
        b[kKinetic[static_cast<size_t>(i)]] =
            CF::quotient(CF::exp_integral(lambda, -2.0), mi);
        b[kPotential[static_cast<size_t>(i)]] = CF::product({ki, CF::exp_integral(lambda, 2.0)});
    }
    return LHSystemSpec(AlgebraKind::Sp6, std::move(b));
}

LHSystemSpec su3_preset(const std::array<CoefficientFunction, 4>& atilde) {
    using CF = CoefficientFunction;
    std::map<std::string, CF> a;
    a["a1"] = CF::sum({atilde[0], atilde[1]});
    a["a2"] = CF::sum({atilde[2], atilde[3]});
    a["a4"] = CF::sum({atilde[0], CF::negate(atilde[1])});
    a["a5"] = CF::sum({atilde[2], CF::negate(atilde[3])});
    return LHSystemSpec(AlgebraKind::Su3, std::move(a));
}

double oscillator_frequency(const OscillatorData& data, int axis, double t, bool cck) {
    const double m = data.m[static_cast<size_t>(axis)](t);
    const double k = data.k[static_cast<size_t>(axis)](t);
    if (cck) return std::sqrt(k / m);
    const double g = data.gamma[static_cast<size_t>(axis)](t);
    return std::sqrt((k - g * g / (4.0 * m)) / m);
}

namespace {

const VariableSpace::Ptr& config3() {
    static const VariableSpace::Ptr space =
        VariableSpace::symbols({"q1", "q2", "q3"});
    return space;
}

}  // namespace

EMField::EMField(EMFieldData data) : data_(std::move(data)) {
    try {
        gamma_dot_ = data_.gamma.derivative();
        has_analytic_dot_ = true;
    } catch (const std::domain_error&) {
        has_analytic_dot_ = false;
    }
}

double EMField::gamma_dot(double t) const {
    if (has_analytic_dot_) return gamma_dot_(t);
    const double h = 1e-6;
    return (data_.gamma(t + h) - data_.gamma(t - h)) / (2.0 * h);
}

std::array<PolynomialD, 3> EMField::vector_potential(double t) const {
    const auto& s = config3();
    const double g = data_.gamma(t);
    return {PolynomialD::variable(s, "q2", -0.5 * g), PolynomialD::variable(s, "q1", 0.5 * g),
            PolynomialD::variable(s, "q3", 0.5 * g)};
}

PolynomialD EMField::scalar_potential() const {
    const auto& s = config3();
    PolynomialD phi = PolynomialD::zero(s);
    for (int i = 0; i < 3; ++i) {
        auto qi = PolynomialD::variable(s, i);
        phi += 0.5 * (qi * qi);
    }
    return phi;
}

std::array<double, 3> EMField::magnetic_field(double t) const {
    return {0.0, 0.0, data_.gamma(t)};
}

std::array<PolynomialD, 3> EMField::electric_field(double t) const {
    const auto& s = config3();
    const double gd = gamma_dot(t);
    // -grad phi - dA/dt = -1/2 (2 q1 - q2 g', 2 q2 + q1 g', 2 q3 + q3 g').
    auto q1 = PolynomialD::variable(s, "q1");
    auto q2 = PolynomialD::variable(s, "q2");
    auto q3 = PolynomialD::variable(s, "q3");
    return {-1.0 * q1 + 0.5 * gd * q2, -1.0 * q2 - 0.5 * gd * q1, (-1.0 - 0.5 * gd) * q3};
}

namespace {

std::vector<std::string> with_atilde(std::vector<std::string> names) {
    for (int i = 1; i <= 4; ++i) names.push_back("at" + std::to_string(i));
    return names;
}

Polynomial at(const VariableSpace::Ptr& s, int i) {
    return Polynomial::variable(s, "at" + std::to_string(i));
}

}  // namespace

MinkowskiReport minkowski_decomposition(int i, int j) {
    if (i < 1 || i > 4 || j < 1 || j > 4 || i == j)
        throw std::invalid_argument("minkowski_decomposition: need distinct indices in 1..4");

    const auto big = VariableSpace::create(
        with_atilde({"q1", "q2", "q3", "p1", "p2", "p3"}), {{0, 3}, {1, 4}, {2, 5}});
    const auto lc = VariableSpace::create(with_atilde({"qplus", "qminus", "pplus", "pminus"}),
                                          {{0, 2}, {1, 3}});
    const auto xy = VariableSpace::create(with_atilde({"qx", "qy", "px", "py"}),
                                          {{0, 2}, {1, 3}});
    const auto oned = VariableSpace::create(with_atilde({"q", "p"}), {{0, 1}});

    auto v = [](const VariableSpace::Ptr& s, const char* n) { return Polynomial::variable(s, n); };

    // h~ = at1 (p1 p2 - q1 q2) + at2 (q1 p2 - q2 p1)
    //    + at3 (p2 p3 - q2 q3) + at4 (q2 p3 - q3 p2).
    const auto q1 = v(big, "q1"), q2 = v(big, "q2"), q3 = v(big, "q3");
    const auto p1 = v(big, "p1"), p2 = v(big, "p2"), p3 = v(big, "p3");
    const Polynomial h_tilde = at(big, 1) * (p1 * p2 - q1 * q2) + at(big, 2) * (q1 * p2 - q2 * p1) +
                               at(big, 3) * (p2 * p3 - q2 * q3) + at(big, 4) * (q2 * p3 - q3 * p2);

    auto h2d = [&](int ai, int aj) {
        const auto qp = v(lc, "qplus"), qm = v(lc, "qminus");
        const auto pp = v(lc, "pplus"), pm = v(lc, "pminus");
        return at(lc, ai) * (pp * pm - qp * qm) + at(lc, aj) * (qp * pm - qm * pp);
    };

    // Pullback of a light-cone polynomial along (q+, q-, p+, p-) -> chosen
    // phase variables of T*R^3, at symbols fixed.
    auto pullback = [&](const Polynomial& f, const char* qplus, const char* qminus,
                        const char* pplus, const char* pminus) {
        std::vector<Polynomial> images = {v(big, qplus), v(big, qminus), v(big, pplus),
                                          v(big, pminus)};
        for (int s = 1; s <= 4; ++s) images.push_back(at(big, s));
        return f.substitute(images);
    };

    MinkowskiReport rep{h_tilde,
                        h2d(1, 2),
                        h2d(3, 4),
                        Polynomial::zero(xy),
                        Polynomial::zero(oned),
                        false,
                        false,
                        false};

    // (i) h~ = pr12*(h2d_12) + pr23*(h2d_34). The second projection maps
    // (q+, q-, p+, p-) to (q2, q3, p2, p3); the printed assignment has the
    // plus/minus roles swapped, which fails the identity on the a~4 term.
    const Polynomial pulled = pullback(rep.h2d_12, "q1", "q2", "p1", "p2") +
                              pullback(rep.h2d_34, "q2", "q3", "p2", "p3");
    rep.pullback_identity = (pulled == h_tilde);

    // (ii) light-cone -> (x, y): q+- = qx +- qy, p+- = (px +- py)/2.
    const auto qx = v(xy, "qx"), qy = v(xy, "qy"), px = v(xy, "px"), py = v(xy, "py");
    {
        std::vector<Polynomial> images = {qx + qy, qx - qy, rat(1, 2) * (px + py),
                                          rat(1, 2) * (px - py)};
        for (int s = 1; s <= 4; ++s) images.push_back(at(xy, s));
        rep.h2d_xy = h2d(i, j).substitute(images);
    }
    const Polynomial xy_display = rat(1, 4) * at(xy, i) * (px * px - py * py) -
                                  at(xy, i) * (qx * qx - qy * qy) -
                                  at(xy, j) * (qx * py - qy * px);
    rep.xy_form_identity = (rep.h2d_xy == xy_display);

    // (iii) 1D split: h2d = pr1* h1d - pr2* h1d - a~j (qx py - qy px).
    const auto q = v(oned, "q"), p = v(oned, "p");
    rep.h1d = rat(1, 4) * at(oned, i) * (p * p - rat(4) * (q * q));
    auto pull1d = [&](const Polynomial& f, const char* qv, const char* pv) {
        std::vector<Polynomial> images = {v(xy, qv), v(xy, pv)};
        for (int s = 1; s <= 4; ++s) images.push_back(at(xy, s));
        return f.substitute(images);
    };
    const Polynomial split = pull1d(rep.h1d, "qx", "px") - pull1d(rep.h1d, "qy", "py") -
                             at(xy, j) * (qx * py - qy * px);
    rep.oned_split_identity = (rep.h2d_xy == split);

    return rep;
}

}  // namespace lhsys
