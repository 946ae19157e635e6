#pragma once

#include "lhsys/dynamics.hpp"
#include "lhsys/polynomial.hpp"

#include <array>
#include <string>
#include <vector>

namespace lhsys {

/// Time window a preset is validated on (positivity and inequality
/// constraints are checked by dense sampling, 1024 points).
struct Window {
    double t0 = 0.0;
    double t1 = 10.0;
};

/// Data of the time-dependent electromagnetic system: masses, charges, and
/// the magnetic coefficient gamma. The derived potentials are fixed:
/// A = (-q2 gamma/2, q1 gamma/2, q3 gamma/2), phi = (q1^2+q2^2+q3^2)/2.
struct EMFieldData {
    std::array<CoefficientFunction, 3> m;
    std::array<CoefficientFunction, 3> e;
    CoefficientFunction gamma;
};

/// Oscillator data shared by the coupled-harmonic and Caldirola-Kanai
/// presets; couplings enter the rotation terms b2, b3, b6.
struct OscillatorData {
    std::array<CoefficientFunction, 3> m;
    std::array<CoefficientFunction, 3> k;
    std::array<CoefficientFunction, 3> gamma;
    CoefficientFunction b2, b3, b6;
};

/// Electromagnetic preset: the nine-coefficient table of the paper.
/// Positivity of m_i is an error (std::domain_error); a vanishing
/// gamma-double-dot is reported through `warnings` when provided.
LHSystemSpec em_preset(const EMFieldData& data, const Window& window,
                       std::vector<std::string>* warnings = nullptr);

/// Coupled harmonic oscillators: requires k_i > gamma_i^2 / (4 m_i) on the
/// window; frequencies Omega_i^2 = (k_i - gamma_i^2/(4 m_i)) / m_i.
LHSystemSpec cho_preset(const OscillatorData& data, const Window& window);

/// Coupled Caldirola-Kanai: exponential factors exp(+-2 int_0^t gamma_i/m_i)
/// on the kinetic and potential coefficients; Omega_i^2 = k_i / m_i.
LHSystemSpec cck_preset(const OscillatorData& data, const Window& window);

/// su(3) preset over the minimal generator set h~1..h~4:
/// a1 = a~1 + a~2, a2 = a~3 + a~4, a4 = a~1 - a~2, a5 = a~3 - a~4,
/// a3 = a6 = a7 = a8 = 0.
LHSystemSpec su3_preset(const std::array<CoefficientFunction, 4>& atilde);

/// CHO frequency Omega_i(t); `cck` selects the Caldirola-Kanai definition
/// sqrt(k/m) instead of the damped sqrt(k/m - gamma^2/(4 m^2)).
double oscillator_frequency(const OscillatorData& data, int axis, double t, bool cck);

/// Derived electromagnetic field expressions, symbolic in q with the
/// time-dependent coefficients evaluated at t. Components live on the
/// configuration-space symbols q1, q2, q3.
struct EMField {
    explicit EMField(EMFieldData data);

    std::array<PolynomialD, 3> vector_potential(double t) const;  // A
    PolynomialD scalar_potential() const;                         // phi (t-independent)
    std::array<double, 3> magnetic_field(double t) const;         // B = curl A
    std::array<PolynomialD, 3> electric_field(double t) const;    // E = -grad phi - dA/dt

private:
    double gamma_dot(double t) const;

    EMFieldData data_;
    CoefficientFunction gamma_dot_;
    bool has_analytic_dot_ = false;
};

/// Exact symbolic verification of the su(3) Minkowski decomposition chain.
/// All ingredients carry the four abstract symbols at1..at4, so the checks
/// are polynomial identities over the rationals.
struct MinkowskiReport {
    Polynomial h_tilde;    // on (q, p, at*) of T*R^3
    Polynomial h2d_12;     // on light-cone (q+, q-, p+, p-, at*)
    Polynomial h2d_34;
    Polynomial h2d_xy;     // h2d_12 in (qx, qy, px, py, at*)
    Polynomial h1d;        // (at_i/4)(p^2 - 4 q^2) on (q, p, at*)
    bool pullback_identity;    // h~ = pr12* h2d_12 + pr23* h2d_34
    bool xy_form_identity;     // h2d in (x, y) coordinates matches the display
    bool oned_split_identity;  // h2d = pr1* h1d - pr2* h1d - a~j (qx py - qy px)
    bool all() const { return pullback_identity && xy_form_identity && oned_split_identity; }
};

/// Runs the decomposition chain for the pair (a~i, a~j); the global pullback
/// identity always uses the pairs (1,2) and (3,4) as in the paper.
MinkowskiReport minkowski_decomposition(int i, int j);

}  // namespace lhsys
