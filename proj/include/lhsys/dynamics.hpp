#pragma once

#include "lhsys/coefficients.hpp"
#include "lhsys/rational.hpp"

#include <Eigen/Dense>

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lhsys {

enum class AlgebraKind { Sp6, Su3 };

std::string to_string(AlgebraKind kind);
AlgebraKind algebra_from_string(const std::string& s);

/// Legal coefficient names for an algebra: b1..b21 for sp(6,R), a1..a8 for
/// su(3).
std::vector<std::string> coefficient_names(AlgebraKind kind);

/// An LH system: the algebra choice plus time-dependent coefficients
/// assigned to basis Hamiltonians. Unassigned coefficients are zero.
class LHSystemSpec {
public:
    LHSystemSpec(AlgebraKind algebra, std::map<std::string, CoefficientFunction> coefficients);

    AlgebraKind algebra() const { return algebra_; }
    const std::map<std::string, CoefficientFunction>& coefficients() const {
        return coefficients_;
    }

    /// Coefficient of basis element i (0-based), zero when unassigned.
    const CoefficientFunction& coefficient(int i) const;
    int basis_size() const { return algebra_ == AlgebraKind::Sp6 ? 21 : 8; }

private:
    AlgebraKind algebra_;
    std::map<std::string, CoefficientFunction> coefficients_;
    std::vector<const CoefficientFunction*> by_index_;
    CoefficientFunction zero_;
};

/// The 6x6 system matrix M(t) of dz/dt = M(t) z; always satisfies
/// M^T J + J M = 0 to machine precision.
Mat6d system_matrix(const LHSystemSpec& spec, double t);

/// h(t, z) = sum_i b_i(t) h_i(z).
double hamiltonian_value(const LHSystemSpec& spec, const Vec6d& z, double t);

struct IntegrateOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    /// Non-adaptive test mode: march with this step, no error control.
    std::optional<double> fixed_step;
    long max_steps = 50'000'000;
};

struct Trajectory {
    std::vector<double> times;             // strictly increasing sample grid
    std::vector<Eigen::VectorXd> states;   // one per time, dimension 6*copies
    int copies = 1;

    struct Stats {
        long accepted = 0;
        long rejected = 0;
        double rtol = 0;
        double atol = 0;
    } stats;

    Vec6d copy_state(int sample, int copy) const;
};

/// Uniform output grid with n points (n >= 1), t0 first, t1 last.
std::vector<double> uniform_grid(double t0, double t1, int n);

/// Adaptive embedded Runge-Kutta 5(4) solution of dz/dt = M(t) z sampled on
/// `grid` (all points inside [t0, t1], increasing). A degenerate window
/// t1 == t0 returns the initial point only. Step-size underflow throws
/// std::runtime_error naming the failing t.
Trajectory integrate(const LHSystemSpec& spec, const Vec6d& z0, double t0, double t1,
                     std::span<const double> grid, const IntegrateOptions& opts = {});

/// Diagonal prolongation: the block-diagonal system applied copy-wise.
Trajectory integrate_prolonged(const LHSystemSpec& spec, std::span<const Vec6d> z0s, double t0,
                               double t1, std::span<const double> grid,
                               const IntegrateOptions& opts = {});

namespace detail {
/// Generic DOPRI5 driver used by the two integrate fronts; exposed for the
/// convergence-order tests.
Trajectory dopri5(const std::function<void(double, const Eigen::VectorXd&, Eigen::VectorXd&)>& rhs,
                  Eigen::VectorXd y0, double t0, double t1, std::span<const double> grid,
                  const IntegrateOptions& opts);
}  // namespace detail

}  // namespace lhsys
