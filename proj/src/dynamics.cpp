#include "lhsys/dynamics.hpp"

#include "lhsys/realization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace lhsys {

std::string to_string(AlgebraKind kind) { return kind == AlgebraKind::Sp6 ? "sp6" : "su3"; }

AlgebraKind algebra_from_string(const std::string& s) {
    if (s == "sp6") return AlgebraKind::Sp6;
    if (s == "su3") return AlgebraKind::Su3;
    throw std::invalid_argument("unknown algebra '" + s + "' (expected sp6 or su3)");
}

std::vector<std::string> coefficient_names(AlgebraKind kind) {
    std::vector<std::string> names;
    if (kind == AlgebraKind::Sp6)
        for (int i = 1; i <= 21; ++i) names.push_back("b" + std::to_string(i));
    else
        for (int i = 1; i <= 8; ++i) names.push_back("a" + std::to_string(i));
    return names;
}

LHSystemSpec::LHSystemSpec(AlgebraKind algebra,
                           std::map<std::string, CoefficientFunction> coefficients)
    : algebra_(algebra), coefficients_(std::move(coefficients)) {
    const auto names = coefficient_names(algebra_);
    for (const auto& [key, value] : coefficients_)
        if (std::find(names.begin(), names.end(), key) == names.end())
            throw std::invalid_argument("coefficient '" + key + "' is not a basis label of " +
                                        to_string(algebra_));
    by_index_.resize(names.size());
    for (size_t i = 0; i < names.size(); ++i) {
        auto it = coefficients_.find(names[i]);
        by_index_[i] = it == coefficients_.end() ? &zero_ : &it->second;
    }
}

const CoefficientFunction& LHSystemSpec::coefficient(int i) const {
    return *by_index_[static_cast<size_t>(i)];
}

namespace {

// Numeric field matrices of the realizations, cached.
const std::array<Mat6d, 21>& sp6_field_matrices() {
    static const std::array<Mat6d, 21> mats = [] {
        std::array<Mat6d, 21> m;
        const auto fields = realize_sp6();
        for (int k = 0; k < 21; ++k)
            for (int r = 0; r < 6; ++r)
                for (int c = 0; c < 6; ++c)
                    m[static_cast<size_t>(k)](r, c) =
                        to_double(fields[static_cast<size_t>(k)].matrix()(r, c));
        return m;
    }();
    return mats;
}

const std::array<Mat6d, 8>& su3_field_matrices() {
    static const std::array<Mat6d, 8> mats = [] {
        std::array<Mat6d, 8> m;
        const auto fields = realize_su3();
        for (int k = 0; k < 8; ++k)
            for (int r = 0; r < 6; ++r)
                for (int c = 0; c < 6; ++c)
                    m[static_cast<size_t>(k)](r, c) =
                        to_double(fields[static_cast<size_t>(k)].matrix()(r, c));
        return m;
    }();
    return mats;
}

}  // namespace

Mat6d system_matrix(const LHSystemSpec& spec, double t) {
    if (spec.algebra() == AlgebraKind::Sp6) {
        double b[22];
        for (int i = 1; i <= 21; ++i) b[i] = spec.coefficient(i - 1)(t);
        Mat6d m;
        // The displayed 6x6 coefficient matrix of the sp(6,R) system.
        m << b[1], b[4], b[7], b[16], b[17], b[18],
             b[2], b[5], b[8], b[17], b[19], b[20],
             b[3], b[6], b[9], b[18], b[20], b[21],
            -b[10], -b[11], -b[12], -b[1], -b[2], -b[3],
            -b[11], -b[13], -b[14], -b[4], -b[5], -b[6],
            -b[12], -b[14], -b[15], -b[7], -b[8], -b[9];
        return m;
    }
    Mat6d m = Mat6d::Zero();
    const auto& mats = su3_field_matrices();
    for (int i = 0; i < 8; ++i) {
        const double a = spec.coefficient(i)(t);
        if (a != 0.0) m += a * mats[static_cast<size_t>(i)];
    }
    return m;
}

double hamiltonian_value(const LHSystemSpec& spec, const Vec6d& z, double t) {
    static const auto sp6_h = sp6_hamiltonians();
    static const auto su3_h = su3_hamiltonians();
    std::array<double, 6> pt{};
    for (int a = 0; a < 6; ++a) pt[static_cast<size_t>(a)] = z(a);
    double acc = 0.0;
    const int n = spec.basis_size();
    for (int i = 0; i < n; ++i) {
        const double b = spec.coefficient(i)(t);
        if (b == 0.0) continue;
        const auto& h = spec.algebra() == AlgebraKind::Sp6 ? sp6_h[static_cast<size_t>(i)]
                                                           : su3_h[static_cast<size_t>(i)];
        acc += b * h.evaluate(pt);
    }
    return acc;
}

Vec6d Trajectory::copy_state(int sample, int copy) const {
    return states[static_cast<size_t>(sample)].segment<6>(6 * copy);
}

std::vector<double> uniform_grid(double t0, double t1, int n) {
    if (n < 1) throw std::invalid_argument("uniform_grid: n must be >= 1");
    std::vector<double> g(static_cast<size_t>(n));
    if (n == 1) {
        g[0] = t0;
        return g;
    }
    for (int i = 0; i < n; ++i)
        g[static_cast<size_t>(i)] = t0 + (t1 - t0) * static_cast<double>(i) / (n - 1);
    g.back() = t1;
    return g;
}

namespace detail {

Trajectory dopri5(const std::function<void(double, const Eigen::VectorXd&, Eigen::VectorXd&)>& rhs,
                  Eigen::VectorXd y0, double t0, double t1, std::span<const double> grid,
                  const IntegrateOptions& opts) {
    using Eigen::VectorXd;

    for (size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1]))
            throw std::invalid_argument("integrate: output grid must be strictly increasing");
    if (!grid.empty() && (grid.front() < t0 || grid.back() > t1 + 1e-12 * std::abs(t1)))
        throw std::invalid_argument("integrate: output grid leaves the window");

    Trajectory traj;
    traj.stats.rtol = opts.rtol;
    traj.stats.atol = opts.atol;

    // Degenerate window: the initial point only.
    if (t1 == t0) {
        traj.times.push_back(t0);
        traj.states.push_back(y0);
        return traj;
    }
    if (t1 < t0) throw std::invalid_argument("integrate: t1 must be >= t0");

    // Dormand-Prince 5(4) tableau.
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // b - bhat: weights of the embedded error estimate.
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
    // Dense-output auxiliary weights (Shampine's 4th-order interpolant).
    static const double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                        d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                        d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

    const auto n = y0.size();
    VectorXd k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n), yerr(n);

    size_t next_grid = 0;
    auto emit_upto = [&](double tl, double tr, const VectorXd& yl, const VectorXd& yr,
                         const VectorXd& kl, const VectorXd& kr) {
        // 4th-order continuous extension on [tl, tr].
        const double h = tr - tl;
        VectorXd rc2 = yr - yl;
        VectorXd rc3 = h * kl - rc2;
        VectorXd rc4 = rc2 - h * kr - rc3;
        VectorXd rc5 = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
        while (next_grid < grid.size() && grid[next_grid] <= tr + 1e-14 * std::max(1.0, std::abs(tr))) {
            const double tg = grid[next_grid];
            const double theta = std::clamp((tg - tl) / h, 0.0, 1.0);
            VectorXd y = yl + theta * (rc2 + (1.0 - theta) * (rc3 + theta * (rc4 + (1.0 - theta) * rc5)));
            traj.times.push_back(tg);
            traj.states.push_back(std::move(y));
            ++next_grid;
        }
    };

    double t = t0;
    VectorXd y = std::move(y0);
    rhs(t, y, k1);

    // Exact grid hit at t0 (dense output degenerates there).
    while (next_grid < grid.size() && grid[next_grid] <= t0) {
        traj.times.push_back(grid[next_grid]);
        traj.states.push_back(y);
        ++next_grid;
    }

    double h;
    if (opts.fixed_step) {
        h = *opts.fixed_step;
        if (!(h > 0)) throw std::invalid_argument("integrate: fixed step must be positive");
    } else {
        // Modest initial guess; the controller adapts quickly.
        h = (t1 - t0) / 100.0;
        const double kn = k1.norm();
        if (kn > 1e-8) h = std::min(h, 0.01 * std::max(1.0, y.norm()) / kn);
    }

    double facold = 1e-4;
    const double beta = 0.04, expo1 = 0.2 - beta * 0.75, safe = 0.9;
    long steps = 0;

    bool done = false;
    while (!done && t < t1) {
        if (++steps > opts.max_steps)
            throw std::runtime_error("integrate: step budget exhausted at t = " + std::to_string(t));
        bool last = false;
        if (h >= t1 - t) {
            h = t1 - t;
            last = true;
        } else if (!(h > std::abs(t) * 1e-14 + 1e-300)) {
            throw std::runtime_error("integrate: step size underflow at t = " + std::to_string(t));
        }

        ytmp = y + h * (a21 * k1);
        rhs(t + c2 * h, ytmp, k2);
        ytmp = y + h * (a31 * k1 + a32 * k2);
        rhs(t + c3 * h, ytmp, k3);
        ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
        rhs(t + c4 * h, ytmp, k4);
        ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        rhs(t + c5 * h, ytmp, k5);
        ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        rhs(t + h, ytmp, k6);
        ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        rhs(t + h, ynew, k7);  // FSAL

        if (opts.fixed_step) {
            emit_upto(t, t + h, y, ynew, k1, k7);
            t += h;
            y.swap(ynew);
            k1.swap(k7);
            ++traj.stats.accepted;
            done = last;
            h = *opts.fixed_step;
            continue;
        }

        yerr = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        double err = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double sc =
                opts.atol + opts.rtol * std::max(std::abs(y(i)), std::abs(ynew(i)));
            const double q = yerr(i) / sc;
            err += q * q;
        }
        err = std::sqrt(err / static_cast<double>(n));

        if (err <= 1.0) {
            emit_upto(t, t + h, y, ynew, k1, k7);
            t += h;
            y.swap(ynew);
            k1.swap(k7);
            ++traj.stats.accepted;
            done = last;
            const double fac =
                std::clamp(safe * std::pow(err > 0 ? err : 1e-16, -expo1) * std::pow(facold, beta),
                           0.2, 10.0);
            facold = std::max(err, 1e-4);
            h *= fac;
        } else {
            ++traj.stats.rejected;
            h *= std::clamp(safe * std::pow(err, -0.2), 0.1, 1.0);
        }
    }

    // Grid points at exactly t1 that the loop's tolerance window missed.
    while (next_grid < grid.size()) {
        traj.times.push_back(grid[next_grid]);
        traj.states.push_back(y);
        ++next_grid;
    }
    return traj;
}

}  // namespace detail

Trajectory integrate(const LHSystemSpec& spec, const Vec6d& z0, double t0, double t1,
                     std::span<const double> grid, const IntegrateOptions& opts) {
    auto rhs = [&spec](double t, const Eigen::VectorXd& y, Eigen::VectorXd& dy) {
        const Mat6d m = system_matrix(spec, t);
        dy = m * y;
    };
    Trajectory traj = detail::dopri5(rhs, z0, t0, t1, grid, opts);
    traj.copies = 1;
    return traj;
}

Trajectory integrate_prolonged(const LHSystemSpec& spec, std::span<const Vec6d> z0s, double t0,
                               double t1, std::span<const double> grid,
                               const IntegrateOptions& opts) {
    const int k = static_cast<int>(z0s.size());
    if (k < 1) throw std::invalid_argument("integrate_prolonged: at least one copy required");
    Eigen::VectorXd y0(6 * k);
    for (int l = 0; l < k; ++l) y0.segment<6>(6 * l) = z0s[static_cast<size_t>(l)];
    auto rhs = [&spec, k](double t, const Eigen::VectorXd& y, Eigen::VectorXd& dy) {
        const Mat6d m = system_matrix(spec, t);
        dy.resize(y.size());
        for (int l = 0; l < k; ++l) dy.segment<6>(6 * l) = m * y.segment<6>(6 * l);
    };
    Trajectory traj = detail::dopri5(rhs, std::move(y0), t0, t1, grid, opts);
    traj.copies = k;
    return traj;
}

}  // namespace lhsys
