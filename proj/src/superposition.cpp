#include "lhsys/superposition.hpp"

#include "lhsys/invariants.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace lhsys {

namespace {

// Row l encodes x -> Omega(s_l, x) as a linear functional: with s = (q, p),
// Omega(s, x) = sum_i q_i(s) p_i(x) - p_i(s) q_i(x) = (-p(s), q(s)) . x.
Mat6d omega_rows(const std::array<Vec6d, 6>& sols) {
    Mat6d m;
    for (int l = 0; l < 6; ++l) {
        for (int i = 0; i < 3; ++i) {
            m(l, i) = -sols[static_cast<size_t>(l)](3 + i);
            m(l, 3 + i) = sols[static_cast<size_t>(l)](i);
        }
    }
    return m;
}

}  // namespace

SuperpositionConstants constants_from(const Vec6d& x0, const std::array<Vec6d, 6>& sols0) {
    SuperpositionConstants k;
    for (int l = 0; l < 6; ++l) {
        const double c = omega(sols0[static_cast<size_t>(l)], x0);
        k.signed_c[static_cast<size_t>(l)] = c;
        k.squared[static_cast<size_t>(l)] = c * c;
    }
    return k;
}

double reconstruction_condition(const std::array<Vec6d, 6>& sols_t) {
    Eigen::JacobiSVD<Mat6d> svd(omega_rows(sols_t));
    const auto& s = svd.singularValues();
    if (s(5) == 0.0) return std::numeric_limits<double>::infinity();
    return s(0) / s(5);
}

double reconstruction_determinant(const std::array<Vec6d, 6>& sols_t) {
    return omega_rows(sols_t).determinant();
}

Vec6d reconstruct_signed(const std::array<Vec6d, 6>& sols_t, const SuperpositionConstants& k) {
    const Mat6d a = omega_rows(sols_t);
    Eigen::JacobiSVD<Mat6d> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double cond = s(5) == 0.0 ? std::numeric_limits<double>::infinity() : s(0) / s(5);
    if (!(cond < kConditionLimit)) throw IllConditioned(cond);
    Vec6d rhs;
    for (int l = 0; l < 6; ++l) rhs(l) = k.signed_c[static_cast<size_t>(l)];
    return svd.solve(rhs);
}

std::vector<Vec6d> reconstruct_squared_candidates(const std::array<Vec6d, 6>& sols_t,
                                                  const SuperpositionConstants& k) {
    const Mat6d a = omega_rows(sols_t);
    Eigen::JacobiSVD<Mat6d> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double cond = s(5) == 0.0 ? std::numeric_limits<double>::infinity() : s(0) / s(5);
    if (!(cond < kConditionLimit)) throw IllConditioned(cond);

    std::array<double, 6> mag{};
    for (int l = 0; l < 6; ++l) mag[static_cast<size_t>(l)] = std::sqrt(k.squared[static_cast<size_t>(l)]);

    std::vector<Vec6d> out;
    out.reserve(64);
    for (int pattern = 0; pattern < 64; ++pattern) {
        Vec6d rhs;
        for (int l = 0; l < 6; ++l)
            rhs(l) = ((pattern >> l) & 1) ? -mag[static_cast<size_t>(l)] : mag[static_cast<size_t>(l)];
        const Vec6d x = svd.solve(rhs);
        bool duplicate = false;
        for (const auto& seen : out)
            if ((seen - x).norm() <= 1e-12 * std::max(1.0, x.norm())) {
                duplicate = true;
                break;
            }
        if (!duplicate) out.push_back(x);
    }
    return out;
}

Vec6d reconstruct_squared(const std::array<Vec6d, 6>& sols_t, const SuperpositionConstants& k,
                          const Vec6d& previous) {
    const auto candidates = reconstruct_squared_candidates(sols_t, k);
    const Vec6d* best = &candidates.front();
    double best_dist = (*best - previous).norm();
    for (const auto& c : candidates) {
        const double d = (c - previous).norm();
        if (d < best_dist) {
            best_dist = d;
            best = &c;
        }
    }
    return *best;
}

}  // namespace lhsys
