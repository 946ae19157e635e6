#pragma once

#include "lhsys/rational.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace lhsys {

/// The six constants feeding the superposition rule. The signed pairings are
/// c_l = Omega(s_l, x): the particular solution is the first argument, which
/// is the orientation under which the worked examples hold. The squared
/// values k_l^2 = -F2_pair(x, s_l) = c_l^2 are the paper-literal constants.
struct SuperpositionConstants {
    std::array<double, 6> signed_c{};
    std::array<double, 6> squared{};
};

SuperpositionConstants constants_from(const Vec6d& x0, const std::array<Vec6d, 6>& sols0);

/// Reconstruction rejects systems with a worse condition estimate.
inline constexpr double kConditionLimit = 1e8;

struct IllConditioned : std::runtime_error {
    double condition;
    explicit IllConditioned(double cond)
        : std::runtime_error("superposition system condition estimate " + std::to_string(cond) +
                             " exceeds limit"),
          condition(cond) {}
};

/// Signed mode: the unique solution of the 6x6 linear system
/// Omega(s_l(t), x) = c_l. Throws IllConditioned past the threshold.
Vec6d reconstruct_signed(const std::array<Vec6d, 6>& sols_t, const SuperpositionConstants& k);

/// Squared ("paper-literal") mode: all sign-pattern solutions of
/// Omega(s_l(t), x)^2 = k_l^2, deduplicated. Contains the signed answer.
std::vector<Vec6d> reconstruct_squared_candidates(const std::array<Vec6d, 6>& sols_t,
                                                  const SuperpositionConstants& k);

/// Squared mode with continuity selection: the candidate closest to
/// `previous`.
Vec6d reconstruct_squared(const std::array<Vec6d, 6>& sols_t, const SuperpositionConstants& k,
                          const Vec6d& previous);

/// Condition estimate (SVD) of the signed-mode system matrix at time t.
double reconstruction_condition(const std::array<Vec6d, 6>& sols_t);

/// Determinant of the signed-mode system matrix; time-invariant along exact
/// flows of one LH system.
double reconstruction_determinant(const std::array<Vec6d, 6>& sols_t);

}  // namespace lhsys
