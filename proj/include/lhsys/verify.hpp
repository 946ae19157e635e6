#pragma once

#include "lhsys/dynamics.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lhsys {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

bool all_pass(std::span<const CheckResult> checks);

/// Exact symbolic suites backing the CLI `verify` command and the acceptance
/// criteria. Each check compares generated objects against the printed
/// fixtures or asserts a structural identity; everything is exact rational
/// arithmetic unless stated otherwise in the check name.
std::vector<CheckResult> verify_sp6();
std::vector<CheckResult> verify_su3(bool inject_fault = false);
std::vector<CheckResult> verify_realization(std::uint64_t seed);
std::vector<CheckResult> verify_casimir();
std::vector<CheckResult> verify_presets();

/// scope: all | sp6 | su3 | realization | casimir.
/// `inject_fault` corrupts one su(3) fixture entry (test hook; the suite
/// must then fail naming the identity).
std::vector<CheckResult> verify_scope(const std::string& scope, std::uint64_t seed,
                                      bool inject_fault = false);

/// Seeded random LH system with smooth bounded coefficients (|b_i| <= 2):
/// each assigned coefficient is c0 + c1 sin(w t + phi). Used by the
/// conservation and superposition suites.
LHSystemSpec make_random_spec(AlgebraKind kind, std::uint64_t seed);

/// Seeded random phase point with coordinates in [-1, 1].
Vec6d random_phase_point(std::uint64_t seed);

}  // namespace lhsys
