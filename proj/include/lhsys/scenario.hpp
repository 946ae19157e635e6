#pragma once

#include "lhsys/dynamics.hpp"

#include <json.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lhsys {

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

/// A reproducible simulation input: either a raw algebra + coefficient table
/// or a named preset with its parameter block, plus initial conditions,
/// window, tolerances, output grid size, and seed.
struct Scenario {
    std::optional<AlgebraKind> algebra;
    std::optional<std::string> preset;  // "em" | "cho" | "cck" | "su3"
    nlohmann::json preset_params = nlohmann::json::object();
    std::map<std::string, CoefficientFunction> coefficients;
    std::vector<Vec6d> initial;
    double t0 = 0.0;
    double t1 = 10.0;
    double rtol = 1e-10;
    double atol = 1e-12;
    int grid = 101;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument with a field diagnostic on schema errors.
    static Scenario from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    struct Resolved {
        LHSystemSpec spec;
        std::vector<std::string> warnings;
    };
    /// Applies the preset (or the raw coefficient table) and validates it.
    Resolved resolve() const;
};

Scenario load_scenario(const std::string& path);

/// CSV trajectory: comment header echoing the resolved coefficient table,
/// then `t,q1,q2,q3,p1,p2,p3[,copy]` rows (copy column only for copies > 1).
void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          const std::map<std::string, CoefficientFunction>& resolved);

void write_trajectory_json(std::ostream& os, const Trajectory& traj,
                           const std::map<std::string, CoefficientFunction>& resolved);

/// Parses the CSV format back; throws std::invalid_argument with a line
/// diagnostic on malformed input.
Trajectory read_trajectory_csv(std::istream& is);

Trajectory read_trajectory_json(std::istream& is);

/// Dispatch by file extension (.json vs anything else = CSV).
Trajectory load_trajectory(const std::string& path);

}  // namespace lhsys
