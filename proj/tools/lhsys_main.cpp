// Command-line front end: exact verification suites, Casimir export,
// simulation, invariant monitoring, and superposition reconstruction.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 numerical
// failure.

#include "lhsys/invariants.hpp"
#include "lhsys/scenario.hpp"
#include "lhsys/superposition.hpp"
#include "lhsys/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace lhsys;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNumericalError = 3;

int cmd_verify(const std::string& scope, std::uint64_t seed, bool inject_fault) {
    const auto checks = verify_scope(scope, seed, inject_fault);
    for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
    }
    const bool ok = all_pass(checks);
    std::cout << (ok ? "verify: all checks passed\n" : "verify: FAILURES present\n");
    return ok ? kExitOk : kExitVerifyFail;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    return out;
}

int cmd_simulate(const std::string& scenario_path, const std::string& out_path) {
    const Scenario sc = load_scenario(scenario_path);
    const auto resolved = sc.resolve();
    for (const auto& w : resolved.warnings) std::cerr << "warning: " << w << "\n";

    const auto grid = uniform_grid(sc.t0, sc.t1, sc.grid);
    IntegrateOptions opts;
    opts.rtol = sc.rtol;
    opts.atol = sc.atol;

    Trajectory traj;
    if (sc.initial.size() == 1)
        traj = integrate(resolved.spec, sc.initial.front(), sc.t0, sc.t1, grid, opts);
    else
        traj = integrate_prolonged(resolved.spec, sc.initial, sc.t0, sc.t1, grid, opts);

    auto out = open_out(out_path);
    if (out_path.size() >= 5 && out_path.substr(out_path.size() - 5) == ".json")
        write_trajectory_json(out, traj, resolved.spec.coefficients());
    else
        write_trajectory_csv(out, traj, resolved.spec.coefficients());
    std::cout << "simulate: " << traj.times.size() << " samples x " << traj.copies
              << " copies -> " << out_path << "\n";
    return kExitOk;
}

// Merges trajectories into one prolonged set; grids must agree exactly.
Trajectory merge_copies(const std::vector<Trajectory>& parts) {
    Trajectory merged;
    merged.copies = 0;
    for (const auto& p : parts) merged.copies += p.copies;
    merged.times = parts.front().times;
    for (const auto& p : parts)
        if (p.times != merged.times)
            throw std::invalid_argument("invariants: input trajectories have mismatched time grids");
    const size_t samples = merged.times.size();
    for (size_t s = 0; s < samples; ++s) {
        Eigen::VectorXd z(6 * merged.copies);
        int at = 0;
        for (const auto& p : parts) {
            z.segment(6 * at, 6 * p.copies) = p.states[s];
            at += p.copies;
        }
        merged.states.push_back(std::move(z));
    }
    return merged;
}

int cmd_invariants(const std::vector<std::string>& inputs, const std::string& out_path) {
    std::vector<Trajectory> parts;
    for (const auto& path : inputs) parts.push_back(load_trajectory(path));
    const Trajectory traj = merge_copies(parts);
    const int k = traj.copies;

    auto out = open_out(out_path);

    // Per-pair Omega and the full F^(k); max relative drift per column.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);

    std::vector<double> omega0(pairs.size(), 0.0);
    double f0 = 0.0, omega_drift = 0.0, f_drift = 0.0;

    std::ostringstream body;
    body << "t";
    if (k == 1) body << ",F1";
    for (const auto& [i, j] : pairs) body << ",omega_" << (i + 1) << "_" << (j + 1);
    if (k > 1) body << ",F" << k;
    body << "\n";

    for (size_t s = 0; s < traj.times.size(); ++s) {
        body << format_double(traj.times[s]);
        if (k == 1) {
            std::array<Vec6d, 1> one = {traj.copy_state(static_cast<int>(s), 0)};
            body << "," << format_double(f_value(one));
        }
        std::vector<Vec6d> copies;
        for (int c = 0; c < k; ++c) copies.push_back(traj.copy_state(static_cast<int>(s), c));
        for (size_t p = 0; p < pairs.size(); ++p) {
            const double w = omega(copies[static_cast<size_t>(pairs[p].first)],
                                   copies[static_cast<size_t>(pairs[p].second)]);
            if (s == 0) omega0[p] = w;
            omega_drift = std::max(omega_drift,
                                   std::abs(w - omega0[p]) / std::max(1.0, std::abs(omega0[p])));
            body << "," << format_double(w);
        }
        if (k > 1) {
            const double f = f_value(copies);
            if (s == 0) f0 = f;
            f_drift = std::max(f_drift, std::abs(f - f0) / std::max(1.0, std::abs(f0)));
            body << "," << format_double(f);
        }
        body << "\n";
    }

    out << "# invariant drift report, copies=" << k << "\n";
    out << "# max_rel_drift omega = " << format_double(omega_drift) << "\n";
    if (k > 1) out << "# max_rel_drift F" << k << " = " << format_double(f_drift) << "\n";
    out << body.str();
    std::cout << "invariants: max relative Omega drift " << format_double(omega_drift) << "\n";
    return kExitOk;
}

int cmd_superpose(const std::string& in_path, const std::string& mode,
                  const std::string& out_path) {
    const Trajectory traj = load_trajectory(in_path);
    if (traj.copies < 7)
        throw std::invalid_argument(
            "superpose: need seven copies (six particular solutions + the reference)");
    const int ref = traj.copies - 1;

    auto sols_at = [&](int s) {
        std::array<Vec6d, 6> sols;
        for (int l = 0; l < 6; ++l) sols[static_cast<size_t>(l)] = traj.copy_state(s, l);
        return sols;
    };
    const auto constants = constants_from(traj.copy_state(0, ref), sols_at(0));

    auto out = open_out(out_path);
    std::ostringstream body;
    body << "t,q1,q2,q3,p1,p2,p3,abs_error,rel_error";
    if (mode == "squared") body << ",candidates";
    body << "\n";

    double max_rel = 0.0, max_cond = 0.0;
    Vec6d previous = traj.copy_state(0, ref);
    for (size_t s = 0; s < traj.times.size(); ++s) {
        const auto sols = sols_at(static_cast<int>(s));
        max_cond = std::max(max_cond, reconstruction_condition(sols));
        Vec6d x;
        size_t candidates = 0;
        if (mode == "signed") {
            x = reconstruct_signed(sols, constants);
        } else {
            const auto set = reconstruct_squared_candidates(sols, constants);
            candidates = set.size();
            x = reconstruct_squared(sols, constants, previous);
        }
        previous = x;
        const Vec6d truth = traj.copy_state(static_cast<int>(s), ref);
        const double abs_err = (x - truth).norm();
        const double rel_err = abs_err / std::max(1.0, truth.norm());
        max_rel = std::max(max_rel, rel_err);
        body << format_double(traj.times[s]);
        for (int i = 0; i < 6; ++i) body << "," << format_double(x(i));
        body << "," << format_double(abs_err) << "," << format_double(rel_err);
        if (mode == "squared") body << "," << candidates;
        body << "\n";
    }

    out << "# superposition reconstruction, mode=" << mode << "\n";
    out << "# max_rel_error = " << format_double(max_rel) << "\n";
    out << "# max_condition = " << format_double(max_cond) << "\n";
    out << body.str();
    std::cout << "superpose: max relative error " << format_double(max_rel) << " (condition <= "
              << format_double(max_cond) << ")\n";
    return kExitOk;
}

int cmd_casimir(int order, const std::string& out_path) {
    const auto cas = casimir_charpoly();
    const Polynomial* p = nullptr;
    if (order == 2)
        p = &cas.c2;
    else if (order == 4)
        p = &cas.c4;
    else if (order == 6)
        p = &cas.c6;
    else
        throw std::invalid_argument("casimir: order must be 2, 4, or 6");
    const std::string text = "C" + std::to_string(order) + " = " + p->to_string() + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        auto out = open_out(out_path);
        out << text;
        std::cout << "casimir: C" << order << " -> " << out_path << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lie-Hamilton systems on T*R^3: sp(6,R) and su(3) tools"};
    app.require_subcommand(1);

    std::string scope = "all";
    std::uint64_t seed = 12345;
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify", "run the exact verification suites");
    verify->add_option("--scope", scope, "all | sp6 | su3 | realization | casimir");
    verify->add_option("--seed", seed, "seed for the randomized sub-checks");
    verify->add_flag("--inject-fault", inject_fault,
                     "corrupt one fixture entry (test hook; the run must FAIL)");

    std::string scenario_path, out_path;
    auto* simulate = app.add_subcommand("simulate", "integrate a scenario file");
    simulate->add_option("--scenario", scenario_path, "scenario JSON")->required();
    simulate->add_option("--out", out_path, "output trajectory (.csv or .json)")->required();

    std::vector<std::string> invariant_inputs;
    std::string invariants_out;
    auto* invariants = app.add_subcommand("invariants", "evaluate Omega and F^(k) along trajectories");
    invariants->add_option("--in", invariant_inputs, "input trajectory files")->required();
    invariants->add_option("--out", invariants_out, "drift report CSV")->required();

    std::string superpose_in, superpose_mode = "signed", superpose_out;
    auto* superpose = app.add_subcommand("superpose", "rebuild a solution from six particular ones");
    superpose->add_option("--in", superpose_in, "seven-copy trajectory file")->required();
    superpose->add_option("--mode", superpose_mode, "signed | squared")
        ->check(CLI::IsMember({"signed", "squared"}));
    superpose->add_option("--out", superpose_out, "reconstruction CSV")->required();

    int casimir_order = 2;
    std::string casimir_out;
    auto* casimir = app.add_subcommand("casimir", "print Casimir invariants in canonical term order");
    casimir->add_option("--order", casimir_order, "2 | 4 | 6")->check(CLI::IsMember({2, 4, 6}));
    casimir->add_option("--out", casimir_out, "output file (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(scope, seed, inject_fault);
        if (simulate->parsed()) return cmd_simulate(scenario_path, out_path);
        if (invariants->parsed()) return cmd_invariants(invariant_inputs, invariants_out);
        if (superpose->parsed()) return cmd_superpose(superpose_in, superpose_mode, superpose_out);
        if (casimir->parsed()) return cmd_casimir(casimir_order, casimir_out);
    } catch (const lhsys::IllConditioned& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumericalError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::runtime_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumericalError;
    }
    return kExitOk;
}
