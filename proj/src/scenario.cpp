#include "lhsys/scenario.hpp"

#include "lhsys/presets.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lhsys {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

namespace {

std::array<CoefficientFunction, 3> coeff_triple(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j.at(field).is_array() || j.at(field).size() != 3)
        throw std::invalid_argument(std::string("preset parameter '") + field +
                                    "' must be an array of three coefficient functions");
    std::array<CoefficientFunction, 3> out;
    for (int i = 0; i < 3; ++i)
        out[static_cast<size_t>(i)] = CoefficientFunction::from_json(j.at(field).at(i));
    return out;
}

CoefficientFunction coeff_or_zero(const nlohmann::json& j, const char* field) {
    if (!j.contains(field)) return CoefficientFunction::constant(0.0);
    return CoefficientFunction::from_json(j.at(field));
}

}  // namespace

Scenario Scenario::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("scenario: top level must be an object");
    Scenario s;
    if (j.contains("algebra")) s.algebra = algebra_from_string(j.at("algebra").get<std::string>());
    if (j.contains("preset")) {
        s.preset = j.at("preset").get<std::string>();
        if (*s.preset != "em" && *s.preset != "cho" && *s.preset != "cck" && *s.preset != "su3")
            throw std::invalid_argument("scenario: unknown preset '" + *s.preset + "'");
        s.preset_params = j.value("params", nlohmann::json::object());
    }
    if (!s.algebra && !s.preset)
        throw std::invalid_argument("scenario: either 'algebra' or 'preset' is required");
    if (s.algebra && s.preset)
        throw std::invalid_argument("scenario: 'algebra' and 'preset' are mutually exclusive");
    if (j.contains("coefficients")) {
        if (s.preset)
            throw std::invalid_argument("scenario: 'coefficients' cannot accompany a preset");
        for (const auto& [key, value] : j.at("coefficients").items())
            s.coefficients.emplace(key, CoefficientFunction::from_json(value));
    }

    if (!j.contains("initial"))
        throw std::invalid_argument("scenario: 'initial' phase points are required");
    const auto& init = j.at("initial");
    // One point or a list of points.
    auto parse_point = [](const nlohmann::json& p) {
        if (!p.is_array() || p.size() != 6)
            throw std::invalid_argument("scenario: each initial point needs 6 components");
        Vec6d z;
        for (int i = 0; i < 6; ++i) z(i) = p.at(static_cast<size_t>(i)).get<double>();
        return z;
    };
    if (init.is_array() && !init.empty() && init.at(0).is_array())
        for (const auto& p : init) s.initial.push_back(parse_point(p));
    else
        s.initial.push_back(parse_point(init));

    if (j.contains("window")) {
        const auto& w = j.at("window");
        if (!w.is_array() || w.size() != 2)
            throw std::invalid_argument("scenario: 'window' must be [t0, t1]");
        s.t0 = w.at(0).get<double>();
        s.t1 = w.at(1).get<double>();
        if (!(s.t1 >= s.t0)) throw std::invalid_argument("scenario: window must have t1 >= t0");
    }
    s.rtol = j.value("rtol", 1e-10);
    s.atol = j.value("atol", 1e-12);
    s.grid = j.value("grid", 101);
    if (s.grid < 1) throw std::invalid_argument("scenario: 'grid' must be >= 1");
    s.seed = j.value("seed", static_cast<std::uint64_t>(0));
    return s;
}

nlohmann::json Scenario::to_json() const {
    nlohmann::json j;
    if (algebra) j["algebra"] = to_string(*algebra);
    if (preset) {
        j["preset"] = *preset;
        j["params"] = preset_params;
    }
    if (!coefficients.empty()) {
        nlohmann::json c = nlohmann::json::object();
        for (const auto& [key, value] : coefficients) c[key] = value.to_json();
        j["coefficients"] = c;
    }
    nlohmann::json init = nlohmann::json::array();
    for (const auto& z : initial) {
        nlohmann::json p = nlohmann::json::array();
        for (int i = 0; i < 6; ++i) p.push_back(z(i));
        init.push_back(p);
    }
    j["initial"] = init;
    j["window"] = {t0, t1};
    j["rtol"] = rtol;
    j["atol"] = atol;
    j["grid"] = grid;
    j["seed"] = seed;
    return j;
}

Scenario::Resolved Scenario::resolve() const {
    std::vector<std::string> warnings;
    if (!preset) {
        return {LHSystemSpec(*algebra, coefficients), std::move(warnings)};
    }
    const Window window{t0, t1};
    const auto& p = preset_params;
    if (*preset == "em") {
        EMFieldData data{coeff_triple(p, "m"), coeff_triple(p, "e"),
                         CoefficientFunction::from_json(p.at("gamma"))};
        auto spec = em_preset(data, window, &warnings);
        return {std::move(spec), std::move(warnings)};
    }
    if (*preset == "cho" || *preset == "cck") {
        OscillatorData data{coeff_triple(p, "m"),     coeff_triple(p, "k"),
                            coeff_triple(p, "gamma"), coeff_or_zero(p, "b2"),
                            coeff_or_zero(p, "b3"),   coeff_or_zero(p, "b6")};
        auto spec = *preset == "cho" ? cho_preset(data, window) : cck_preset(data, window);
        return {std::move(spec), std::move(warnings)};
    }
    // su3
    if (!p.contains("atilde") || !p.at("atilde").is_array() || p.at("atilde").size() != 4)
        throw std::invalid_argument("su3 preset: 'atilde' must be an array of 4 coefficients");
    std::array<CoefficientFunction, 4> atilde;
    for (int i = 0; i < 4; ++i)
        atilde[static_cast<size_t>(i)] = CoefficientFunction::from_json(p.at("atilde").at(i));
    return {su3_preset(atilde), std::move(warnings)};
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scenario file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("scenario '" + path + "': " + e.what());
    }
    return Scenario::from_json(j);
}

namespace {

void write_coefficient_header(std::ostream& os, const std::map<std::string, CoefficientFunction>& resolved) {
    for (const auto& [name, f] : resolved)
        os << "# coefficient " << name << " = " << f.to_json().dump() << "\n";
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          const std::map<std::string, CoefficientFunction>& resolved) {
    os << "# trajectory copies=" << traj.copies << " rtol=" << format_double(traj.stats.rtol)
       << " atol=" << format_double(traj.stats.atol) << "\n";
    write_coefficient_header(os, resolved);
    os << "t,q1,q2,q3,p1,p2,p3";
    if (traj.copies > 1) os << ",copy";
    os << "\n";
    for (size_t s = 0; s < traj.times.size(); ++s) {
        for (int c = 0; c < traj.copies; ++c) {
            os << format_double(traj.times[s]);
            for (int i = 0; i < 6; ++i)
                os << "," << format_double(traj.states[s](6 * c + i));
            if (traj.copies > 1) os << "," << (c + 1);
            os << "\n";
        }
    }
}

void write_trajectory_json(std::ostream& os, const Trajectory& traj,
                           const std::map<std::string, CoefficientFunction>& resolved) {
    nlohmann::json j;
    j["copies"] = traj.copies;
    j["rtol"] = traj.stats.rtol;
    j["atol"] = traj.stats.atol;
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [name, f] : resolved) coeffs[name] = f.to_json();
    j["coefficients"] = coeffs;
    j["times"] = traj.times;
    nlohmann::json states = nlohmann::json::array();
    for (const auto& z : traj.states) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index i = 0; i < z.size(); ++i) row.push_back(z(i));
        states.push_back(row);
    }
    j["states"] = states;
    os << j.dump(1) << "\n";
}

Trajectory read_trajectory_csv(std::istream& is) {
    Trajectory traj;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    bool has_copy_col = false;
    // time -> per-copy states, in file order
    std::vector<std::vector<double>> rows;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            if (line.rfind("t,q1", 0) != 0)
                throw std::invalid_argument("trajectory CSV line " + std::to_string(lineno) +
                                            ": unexpected header '" + line + "'");
            has_copy_col = line.find(",copy") != std::string::npos;
            have_header = true;
            continue;
        }
        std::vector<double> vals;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                vals.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::invalid_argument("trajectory CSV line " + std::to_string(lineno) +
                                            ": bad number '" + cell + "'");
            }
        }
        const size_t expect = has_copy_col ? 8 : 7;
        if (vals.size() != expect)
            throw std::invalid_argument("trajectory CSV line " + std::to_string(lineno) + ": expected " +
                                        std::to_string(expect) + " fields");
        rows.push_back(std::move(vals));
    }
    if (rows.empty()) throw std::invalid_argument("trajectory CSV: no data rows");

    if (!has_copy_col) {
        traj.copies = 1;
        for (const auto& r : rows) {
            traj.times.push_back(r[0]);
            Eigen::VectorXd z(6);
            for (int i = 0; i < 6; ++i) z(i) = r[static_cast<size_t>(1 + i)];
            traj.states.push_back(std::move(z));
        }
    } else {
        int copies = 0;
        for (const auto& r : rows) copies = std::max(copies, static_cast<int>(r[7]));
        traj.copies = copies;
        if (rows.size() % static_cast<size_t>(copies) != 0)
            throw std::invalid_argument("trajectory CSV: row count is not a multiple of copies");
        const size_t samples = rows.size() / static_cast<size_t>(copies);
        for (size_t s = 0; s < samples; ++s) {
            Eigen::VectorXd z(6 * copies);
            const double t = rows[s * static_cast<size_t>(copies)][0];
            for (int c = 0; c < copies; ++c) {
                const auto& r = rows[s * static_cast<size_t>(copies) + static_cast<size_t>(c)];
                if (r[0] != t || static_cast<int>(r[7]) != c + 1)
                    throw std::invalid_argument(
                        "trajectory CSV: copies of one sample must share t and be ordered");
                for (int i = 0; i < 6; ++i) z(6 * c + i) = r[static_cast<size_t>(1 + i)];
            }
            traj.times.push_back(t);
            traj.states.push_back(std::move(z));
        }
    }
    for (size_t s = 1; s < traj.times.size(); ++s)
        if (!(traj.times[s - 1] < traj.times[s]))
            throw std::invalid_argument("trajectory CSV: times must be strictly increasing");
    return traj;
}

Trajectory read_trajectory_json(std::istream& is) {
    nlohmann::json j;
    is >> j;
    Trajectory traj;
    traj.copies = j.value("copies", 1);
    traj.stats.rtol = j.value("rtol", 0.0);
    traj.stats.atol = j.value("atol", 0.0);
    traj.times = j.at("times").get<std::vector<double>>();
    for (const auto& row : j.at("states")) {
        Eigen::VectorXd z(row.size());
        for (size_t i = 0; i < row.size(); ++i)
            z(static_cast<Eigen::Index>(i)) = row.at(i).get<double>();
        if (z.size() != 6 * traj.copies)
            throw std::invalid_argument("trajectory JSON: state dimension mismatch");
        traj.states.push_back(std::move(z));
    }
    if (traj.times.size() != traj.states.size())
        throw std::invalid_argument("trajectory JSON: times/states length mismatch");
    return traj;
}

Trajectory load_trajectory(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open trajectory file '" + path + "'");
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return read_trajectory_json(in);
    return read_trajectory_csv(in);
}

}  // namespace lhsys
