#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "plsec/mc.hpp"
#include "plsec/model.hpp"

namespace plsec::cli {

using Json = nlohmann::ordered_json;

struct SweepSpec {
    std::string var;
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;

    bool operator==(const SweepSpec&) const = default;
};

/// "var=start:stop:step". Throws InvalidParameter("sweep", ...).
SweepSpec parse_sweep(const std::string& s);
std::string format_sweep(const SweepSpec& s);

/// Power in watts from a number (watts) or a string "<value> W|mW|dBm".
double parse_power(const Json& v, const std::string& field);

struct RunConfig {
    SystemParams params;
    bool D_auto = true;  // D follows 2R
    bool r_auto = true;  // r follows R
    AttackMode mode = AttackMode::Eavesdrop;
    Topology topology = Topology::AttackerAtOrigin;
    mc::McConfig mc;
    std::optional<SweepSpec> sweep;

    std::string solve_variable = "d_th";  // d_th | ps_th | pj_th
    double p_o_th = 0.1;

    std::string quantity = "log-ratio-eav";
    int points = 200;
    std::optional<std::pair<double, double>> range;
    bool with_mc = false;

    std::string kind = "sop";  // simulate: sop | pdf | fading
    mc::FadingMeans fading;

    std::string out;
    std::string format = "csv";

    /// Re-applies the D = 2R / r = R defaults and checks every field.
    void finalize();
    bool operator==(const RunConfig& o) const;
};

Json to_json(const RunConfig& c);
RunConfig config_from_json(const Json& j);

/// Sets one named field (SystemParams names, plus p_s_dbm / p_j_dbm / noise_dbm).
void set_param(RunConfig& c, const std::string& name, double value);

enum ExitCode { kOk = 0, kConfigError = 2, kInfeasible = 3, kNonConvergence = 4 };

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace plsec::cli
