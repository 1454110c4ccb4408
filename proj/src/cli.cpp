#include "plsec/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "plsec/design.hpp"
#include "plsec/distance.hpp"
#include "plsec/sop.hpp"

namespace plsec::cli {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double to_double(const std::string& s, const std::string& field) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw InvalidParameter(field, "trailing characters in '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw InvalidParameter(field, "not a number: '" + s + "'");
    }
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

// Config errors keep the field name; wrap everything else that comes out of
// json parsing the same way.
template <class T>
T get_as(const Json& j, const std::string& field) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParameter(field, e.what());
    }
}

void check_keys(const Json& j, const std::string& section, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw InvalidParameter(section, "must be an object");
    for (const auto& [k, v] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || k == a;
        if (!ok) throw InvalidParameter(section.empty() ? k : section + "." + k, "unknown key");
    }
}

std::string placement_name(distance::Placement p) {
    return p == distance::Placement::IndependentLinks ? "independent" : "joint";
}

distance::Placement parse_placement(const std::string& s) {
    if (s == "independent") return distance::Placement::IndependentLinks;
    if (s == "joint") return distance::Placement::JointGeometry;
    throw InvalidParameter("mc.placement", "expected independent | joint");
}

}  // namespace

SweepSpec parse_sweep(const std::string& s) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw InvalidParameter("sweep", "expected var=start:stop:step");
    SweepSpec sp;
    sp.var = trim(s.substr(0, eq));
    std::stringstream rest(s.substr(eq + 1));
    std::string a, b, c;
    if (!std::getline(rest, a, ':') || !std::getline(rest, b, ':') || !std::getline(rest, c)) {
        throw InvalidParameter("sweep", "expected var=start:stop:step");
    }
    sp.start = to_double(trim(a), "sweep");
    sp.stop = to_double(trim(b), "sweep");
    sp.step = to_double(trim(c), "sweep");
    if (!(sp.start < sp.stop)) throw InvalidParameter("sweep", "need start < stop");
    if (!(sp.step > 0.0)) throw InvalidParameter("sweep", "need step > 0");
    return sp;
}

std::string format_sweep(const SweepSpec& s) {
    return s.var + "=" + Json(s.start).dump() + ":" + Json(s.stop).dump() + ":" + Json(s.step).dump();
}

double parse_power(const Json& v, const std::string& field) {
    if (v.is_number()) return v.get<double>();
    if (!v.is_string()) throw InvalidParameter(field, "expected a number (W) or a string with unit W, mW or dBm");
    const std::string s = trim(v.get<std::string>());
    std::size_t pos = 0;
    double x = 0.0;
    try {
        x = std::stod(s, &pos);
    } catch (const std::logic_error&) {
        throw InvalidParameter(field, "cannot parse power '" + s + "'");
    }
    const std::string unit = trim(s.substr(pos));
    if (unit.empty() || unit == "W") return x;
    if (unit == "mW") return x * 1e-3;
    if (unit == "dBm") return dbm_to_watts(x);
    throw InvalidParameter(field, "unknown power unit '" + unit + "'");
}

void set_param(RunConfig& c, const std::string& name, double value) {
    SystemParams& p = c.params;
    if (name == "p_s") p.p_s = value;
    else if (name == "p_j") p.p_j = value;
    else if (name == "noise") p.noise = value;
    else if (name == "p_s_dbm") p.p_s = dbm_to_watts(value);
    else if (name == "p_j_dbm") p.p_j = dbm_to_watts(value);
    else if (name == "noise_dbm") p.noise = dbm_to_watts(value);
    else if (name == "theta") p.theta = value;
    else if (name == "a_su") p.a_su = value;
    else if (name == "a_sa") p.a_sa = value;
    else if (name == "a_au") p.a_au = value;
    else if (name == "R") p.R = value;
    else if (name == "D") { p.D = value; c.D_auto = false; }
    else if (name == "r") { p.r = value; c.r_auto = false; }
    else if (name == "c_st") p.c_st = value;
    else throw InvalidParameter(name, "unknown parameter");
}

void RunConfig::finalize() {
    if (D_auto) params.D = 2.0 * params.R;
    if (r_auto) params.r = params.R;
    params.validate();
    mc.validate();
    if (format != "csv" && format != "json") throw InvalidParameter("format", "expected csv | json");
    if (solve_variable != "d_th" && solve_variable != "ps_th" && solve_variable != "pj_th") {
        throw InvalidParameter("solve.variable", "expected d_th | ps_th | pj_th");
    }
    if (!(p_o_th > 0.0 && p_o_th < 1.0)) throw InvalidParameter("solve.p_o_th", "must lie in (0, 1)");
    if (kind != "sop" && kind != "pdf" && kind != "fading") throw InvalidParameter("simulate.kind", "expected sop | pdf | fading");
    mc::parse_quantity(quantity);
    if (points < 1) throw InvalidParameter("pdf.points", "must be >= 1");
    if (range && !(range->first < range->second)) throw InvalidParameter("pdf.range", "need lo < hi");
    if (sweep && !(sweep->start < sweep->stop && sweep->step > 0.0)) throw InvalidParameter("sweep", "invalid range");
}

bool RunConfig::operator==(const RunConfig& o) const {
    return params == o.params && D_auto == o.D_auto && r_auto == o.r_auto && mode == o.mode &&
           topology == o.topology && mc == o.mc && sweep == o.sweep && solve_variable == o.solve_variable &&
           p_o_th == o.p_o_th && quantity == o.quantity && points == o.points && range == o.range &&
           with_mc == o.with_mc && kind == o.kind && fading.su == o.fading.su && fading.sa == o.fading.sa &&
           fading.au == o.fading.au && fading.degenerate == o.fading.degenerate && out == o.out && format == o.format;
}

Json to_json(const RunConfig& c) {
    const SystemParams& p = c.params;
    Json j;
    j["params"] = {{"p_s", p.p_s},   {"p_j", p.p_j},   {"noise", p.noise}, {"theta", p.theta},
                   {"a_su", p.a_su}, {"a_sa", p.a_sa}, {"a_au", p.a_au},   {"R", p.R},
                   {"D", c.D_auto ? Json(nullptr) : Json(p.D)},
                   {"r", c.r_auto ? Json(nullptr) : Json(p.r)},
                   {"c_st", p.c_st}};
    j["mode"] = to_string(c.mode);
    j["topology"] = to_string(c.topology);
    j["mc"] = {{"trials", c.mc.trials},
               {"seed", c.mc.seed},
               {"bins", c.mc.bins},
               {"workers", c.mc.workers},
               {"serial", c.mc.policy == mc::ExecPolicy::Serial},
               {"placement", placement_name(c.mc.placement)}};
    j["sweep"] = c.sweep ? Json(format_sweep(*c.sweep)) : Json(nullptr);
    j["solve"] = {{"variable", c.solve_variable}, {"p_o_th", c.p_o_th}};
    j["pdf"] = {{"quantity", c.quantity},
                {"points", c.points},
                {"range", c.range ? Json::array({c.range->first, c.range->second}) : Json(nullptr)},
                {"with_mc", c.with_mc}};
    j["simulate"] = {{"kind", c.kind}};
    j["fading"] = {{"su", c.fading.su}, {"sa", c.fading.sa}, {"au", c.fading.au}, {"degenerate", c.fading.degenerate}};
    j["output"] = {{"path", c.out}, {"format", c.format}};
    return j;
}

RunConfig config_from_json(const Json& j) {
    check_keys(j, "", {"params", "mode", "topology", "mc", "sweep", "solve", "pdf", "simulate", "fading", "output"});
    RunConfig c;
    if (j.contains("params")) {
        const Json& p = j["params"];
        check_keys(p, "params", {"p_s", "p_j", "noise", "theta", "a_su", "a_sa", "a_au", "R", "D", "r", "c_st"});
        if (p.contains("p_s")) c.params.p_s = parse_power(p["p_s"], "params.p_s");
        if (p.contains("p_j")) c.params.p_j = parse_power(p["p_j"], "params.p_j");
        if (p.contains("noise")) c.params.noise = parse_power(p["noise"], "params.noise");
        for (const char* k : {"theta", "a_su", "a_sa", "a_au", "R", "c_st"}) {
            if (p.contains(k)) set_param(c, k, get_as<double>(p[k], std::string("params.") + k));
        }
        if (p.contains("D") && !p["D"].is_null()) set_param(c, "D", get_as<double>(p["D"], "params.D"));
        if (p.contains("r") && !p["r"].is_null()) set_param(c, "r", get_as<double>(p["r"], "params.r"));
    }
    if (j.contains("mode")) c.mode = parse_mode(get_as<std::string>(j["mode"], "mode"));
    if (j.contains("topology")) c.topology = parse_topology(get_as<std::string>(j["topology"], "topology"));
    if (j.contains("mc")) {
        const Json& m = j["mc"];
        check_keys(m, "mc", {"trials", "seed", "bins", "workers", "serial", "placement"});
        if (m.contains("trials")) c.mc.trials = get_as<std::uint64_t>(m["trials"], "mc.trials");
        if (m.contains("seed")) c.mc.seed = get_as<std::uint64_t>(m["seed"], "mc.seed");
        if (m.contains("bins")) c.mc.bins = get_as<int>(m["bins"], "mc.bins");
        if (m.contains("workers")) c.mc.workers = get_as<int>(m["workers"], "mc.workers");
        if (m.contains("serial") && get_as<bool>(m["serial"], "mc.serial")) c.mc.policy = mc::ExecPolicy::Serial;
        if (m.contains("placement")) c.mc.placement = parse_placement(get_as<std::string>(m["placement"], "mc.placement"));
    }
    if (j.contains("sweep") && !j["sweep"].is_null()) c.sweep = parse_sweep(get_as<std::string>(j["sweep"], "sweep"));
    if (j.contains("solve")) {
        const Json& s = j["solve"];
        check_keys(s, "solve", {"variable", "p_o_th"});
        if (s.contains("variable")) c.solve_variable = get_as<std::string>(s["variable"], "solve.variable");
        if (s.contains("p_o_th")) c.p_o_th = get_as<double>(s["p_o_th"], "solve.p_o_th");
    }
    if (j.contains("pdf")) {
        const Json& s = j["pdf"];
        check_keys(s, "pdf", {"quantity", "points", "range", "with_mc"});
        if (s.contains("quantity")) c.quantity = get_as<std::string>(s["quantity"], "pdf.quantity");
        if (s.contains("points")) c.points = get_as<int>(s["points"], "pdf.points");
        if (s.contains("range") && !s["range"].is_null()) {
            const auto v = get_as<std::vector<double>>(s["range"], "pdf.range");
            if (v.size() != 2) throw InvalidParameter("pdf.range", "expected [lo, hi]");
            c.range = std::make_pair(v[0], v[1]);
        }
        if (s.contains("with_mc")) c.with_mc = get_as<bool>(s["with_mc"], "pdf.with_mc");
    }
    if (j.contains("simulate")) {
        check_keys(j["simulate"], "simulate", {"kind"});
        if (j["simulate"].contains("kind")) c.kind = get_as<std::string>(j["simulate"]["kind"], "simulate.kind");
    }
    if (j.contains("fading")) {
        const Json& f = j["fading"];
        check_keys(f, "fading", {"su", "sa", "au", "degenerate"});
        if (f.contains("su")) c.fading.su = get_as<double>(f["su"], "fading.su");
        if (f.contains("sa")) c.fading.sa = get_as<double>(f["sa"], "fading.sa");
        if (f.contains("au")) c.fading.au = get_as<double>(f["au"], "fading.au");
        if (f.contains("degenerate")) c.fading.degenerate = get_as<bool>(f["degenerate"], "fading.degenerate");
    }
    if (j.contains("output")) {
        const Json& o = j["output"];
        check_keys(o, "output", {"path", "format"});
        if (o.contains("path")) c.out = get_as<std::string>(o["path"], "output.path");
        if (o.contains("format")) c.format = get_as<std::string>(o["format"], "output.format");
    }
    c.finalize();
    return c;
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

namespace {

struct InfeasibleResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void row(std::vector<Json> cells) { rows_.push_back(std::move(cells)); }

    void write(std::ostream& os, const std::string& format) const {
        if (format == "json") {
            Json arr = Json::array();
            for (const auto& r : rows_) {
                Json o;
                for (std::size_t i = 0; i < header_.size(); ++i) o[header_[i]] = r[i];
                arr.push_back(o);
            }
            os << arr.dump(2) << '\n';
            return;
        }
        for (std::size_t i = 0; i < header_.size(); ++i) os << (i ? "," : "") << header_[i];
        os << '\n';
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) os << ',';
                const Json& v = r[i];
                if (v.is_null()) continue;
                if (v.is_number_float()) os << num(v.get<double>());
                else if (v.is_string()) os << v.get<std::string>();
                else os << v.dump();
            }
            os << '\n';
        }
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<Json>> rows_;
};

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

void cmd_derive(const RunConfig& c, std::ostream& os) {
    const SystemParams& p = c.params;
    const auto d = derive(p);
    Table t({"kappa_su", "kappa_sa", "kappa_au", "lambda_e", "lambda_j", "alpha", "f_d", "d_o", "d_sat", "r_sat"});
    t.row({d.kappa_su, d.kappa_sa, d.kappa_au, d.lambda_e, d.lambda_j, d.alpha, d.f_d,
           finite_or_null(design::threshold_d_o(p)), design::threshold_d_sat(p), design::threshold_r_sat(p)});
    t.write(os, c.format);
}

std::pair<double, double> default_range(mc::Quantity q, const SystemParams& p) {
    switch (q) {
        case mc::Quantity::DSu:
        case mc::Quantity::DSa:
        case mc::Quantity::DAu: return {0.0, 2.0 * p.R};
        case mc::Quantity::LogRatioEav: return {-8.0, 8.0};
        case mc::Quantity::Log1pRatioJam: return {0.0, 12.0};
        default: return {-30.0, 90.0};
    }
}

void cmd_pdf(const RunConfig& c, std::ostream& os) {
    const auto q = mc::parse_quantity(c.quantity);
    Table t({"x", "analytic", "empirical"});
    if (c.with_mc) {
        const auto rep = mc::mc_pdf(q, c.params, c.mc);
        for (int i = 0; i < rep.histogram.bins(); ++i) {
            t.row({rep.histogram.center(i), rep.analytic_center[static_cast<std::size_t>(i)],
                   rep.histogram.density[static_cast<std::size_t>(i)]});
        }
    } else {
        const auto [lo, hi] = c.range ? *c.range : default_range(q, c.params);
        const double h = (hi - lo) / c.points;
        for (int i = 0; i < c.points; ++i) {
            const double x = lo + (i + 0.5) * h;
            t.row({x, mc::analytic_pdf(q, x, c.params, c.topology), nullptr});
        }
    }
    t.write(os, c.format);
}

void cmd_sop(const RunConfig& c, std::ostream& os) {
    const auto& p = c.params;
    Table t({"mode", "method", "value", "err", "clamped"});
    auto add = [&](const sop::SopResult& r) {
        t.row({to_string(c.mode), sop::to_string(r.method), r.value, r.err, r.clamped});
    };
    if (c.mode == AttackMode::Eavesdrop) {
        add(sop::sop_exact_eav(p));
        add(sop::sop_exact_eav_snr(p));
        add(sop::sop_asym_eav(p));
    } else {
        add(sop::sop_exact_jam(p));
        add(sop::sop_exact_jam_snr(p));
        add(sop::sop_asym_jam(p));
    }
    if (c.with_mc) {
        const auto rep = mc::mc_sop(p, c.mode, c.mc);
        add({rep.estimate, sop::Method::MonteCarlo, rep.std_err, false});
    }
    t.write(os, c.format);
}

void cmd_solve(const RunConfig& c, std::ostream& os) {
    design::DesignTarget target;
    target.p_o_th = c.p_o_th;
    target.mode = c.mode;
    design::DesignSolution s;
    if (c.solve_variable == "d_th") s = design::solve_d_th(c.params, target);
    else if (c.solve_variable == "ps_th") s = design::solve_ps_th(c.params, target);
    else s = design::solve_pj_th(c.params, target);
    Table t({"variable", "value", "residual", "status"});
    t.row({c.solve_variable, s.value, s.residual, design::to_string(s.status)});
    t.write(os, c.format);
    if (s.status == design::Status::Infeasible) throw InfeasibleResult(c.solve_variable + ": target not reachable within bounds");
}

void cmd_sweep(const RunConfig& c, std::ostream& os) {
    if (!c.sweep) throw InvalidParameter("sweep", "required for the sweep command");
    const SweepSpec& sw = *c.sweep;
    Table t({"variable", "value", "sop_exact", "sop_asymptotic"});
    const auto n = static_cast<long>(std::floor((sw.stop - sw.start) / sw.step + 1e-9));
    for (long i = 0; i <= n; ++i) {
        const double x = sw.start + static_cast<double>(i) * sw.step;
        RunConfig point = c;
        set_param(point, sw.var, x);
        point.finalize();
        t.row({sw.var, x, sop::sop_exact(point.params, c.mode).value, sop::sop_asym(point.params, c.mode).value});
    }
    t.write(os, c.format);
}

Json report_json(const std::string& kind, const mc::McReport& r) {
    Json j;
    j["kind"] = kind;
    j["estimate"] = r.estimate;
    j["std_err"] = r.std_err;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["workers"] = r.workers;
    j["acceptance"] = r.acceptance;
    if (kind == "sop") {
        j["asym_outage"] = r.asym_outage;
        j["positive_sc"] = r.positive_sc;
        j["positive_sc_exact_outage"] = r.positive_sc_exact_outage;
        j["positive_sc_asym_outage"] = r.positive_sc_asym_outage;
    }
    if (kind == "fading") {
        j["infeasible"] = r.infeasible;
        j["unconstrained"] = r.unconstrained;
    }
    if (r.rmse >= 0.0) {
        j["rmse"] = r.rmse;
        j["rmse_center"] = r.rmse_center;
    }
    if (r.histogram.bins() > 0) {
        j["histogram"] = {{"lo", r.histogram.lo}, {"hi", r.histogram.hi}, {"density", r.histogram.density}};
        if (!r.analytic_average.empty()) j["histogram"]["analytic_average"] = r.analytic_average;
    }
    Json pm = Json::array();
    for (std::size_t i = 0; i < r.point_mass_locations.size(); ++i) {
        pm.push_back({{"location", r.point_mass_locations[i]}, {"mass", r.point_mass_masses[i]}});
    }
    j["point_masses"] = pm;
    return j;
}

void cmd_simulate(const RunConfig& c, std::ostream& os) {
    mc::McConfig cfg = c.mc;
    cfg.topology = c.topology;
    mc::McReport r;
    if (c.kind == "sop") {
        r = mc::mc_sop(c.params, c.mode, cfg);
    } else if (c.kind == "pdf") {
        r = mc::mc_pdf(mc::parse_quantity(c.quantity), c.params, cfg);
    } else {
        design::DesignTarget target;
        target.p_o_th = c.p_o_th;
        target.mode = c.mode;
        r = mc::mc_fading_dth(c.params, target, c.fading, cfg);
    }
    if (c.format == "json") {
        os << report_json(c.kind, r).dump(2) << '\n';
        return;
    }
    Table t({"kind", "estimate", "std_err", "trials", "seed", "workers", "rmse", "rmse_center"});
    t.row({c.kind, r.estimate, r.std_err, r.trials, r.seed, r.workers, r.rmse >= 0 ? Json(r.rmse) : Json(nullptr),
           r.rmse >= 0 ? Json(r.rmse_center) : Json(nullptr)});
    t.write(os, c.format);
}

void error_record(std::ostream& err, const char* kind, const std::string& message, const std::string& field = {}) {
    Json j;
    j["error"] = kind;
    if (!field.empty()) j["field"] = field;
    j["message"] = message;
    err << j.dump() << '\n';
}

struct Flags {
    std::string config;
    std::string mode;
    std::string topology;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<int> workers;
    std::optional<int> bins;
    std::string out;
    std::string format;
    std::string sweep;
    std::vector<std::string> sets;
    bool emit_config = false;
    std::string quantity;
    std::optional<int> points;
    std::string range;
    bool with_mc = false;
    bool serial = false;
    std::string solve;
    std::optional<double> target;
    std::string kind;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config, "JSON config file");
    sub->add_option("--mode", f.mode, "eavesdrop | jam");
    sub->add_option("--topology", f.topology, "attacker-origin | source-origin | user-origin");
    sub->add_option("--seed", f.seed, "Monte Carlo seed");
    sub->add_option("--trials", f.trials, "Monte Carlo trials");
    sub->add_option("--workers", f.workers, "Monte Carlo shards");
    sub->add_option("--bins", f.bins, "histogram bins");
    sub->add_flag("--serial", f.serial, "run shards without OpenMP");
    sub->add_option("--out", f.out, "output file (default stdout)");
    sub->add_option("--format", f.format, "csv | json");
    sub->add_option("--set", f.sets, "override a parameter, e.g. --set r=50 --set p_j=20dBm");
}

void apply_flags(const Flags& f, RunConfig& c) {
    if (!f.mode.empty()) c.mode = parse_mode(f.mode);
    if (!f.topology.empty()) c.topology = parse_topology(f.topology);
    if (f.seed) c.mc.seed = *f.seed;
    if (f.trials) c.mc.trials = *f.trials;
    if (f.workers) c.mc.workers = *f.workers;
    if (f.bins) c.mc.bins = *f.bins;
    if (f.serial) c.mc.policy = mc::ExecPolicy::Serial;
    if (!f.out.empty()) c.out = f.out;
    if (!f.format.empty()) c.format = f.format;
    if (!f.sweep.empty()) c.sweep = parse_sweep(f.sweep);
    for (const auto& s : f.sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw InvalidParameter("set", "expected name=value, got '" + s + "'");
        const std::string name = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (name == "p_s" || name == "p_j" || name == "noise") {
            set_param(c, name, parse_power(Json(value), name));
        } else {
            set_param(c, name, to_double(value, name));
        }
    }
    if (!f.quantity.empty()) c.quantity = f.quantity;
    if (f.points) c.points = *f.points;
    if (!f.range.empty()) {
        const auto colon = f.range.find(':');
        if (colon == std::string::npos) throw InvalidParameter("range", "expected lo:hi");
        c.range = std::make_pair(to_double(f.range.substr(0, colon), "range"), to_double(f.range.substr(colon + 1), "range"));
    }
    if (f.with_mc) c.with_mc = true;
    if (!f.solve.empty()) c.solve_variable = f.solve;
    if (f.target) c.p_o_th = *f.target;
    if (!f.kind.empty()) c.kind = f.kind;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Secrecy outage toolkit for a disk deployment under an eavesdropping or jamming attacker", "plsec"};
    app.require_subcommand(1);
    Flags f;
    auto* derive_cmd = app.add_subcommand("derive", "print derived constants and thresholds");
    auto* pdf_cmd = app.add_subcommand("pdf", "tabulate an analytic density (optionally with a histogram)");
    auto* sop_cmd = app.add_subcommand("sop", "secrecy outage probability by every method");
    auto* solve_cmd = app.add_subcommand("solve", "design threshold D_th, P_S,th or P_J,th");
    auto* sweep_cmd = app.add_subcommand("sweep", "SOP over a parameter range");
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo report");
    for (auto* s : {derive_cmd, pdf_cmd, sop_cmd, solve_cmd, sweep_cmd, sim_cmd}) add_common(s, f);
    derive_cmd->add_flag("--emit-config", f.emit_config, "print the resolved config as JSON");
    pdf_cmd->add_option("--quantity", f.quantity, "d_su | d_sa | d_au | log-ratio-eav | log1p-ratio-jam | snr-su-db | snr-sa-db | snr-au-db");
    sim_cmd->add_option("--quantity", f.quantity, "quantity for --kind pdf");
    pdf_cmd->add_option("--points", f.points, "grid points");
    pdf_cmd->add_option("--range", f.range, "lo:hi");
    pdf_cmd->add_flag("--with-mc", f.with_mc, "add an empirical column from a Monte Carlo histogram");
    sop_cmd->add_flag("--with-mc", f.with_mc, "add a Monte Carlo row");
    solve_cmd->add_option("--solve", f.solve, "d_th | ps_th | pj_th");
    for (auto* s : {solve_cmd, sim_cmd}) s->add_option("--target", f.target, "acceptable SOP p_o_th");
    sweep_cmd->add_option("--sweep", f.sweep, "var=start:stop:step");
    sim_cmd->add_option("--kind", f.kind, "sop | pdf | fading");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        error_record(err, "config", e.what());
        return kConfigError;
    }

    try {
        RunConfig c;
        if (!f.config.empty()) {
            std::ifstream in(f.config);
            if (!in) throw InvalidParameter("config", "cannot open '" + f.config + "'");
            Json j;
            try {
                j = Json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw InvalidParameter("config", e.what());
            }
            c = config_from_json(j);
        }
        apply_flags(f, c);
        c.finalize();

        if (derive_cmd->parsed() && f.emit_config) {
            out << to_json(c).dump(2) << '\n';
            return kOk;
        }

        std::ofstream file;
        if (!c.out.empty()) {
            file.open(c.out);
            if (!file) throw InvalidParameter("output.path", "cannot open '" + c.out + "' for writing");
        }
        std::ostream& os = c.out.empty() ? out : file;

        if (derive_cmd->parsed()) cmd_derive(c, os);
        else if (pdf_cmd->parsed()) cmd_pdf(c, os);
        else if (sop_cmd->parsed()) cmd_sop(c, os);
        else if (solve_cmd->parsed()) cmd_solve(c, os);
        else if (sweep_cmd->parsed()) cmd_sweep(c, os);
        else cmd_simulate(c, os);
        return kOk;
    } catch (const InvalidParameter& e) {
        error_record(err, "config", e.what(), e.field());
        return kConfigError;
    } catch (const DomainError& e) {
        error_record(err, "config", e.what());
        return kConfigError;
    } catch (const InfeasibleResult& e) {
        error_record(err, "infeasible", e.what());
        return kInfeasible;
    } catch (const BracketError& e) {
        error_record(err, "infeasible", e.what());
        return kInfeasible;
    } catch (const ConvergenceError& e) {
        error_record(err, "convergence", e.what());
        return kNonConvergence;
    }
}

}  // namespace plsec::cli
