#include "plsec/model.hpp"

#include <cmath>

#include "plsec/distance.hpp"

namespace plsec {

std::string to_string(Topology t) {
    switch (t) {
        case Topology::AttackerAtOrigin: return "attacker-origin";
        case Topology::SourceAtOrigin: return "source-origin";
        case Topology::UserAtOrigin: return "user-origin";
    }
    return "?";
}

std::string to_string(AttackMode m) { return m == AttackMode::Eavesdrop ? "eavesdrop" : "jam"; }

Topology parse_topology(std::string_view s) {
    if (s == "attacker-origin") return Topology::AttackerAtOrigin;
    if (s == "source-origin") return Topology::SourceAtOrigin;
    if (s == "user-origin") return Topology::UserAtOrigin;
    throw InvalidParameter("topology", "unknown topology '" + std::string(s) + "'");
}

AttackMode parse_mode(std::string_view s) {
    if (s == "eavesdrop") return AttackMode::Eavesdrop;
    if (s == "jam") return AttackMode::Jam;
    throw InvalidParameter("mode", "unknown mode '" + std::string(s) + "'");
}

namespace {

void require_positive(const char* field, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) throw InvalidParameter(field, "must be finite and > 0");
}

}  // namespace

void SystemParams::validate() const {
    require_positive("p_s", p_s);
    require_positive("p_j", p_j);
    require_positive("noise", noise);
    require_positive("a_su", a_su);
    require_positive("a_sa", a_sa);
    require_positive("a_au", a_au);
    require_positive("R", R);
    require_positive("D", D);
    require_positive("r", r);
    if (!(theta >= 2.0) || !std::isfinite(theta)) throw InvalidParameter("theta", "must be >= 2");
    if (D > 2.0 * R * (1.0 + 1e-12)) throw InvalidParameter("D", "must not exceed 2R");
    if (r > R * (1.0 + 1e-12)) throw InvalidParameter("r", "must not exceed R");
    if (!(c_st >= 0.0) || !std::isfinite(c_st)) throw InvalidParameter("c_st", "must be finite and >= 0");
}

DerivedConstants derive(const SystemParams& params) {
    params.validate();
    DerivedConstants d;
    d.kappa_su = params.p_s * params.a_su / params.noise;
    d.kappa_sa = params.p_s * params.a_sa / params.noise;
    d.kappa_au = params.p_j * params.a_au / params.noise;
    d.lambda_e = d.kappa_su / d.kappa_sa;
    d.lambda_j = d.kappa_su / d.kappa_au;
    const double ratio = std::min(params.r / params.R, 1.0);
    d.alpha = ratio * ratio;
    d.f_d = distance::cdf_disk_line(std::min(params.D, 2.0 * params.R), params.R);
    return d;
}

}  // namespace plsec
