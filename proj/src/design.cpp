#include "plsec/design.hpp"

#include <cmath>
#include <numbers>

#include "plsec/numerics.hpp"
#include "plsec/sop.hpp"

namespace plsec::design {

namespace {

constexpr double kResidualTol = 1e-9;

numerics::Tolerance solver_tol() {
    numerics::Tolerance t;
    t.rel = 1e-14;
    t.abs = kResidualTol;
    return t;
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::Solved: return "solved";
        case Status::Unconstrained: return "unconstrained";
        case Status::Infeasible: return "infeasible";
    }
    return "?";
}

void DesignTarget::validate() const {
    if (!(p_o_th > 0.0 && p_o_th < 1.0)) throw InvalidParameter("p_o_th", "must lie in (0, 1)");
    if (!(lo == 0.0 && hi == 0.0) && !(lo < hi)) throw InvalidParameter("bounds", "need lo < hi");
    if (lo < 0.0) throw InvalidParameter("bounds", "lo must be >= 0");
}

double threshold_d_o(const SystemParams& p) {
    const auto d = derive(p);
    if (p.c_st <= 0.0) return numerics::kInf;
    return std::pow(d.kappa_su / std::expm1(p.c_st * std::numbers::ln2), 1.0 / p.theta);
}

double threshold_d_sat(const SystemParams& p) {
    const auto d = derive(p);
    return std::pow(d.lambda_e * std::pow(p.r, p.theta) / std::exp2(p.c_st), 1.0 / p.theta);
}

double threshold_r_sat(const SystemParams& p) {
    const auto d = derive(p);
    return std::pow(std::exp2(p.c_st) * std::pow(p.D, p.theta) / d.lambda_e, 1.0 / p.theta);
}

DesignSolution solve_d_th(const SystemParams& p, const DesignTarget& target) {
    target.validate();
    p.validate();
    const double hi = target.hi > 0.0 ? std::min(target.hi, 2.0 * p.R) : 2.0 * p.R;
    const double lo = target.lo > 0.0 ? target.lo : 1e-9 * p.R;
    auto g = [&](double D) {
        SystemParams q = p;
        q.D = D;
        return sop::sop_asym(q, target.mode).value - target.p_o_th;
    };
    const double g_hi = g(hi);
    if (g_hi <= 0.0) return {hi, g_hi, Status::Unconstrained, 0};
    const double g_lo = g(lo);
    if (g_lo > 0.0) return {lo, g_lo, Status::Infeasible, 0};
    const auto root = numerics::solve_bracketed(g, lo, hi, solver_tol());
    return {root.x, root.residual, Status::Solved, root.iterations};
}

namespace {

// Bisection on log(power). `decreasing` tells the direction of SOP in power.
DesignSolution solve_power(const SystemParams& p, const DesignTarget& target, double SystemParams::*field,
                           bool sop_decreasing) {
    target.validate();
    p.validate();
    if (target.mode != AttackMode::Jam) {
        throw InvalidParameter("mode", "power thresholds are defined for the jamming mode only");
    }
    const double lo = target.lo > 0.0 ? target.lo : 1e-15;
    const double hi = target.hi > 0.0 ? target.hi : 100.0;
    auto g_of = [&](double power) {
        SystemParams q = p;
        q.*field = power;
        return sop::sop_asym_jam(q).value - target.p_o_th;
    };
    const double g_lo = g_of(lo);
    const double g_hi = g_of(hi);
    if (sop_decreasing) {
        // Minimum P_S with SOP <= target.
        if (g_lo <= 0.0) return {lo, g_lo, Status::Unconstrained, 0};
        if (g_hi > 0.0) return {hi, g_hi, Status::Infeasible, 0};
    } else {
        // Minimum P_J with SOP >= target.
        if (g_lo >= 0.0) return {lo, g_lo, Status::Unconstrained, 0};
        if (g_hi < 0.0) return {hi, g_hi, Status::Infeasible, 0};
    }
    auto g_log = [&](double t) { return g_of(std::exp(t)); };
    const auto root = numerics::solve_bracketed(g_log, std::log(lo), std::log(hi), solver_tol());
    return {std::exp(root.x), root.residual, Status::Solved, root.iterations};
}

}  // namespace

DesignSolution solve_ps_th(const SystemParams& p, const DesignTarget& target) {
    return solve_power(p, target, &SystemParams::p_s, true);
}

DesignSolution solve_pj_th(const SystemParams& p, const DesignTarget& target) {
    return solve_power(p, target, &SystemParams::p_j, false);
}

}  // namespace plsec::design
