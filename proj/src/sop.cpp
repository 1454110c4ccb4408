#include "plsec/sop.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "plsec/distance.hpp"
#include "plsec/snr.hpp"

namespace plsec::sop {

std::string to_string(Method m) {
    switch (m) {
        case Method::ExactDistanceQuadrature: return "exact-distance-quadrature";
        case Method::ExactSnrQuadrature: return "exact-snr-quadrature";
        case Method::AsymptoticClosedForm: return "asymptotic-closed-form";
        case Method::MonteCarlo: return "monte-carlo";
    }
    return "?";
}

namespace {

SopResult finish(double raw, Method method, double err) {
    SopResult r;
    r.method = method;
    r.err = std::max(err, 0.0);
    r.value = std::clamp(raw, 0.0, 1.0);
    // Quadrature noise of order err is not reported as clamping.
    r.clamped = (raw < -std::max(err, 1e-15)) || (raw > 1.0 + std::max(err, 1e-15));
    return r;
}

numerics::QuadResult checked(const numerics::QuadResult& q, const char* who) {
    if (!q.converged) throw ConvergenceError(std::string(who) + ": tolerance not reached", q.value, q.error);
    return q;
}

// \int_0^1 [1 - F_tr(l_th(rho sqrt(u)))] du; integrand vanishes beyond u_break.
numerics::QuadResult distance_outage(const std::function<double(double)>& l_th, double rho, double u_break,
                                     const distance::DiskGeometry& geo, const numerics::Tolerance& tol) {
    auto integrand = [&](double u) {
        const double s = rho * std::sqrt(u);
        const double l = l_th(s);
        return 1.0 - distance::cdf_su_truncated(l, geo);
    };
    const double top = std::clamp(u_break, 0.0, 1.0);
    if (top <= 0.0) return {0.0, 0.0, 0, true};
    return numerics::integrate(integrand, 0.0, top, tol);
}

// Pr(gamma_SU < g) from nested quadrature of the gamma_SU density.
double gamma_su_cdf_numeric(double g, const SystemParams& p, const DerivedConstants& d,
                            const numerics::Tolerance& tol) {
    const double D = std::min(p.D, 2.0 * p.R);
    const double x0 = d.kappa_su / std::pow(D, p.theta);
    if (!(g > x0)) return 0.0;
    auto f = [&](double s) {
        const double x = x0 * std::exp(s);
        return x * snr::pdf_gamma_su(x, p, d);
    };
    return checked(numerics::integrate(f, 0.0, std::log(g / x0), tol), "gamma_su cdf").value;
}

// \int_{y0}^\infty f_A(y) Pr(gamma_SU < threshold(y)) dy in log y.
numerics::QuadResult snr_outage(const std::function<double(double)>& f_attacker, double y0,
                                const std::function<double(double)>& threshold, double y_kink,
                                const SystemParams& p, const DerivedConstants& d, const numerics::Tolerance& tol) {
    numerics::Tolerance inner = tol;
    inner.rel = tol.rel * 0.1;
    inner.abs = tol.abs * 0.1;
    auto outer = [&](double s) {
        const double y = y0 * std::exp(s);
        const double fa = f_attacker(y);
        if (fa == 0.0) return 0.0;
        return y * fa * gamma_su_cdf_numeric(threshold(y), p, d, inner);
    };
    std::vector<double> cuts;
    if (y_kink > y0 && std::isfinite(y_kink)) cuts.push_back(std::log(y_kink / y0));
    return numerics::integrate(outer, 0.0, numerics::kInf, cuts, tol);
}

}  // namespace

double sop_ineffective(const SystemParams& p, const DerivedConstants& d) {
    if (p.c_st <= 0.0) return 0.0;
    const double D = std::min(p.D, 2.0 * p.R);
    const double t = std::expm1(p.c_st * std::numbers::ln2);
    // Worst-case SNR test first: the distance form rounds at D == d_star.
    if (d.kappa_su / std::pow(D, p.theta) >= t) return 0.0;
    const double d_star = std::pow(d.kappa_su / t, 1.0 / p.theta);
    if (d_star >= D) return 0.0;
    const double F = distance::cdf_disk_line(D, p.R);
    return std::clamp((F - distance::cdf_disk_line(d_star, p.R)) / F, 0.0, 1.0);
}

SopResult sop_exact_eav(const SystemParams& p, const numerics::Tolerance& tol) {
    const DerivedConstants d = derive(p);
    if (p.c_st <= 0.0) return finish(0.0, Method::ExactDistanceQuadrature, 0.0);
    const auto geo = distance::geometry(p);
    const double D = geo.effective_D();
    const double two_c = std::exp2(p.c_st);
    auto l_th = [&](double s) {
        if (s <= 0.0) return 0.0;
        const double den = two_c * (1.0 + d.kappa_sa / std::pow(s, p.theta)) - 1.0;
        return std::pow(d.kappa_su / den, 1.0 / p.theta);
    };
    // l_th(s) = D at kappa_SA / s^theta = (kappa_SU / D^theta + 1) / 2^c - 1.
    double u_break = 1.0;
    const double rhs = (d.kappa_su / std::pow(D, p.theta) + 1.0) / two_c - 1.0;
    if (rhs > 0.0) {
        const double s_b = std::pow(d.kappa_sa / rhs, 1.0 / p.theta);
        u_break = std::min(1.0, (s_b / p.r) * (s_b / p.r));
    }
    const auto q = checked(distance_outage(l_th, p.r, u_break, geo, tol), "sop_exact_eav");
    const double pi_ = sop_ineffective(p, d);
    return finish(d.alpha * q.value + (1.0 - d.alpha) * pi_, Method::ExactDistanceQuadrature, d.alpha * q.error);
}

SopResult sop_exact_jam(const SystemParams& p, const numerics::Tolerance& tol) {
    const DerivedConstants d = derive(p);
    if (p.c_st <= 0.0) return finish(0.0, Method::ExactDistanceQuadrature, 0.0);
    const auto geo = distance::geometry(p);
    const double D = geo.effective_D();
    const double t = std::expm1(p.c_st * std::numbers::ln2);
    auto l_th = [&](double s) {
        if (s <= 0.0) return 0.0;
        return std::pow(d.kappa_su / (t * (1.0 + d.kappa_au / std::pow(s, p.theta))), 1.0 / p.theta);
    };
    double u_break = 1.0;
    const double rhs = d.kappa_su / (t * std::pow(D, p.theta)) - 1.0;
    if (rhs > 0.0) {
        const double s_b = std::pow(d.kappa_au / rhs, 1.0 / p.theta);
        u_break = std::min(1.0, (s_b / p.R) * (s_b / p.R));
    }
    const auto q = checked(distance_outage(l_th, p.R, u_break, geo, tol), "sop_exact_jam");
    return finish(q.value, Method::ExactDistanceQuadrature, q.error);
}

SopResult sop_exact_eav_snr(const SystemParams& p, const numerics::Tolerance& tol) {
    const DerivedConstants d = derive(p);
    if (p.c_st <= 0.0) return finish(0.0, Method::ExactSnrQuadrature, 0.0);
    const double two_c = std::exp2(p.c_st);
    const double D = std::min(p.D, 2.0 * p.R);
    const double x0 = d.kappa_su / std::pow(D, p.theta);
    const double y0 = d.kappa_sa / std::pow(p.r, p.theta);
    auto f_cond = [&](double y) { return snr::pdf_gamma_sa(y, p, d) / d.alpha; };
    auto threshold = [&](double y) { return two_c * (1.0 + y) - 1.0; };
    const double y_kink = (x0 + 1.0) / two_c - 1.0;
    const auto q = checked(snr_outage(f_cond, y0, threshold, y_kink, p, d, tol), "sop_exact_eav_snr");
    const double pi_ = sop_ineffective(p, d);
    return finish(d.alpha * q.value + (1.0 - d.alpha) * pi_, Method::ExactSnrQuadrature, d.alpha * q.error);
}

SopResult sop_exact_jam_snr(const SystemParams& p, const numerics::Tolerance& tol) {
    const DerivedConstants d = derive(p);
    if (p.c_st <= 0.0) return finish(0.0, Method::ExactSnrQuadrature, 0.0);
    const double t = std::expm1(p.c_st * std::numbers::ln2);
    const double D = std::min(p.D, 2.0 * p.R);
    const double x0 = d.kappa_su / std::pow(D, p.theta);
    const double y0 = d.kappa_au / std::pow(p.R, p.theta);
    auto f = [&](double y) { return snr::pdf_gamma_au(y, p, d); };
    auto threshold = [&](double y) { return t * (1.0 + y); };
    const double y_kink = x0 / t - 1.0;
    const auto q = checked(snr_outage(f, y0, threshold, y_kink, p, d, tol), "sop_exact_jam_snr");
    return finish(q.value, Method::ExactSnrQuadrature, q.error);
}

SopResult sop_asym_eav(const SystemParams& p) {
    const DerivedConstants d = derive(p);
    if (p.c_st <= 0.0) return finish(0.0, Method::AsymptoticClosedForm, 0.0);
    const double raw = d.alpha * snr::cdf_ratio_eav(std::exp2(p.c_st), p, d) + (1.0 - d.alpha) * sop_ineffective(p, d);
    return finish(raw, Method::AsymptoticClosedForm, 0.0);
}

SopResult sop_asym_jam(const SystemParams& p) {
    const DerivedConstants d = derive(p);
    if (p.c_st <= 0.0) return finish(0.0, Method::AsymptoticClosedForm, 0.0);
    const double raw = snr::cdf_ratio_jam(std::expm1(p.c_st * std::numbers::ln2), p, d);
    return finish(raw, Method::AsymptoticClosedForm, 0.0);
}

SopResult sop_exact(const SystemParams& p, AttackMode mode) {
    return mode == AttackMode::Eavesdrop ? sop_exact_eav(p) : sop_exact_jam(p);
}

SopResult sop_asym(const SystemParams& p, AttackMode mode) {
    return mode == AttackMode::Eavesdrop ? sop_asym_eav(p) : sop_asym_jam(p);
}

}  // namespace plsec::sop
