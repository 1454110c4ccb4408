#include "plsec/snr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plsec/distance.hpp"

namespace plsec::snr {

using std::numbers::ln2;
using std::numbers::pi;

namespace {

// Integral over [lower, upper) in log space when lower > 0.
numerics::QuadResult integrate_positive(const std::function<double(double)>& f, double lower, double upper,
                                        const numerics::Tolerance& tol) {
    if (lower > 0.0) {
        auto g = [&f, lower](double s) {
            const double y = lower * std::exp(s);
            const double fy = f(y);
            return fy == 0.0 ? 0.0 : y * fy;
        };
        const double top = std::isinf(upper) ? numerics::kInf : std::log(upper / lower);
        return numerics::integrate(g, 0.0, top, tol);
    }
    return numerics::integrate(f, lower, upper, tol);
}

// Ratio lambda (d_A / d_SU)^theta, d_A ~ disk point on rho, d_SU truncated disk line.
struct RatioLaw {
    double lambda;
    double rho;
    double theta;
    double R;
    double D;
    double F;
};

RatioLaw eav_law(const SystemParams& p, const DerivedConstants& d) {
    return {d.lambda_e, p.r, p.theta, p.R, std::min(p.D, 2.0 * p.R), d.f_d};
}

RatioLaw jam_law(const SystemParams& p, const DerivedConstants& d) {
    return {d.lambda_j, p.R, p.theta, p.R, std::min(p.D, 2.0 * p.R), d.f_d};
}

double ratio_pdf(double z, const RatioLaw& L) {
    if (!(z > 0.0) || std::isinf(z)) return 0.0;
    const double w = std::pow(z / L.lambda, 1.0 / L.theta);
    const double lc = std::min(L.rho / w, L.D);
    const double J = distance::partial_second_moment(lc, L.R);
    return 2.0 / L.theta * std::pow(L.lambda, -2.0 / L.theta) * std::pow(z, 2.0 / L.theta - 1.0) * J /
           (L.F * L.rho * L.rho);
}

double ratio_cdf(double z, const RatioLaw& L) {
    if (!(z > 0.0)) return 0.0;
    if (std::isinf(z)) return 1.0;
    const double w2 = std::pow(z / L.lambda, 2.0 / L.theta);
    const double lc = L.rho / std::sqrt(w2);
    double v;
    if (lc >= L.D) {
        v = w2 * distance::partial_second_moment(L.D, L.R) / (L.rho * L.rho * L.F);
    } else {
        v = w2 * distance::partial_second_moment(lc, L.R) / (L.rho * L.rho * L.F) +
            (L.F - distance::cdf_disk_line(lc, L.R)) / L.F;
    }
    return std::clamp(v, 0.0, 1.0);
}

}  // namespace

double MixedDensity::total_mass(const numerics::Tolerance& tol) const {
    const auto q = integrate_positive(density, lower, upper, tol);
    if (!q.converged) throw ConvergenceError("total_mass: tolerance not reached", q.value, q.error);
    double m = q.value;
    for (const auto& a : point_masses) m += a.mass;
    return m;
}

double pdf_gamma_su(double x, const SystemParams& p, const DerivedConstants& d) {
    const double D = std::min(p.D, 2.0 * p.R);
    if (!(x > d.kappa_su / std::pow(D, p.theta)) || std::isinf(x)) return 0.0;
    const double u = std::pow(d.kappa_su, 2.0 / p.theta) / (4.0 * p.R * p.R * std::pow(x, 2.0 / p.theta));
    return 8.0 * u / (d.f_d * x * pi * p.theta) * (pi - 2.0 * numerics::beta_incomplete(std::min(u, 1.0), 0.5, 1.5));
}

double pdf_gamma_sa(double y, const SystemParams& p, const DerivedConstants& d) {
    if (!(y > d.kappa_sa / std::pow(p.r, p.theta)) || std::isinf(y)) return 0.0;
    return 2.0 * d.alpha / (p.theta * y * p.r * p.r) * std::pow(y / d.kappa_sa, -2.0 / p.theta);
}

MixedDensity gamma_sa_density(const SystemParams& p, const DerivedConstants& d) {
    MixedDensity m;
    m.density = [p, d](double y) { return pdf_gamma_sa(y, p, d); };
    m.lower = d.kappa_sa / std::pow(p.r, p.theta);
    if (d.alpha < 1.0) m.point_masses.push_back({0.0, 1.0 - d.alpha});
    return m;
}

double pdf_gamma_au(double y, const SystemParams& p, const DerivedConstants& d) {
    if (!(y > d.kappa_au / std::pow(p.R, p.theta)) || std::isinf(y)) return 0.0;
    return 2.0 / (p.theta * y * p.R * p.R) * std::pow(y / d.kappa_au, -2.0 / p.theta);
}

double pdf_snr_from_distance(double x, double kappa, double theta, const std::function<double(double)>& distance_pdf) {
    if (!(x > 0.0) || std::isinf(x)) return 0.0;
    const double l = std::pow(kappa / x, 1.0 / theta);
    return distance_pdf(l) * l / (theta * x);
}

double ratio_breakpoint_eav(const SystemParams& p, const DerivedConstants& d) {
    return d.lambda_e * std::pow(p.r / std::min(p.D, 2.0 * p.R), p.theta);
}

double ratio_breakpoint_jam(const SystemParams& p, const DerivedConstants& d) {
    return d.lambda_j * std::pow(p.R / std::min(p.D, 2.0 * p.R), p.theta);
}

double pdf_ratio_eav(double z, const SystemParams& p, const DerivedConstants& d) { return ratio_pdf(z, eav_law(p, d)); }
double cdf_ratio_eav(double z, const SystemParams& p, const DerivedConstants& d) { return ratio_cdf(z, eav_law(p, d)); }
double pdf_ratio_jam(double z, const SystemParams& p, const DerivedConstants& d) { return ratio_pdf(z, jam_law(p, d)); }
double cdf_ratio_jam(double z, const SystemParams& p, const DerivedConstants& d) { return ratio_cdf(z, jam_law(p, d)); }

double pdf_log_ratio_eav(double c, const SystemParams& p, const DerivedConstants& d) {
    const double z = std::exp2(c);
    return ln2 * z * pdf_ratio_eav(z, p, d);
}

double pdf_log1p_ratio_jam(double c, const SystemParams& p, const DerivedConstants& d) {
    if (!(c > 0.0)) return 0.0;
    const double z1 = std::exp2(c);
    return ln2 * z1 * pdf_ratio_jam(z1 - 1.0, p, d);
}

double ratio_pdf_oracle(const std::function<double(double)>& num, Support num_support,
                        const std::function<double(double)>& den, Support den_support, double z,
                        const numerics::Tolerance& tol) {
    if (!(z > 0.0) || std::isinf(z)) return 0.0;
    const double lo = std::max(den_support.lower, num_support.lower / z);
    const double hi = std::min(den_support.upper, num_support.upper / z);
    if (!(lo < hi)) return 0.0;
    auto integrand = [&](double y) {
        const double a = num(z * y);
        if (a == 0.0) return 0.0;
        const double b = den(y);
        return b == 0.0 ? 0.0 : y * a * b;
    };
    const auto q = integrate_positive(integrand, lo, hi, tol);
    if (!q.converged) throw ConvergenceError("ratio_pdf_oracle: tolerance not reached", q.value, q.error);
    return q.value;
}

double pdf_power_ratio_law(double z, double lambda, double theta, double upper_coeff) {
    if (!(z > 0.0) || std::isinf(z)) return 0.0;
    if (z < lambda) return std::pow(lambda, -2.0 / theta) * std::pow(z, 2.0 / theta - 1.0) / theta;
    return upper_coeff * std::pow(lambda, 2.0 / theta) * std::pow(z, -2.0 / theta - 1.0) / theta;
}

double pdf_line_over_point_law(double z, double lambda, double theta) {
    if (!(z > 0.0) || std::isinf(z)) return 0.0;
    const double w = std::pow(z / lambda, 1.0 / theta);
    double fw;
    if (w < 2.0) {
        fw = w - 32.0 * numerics::beta1(w * w / 4.0) / (pi * w * w * w);
    } else {
        fw = 2.0 / (w * w * w);
    }
    return std::max(fw, 0.0) * w / (theta * z);
}

namespace {

void require_other_topology(Topology t) {
    if (t == Topology::AttackerAtOrigin) {
        throw DomainError("pdf_ratio_topology: attacker-at-origin uses pdf_ratio_eav / pdf_ratio_jam");
    }
}

}  // namespace

double pdf_ratio_topology_oracle(Topology topology, AttackMode mode, double z, const SystemParams& p) {
    require_other_topology(topology);
    const DerivedConstants d = derive(p);
    const double R = p.R;
    const double th = p.theta;
    auto point = [R](double l) { return distance::pdf_disk_point(l, R); };
    auto line = [R](double l) { return distance::pdf_disk_line(l, R); };
    // Which links are disk-line distances in this topology.
    const bool su_line = false;
    const bool sa_line = topology == Topology::UserAtOrigin;
    const bool au_line = topology == Topology::SourceAtOrigin;

    const double k_num = d.kappa_su;
    const double k_den = mode == AttackMode::Eavesdrop ? d.kappa_sa : d.kappa_au;
    const bool den_line = mode == AttackMode::Eavesdrop ? sa_line : au_line;

    const std::function<double(double)> num_dist = su_line ? std::function<double(double)>(line) : point;
    const std::function<double(double)> den_dist = den_line ? std::function<double(double)>(line) : point;
    auto num = [&](double x) { return pdf_snr_from_distance(x, k_num, th, num_dist); };
    auto den = [&](double y) { return pdf_snr_from_distance(y, k_den, th, den_dist); };
    const Support sn{k_num / std::pow(su_line ? 2.0 * R : R, th), numerics::kInf};
    const Support sd{k_den / std::pow(den_line ? 2.0 * R : R, th), numerics::kInf};
    return ratio_pdf_oracle(num, sn, den, sd, z);
}

double pdf_ratio_topology(Topology topology, AttackMode mode, double z, const SystemParams& p) {
    require_other_topology(topology);
    const DerivedConstants d = derive(p);
    if (topology == Topology::SourceAtOrigin) {
        return mode == AttackMode::Eavesdrop ? pdf_power_ratio_law(z, d.lambda_e, p.theta)
                                             : pdf_line_over_point_law(z, d.lambda_j, p.theta);
    }
    if (mode == AttackMode::Eavesdrop) return pdf_ratio_topology_oracle(topology, mode, z, p);
    return pdf_power_ratio_law(z, d.lambda_j, p.theta);
}

}  // namespace plsec::snr
