#include "plsec/mc.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plsec/numerics.hpp"
#include "plsec/snr.hpp"

namespace plsec::mc {

using std::numbers::ln10;
using std::numbers::ln2;

void McConfig::validate() const {
    if (trials < 1) throw InvalidParameter("trials", "must be >= 1");
    if (bins < 2) throw InvalidParameter("bins", "must be >= 2");
    if (workers < 1) throw InvalidParameter("workers", "must be >= 1");
}

namespace {

std::uint64_t shard_trials(const McConfig& cfg, int shard) {
    const auto w = static_cast<std::uint64_t>(cfg.workers);
    return cfg.trials / w + (static_cast<std::uint64_t>(shard) < cfg.trials % w ? 1 : 0);
}

// Runs body(shard, n, rng, out) for every shard; outputs stay in shard order.
template <class Out, class Body>
std::vector<Out> run_shards(const McConfig& cfg, Body body) {
    std::vector<Out> out(static_cast<std::size_t>(cfg.workers));
    if (cfg.policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static) num_threads(cfg.workers)
        for (int s = 0; s < cfg.workers; ++s) {
            Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(s)));
            body(s, shard_trials(cfg, s), rng, out[static_cast<std::size_t>(s)]);
        }
    } else {
        for (int s = 0; s < cfg.workers; ++s) {
            Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(s)));
            body(s, shard_trials(cfg, s), rng, out[static_cast<std::size_t>(s)]);
        }
    }
    return out;
}

struct SopCounts {
    std::uint64_t outage = 0;
    std::uint64_t asym_outage = 0;
    std::uint64_t attempts = 0;
    std::uint64_t positive = 0;
    std::uint64_t positive_exact = 0;
    std::uint64_t positive_asym = 0;
};

McReport base_report(const McConfig& cfg) {
    McReport r;
    r.seed = cfg.seed;
    r.trials = cfg.trials;
    r.workers = cfg.workers;
    return r;
}

// Fills histogram, or a single point mass when every sample is identical.
void build_histogram(const std::vector<double>& xs, int bins, double total, McReport& r) {
    if (xs.empty()) return;
    const auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
    if (*mn == *mx) {
        r.point_mass_locations.push_back(*mn);
        r.point_mass_masses.push_back(static_cast<double>(xs.size()) / total);
        return;
    }
    Histogram& h = r.histogram;
    h.lo = *mn;
    h.hi = *mx;
    h.density.assign(static_cast<std::size_t>(bins), 0.0);
    const double w = (h.hi - h.lo) / bins;
    for (double x : xs) {
        auto i = static_cast<int>((x - h.lo) / w);
        i = std::clamp(i, 0, bins - 1);
        h.density[static_cast<std::size_t>(i)] += 1.0;
    }
    for (auto& c : h.density) c /= total * w;
}

void compare(const std::function<double(double)>& f, McReport& r) {
    const Histogram& h = r.histogram;
    const int n = h.bins();
    if (n == 0) return;
    r.analytic_center.resize(static_cast<std::size_t>(n));
    r.analytic_average.resize(static_cast<std::size_t>(n));
    numerics::Tolerance tol{1e-8, 1e-12, 2000};
    double s_avg = 0.0;
    double s_ctr = 0.0;
    const double w = h.width();
    for (int i = 0; i < n; ++i) {
        const double a = h.lo + i * w;
        const double b = (i + 1 == n) ? h.hi : a + w;
        const double avg = numerics::integrate(f, a, b, tol).value / (b - a);
        const double ctr = f(h.center(i));
        r.analytic_average[static_cast<std::size_t>(i)] = avg;
        r.analytic_center[static_cast<std::size_t>(i)] = ctr;
        const double hv = h.density[static_cast<std::size_t>(i)];
        s_avg += (hv - avg) * (hv - avg);
        s_ctr += (hv - ctr) * (hv - ctr);
    }
    r.rmse = std::sqrt(s_avg / n);
    r.rmse_center = std::sqrt(s_ctr / n);
}

bool in_range(const distance::DistanceSample& s, const SystemParams& p, Topology topology) {
    return topology != Topology::AttackerAtOrigin || s.d_sa <= p.r;
}

}  // namespace

McReport mc_sop(const SystemParams& p, AttackMode mode, const McConfig& cfg) {
    cfg.validate();
    const DerivedConstants d = derive(p);
    const auto geo = distance::geometry(p);
    const double c = p.c_st;
    const double th = p.theta;

    auto shards = run_shards<SopCounts>(cfg, [&](int, std::uint64_t n, Rng& rng, SopCounts& out) {
        for (std::uint64_t i = 0; i < n; ++i) {
            const auto s = distance::sample_distances(rng, geo, cfg.topology, cfg.placement);
            out.attempts += static_cast<std::uint64_t>(s.attempts);
            const double g_su = d.kappa_su / std::pow(s.d_su, th);
            const double cap_u = std::log2(1.0 + g_su);
            if (mode == AttackMode::Eavesdrop) {
                if (in_range(s, p, cfg.topology)) {
                    const double g_sa = d.kappa_sa / std::pow(s.d_sa, th);
                    const double sc = std::max(cap_u - std::log2(1.0 + g_sa), 0.0);
                    const bool exact = sc < c;
                    const bool asym = std::log2(g_su / g_sa) < c;
                    out.outage += exact;
                    out.asym_outage += asym;
                    if (sc > 0.0) {
                        ++out.positive;
                        out.positive_exact += exact;
                        out.positive_asym += asym;
                    }
                } else {
                    const bool o = cap_u < c;
                    out.outage += o;
                    out.asym_outage += o;
                }
            } else {
                const double g_au = d.kappa_au / std::pow(s.d_au, th);
                const double sc = std::log2(1.0 + g_su / (1.0 + g_au));
                const bool exact = sc < c;
                const bool asym = std::log2(1.0 + g_su / g_au) < c;
                out.outage += exact;
                out.asym_outage += asym;
                if (sc > 0.0) {
                    ++out.positive;
                    out.positive_exact += exact;
                    out.positive_asym += asym;
                }
            }
        }
    });

    SopCounts tot;
    for (const auto& s : shards) {
        tot.outage += s.outage;
        tot.asym_outage += s.asym_outage;
        tot.attempts += s.attempts;
        tot.positive += s.positive;
        tot.positive_exact += s.positive_exact;
        tot.positive_asym += s.positive_asym;
    }
    McReport r = base_report(cfg);
    const double n = static_cast<double>(cfg.trials);
    r.estimate = static_cast<double>(tot.outage) / n;
    r.std_err = std::sqrt(r.estimate * (1.0 - r.estimate) / n);
    r.acceptance = n / static_cast<double>(tot.attempts);
    r.asym_outage = tot.asym_outage;
    r.positive_sc = tot.positive;
    r.positive_sc_exact_outage = tot.positive_exact;
    r.positive_sc_asym_outage = tot.positive_asym;
    return r;
}

std::string to_string(Quantity q) {
    switch (q) {
        case Quantity::DSu: return "d_su";
        case Quantity::DSa: return "d_sa";
        case Quantity::DAu: return "d_au";
        case Quantity::LogRatioEav: return "log-ratio-eav";
        case Quantity::Log1pRatioJam: return "log1p-ratio-jam";
        case Quantity::GammaSuDb: return "snr-su-db";
        case Quantity::GammaSaDb: return "snr-sa-db";
        case Quantity::GammaAuDb: return "snr-au-db";
    }
    return "?";
}

Quantity parse_quantity(const std::string& s) {
    for (auto q : {Quantity::DSu, Quantity::DSa, Quantity::DAu, Quantity::LogRatioEav, Quantity::Log1pRatioJam,
                   Quantity::GammaSuDb, Quantity::GammaSaDb, Quantity::GammaAuDb}) {
        if (to_string(q) == s) return q;
    }
    throw InvalidParameter("quantity", "unknown quantity '" + s + "'");
}

namespace {

// Distance law of each link for a topology other than attacker-at-origin.
double other_topology_distance_pdf(Quantity link, double l, double R, Topology t) {
    const bool line = (link == Quantity::DSa && t == Topology::UserAtOrigin) ||
                      (link == Quantity::DAu && t == Topology::SourceAtOrigin);
    return line ? distance::pdf_disk_line(l, R) : distance::pdf_disk_point(l, R);
}

double db_density(double v, const std::function<double(double)>& f_lin) {
    const double g = std::pow(10.0, v / 10.0);
    return f_lin(g) * g * ln10 / 10.0;
}

}  // namespace

double analytic_pdf(Quantity q, double x, const SystemParams& p, Topology topology) {
    const DerivedConstants d = derive(p);
    if (topology == Topology::AttackerAtOrigin) {
        const auto geo = distance::geometry(p);
        switch (q) {
            case Quantity::DSu: return distance::pdf_su_truncated(x, geo);
            case Quantity::DSa: return distance::pdf_disk_point(x, p.r);
            case Quantity::DAu: return distance::pdf_disk_point(x, p.R);
            case Quantity::LogRatioEav: return snr::pdf_log_ratio_eav(x, p, d);
            case Quantity::Log1pRatioJam: return snr::pdf_log1p_ratio_jam(x, p, d);
            case Quantity::GammaSuDb: return db_density(x, [&](double g) { return snr::pdf_gamma_su(g, p, d); });
            case Quantity::GammaSaDb:
                return db_density(x, [&](double g) { return snr::pdf_gamma_sa(g, p, d) / d.alpha; });
            case Quantity::GammaAuDb: return db_density(x, [&](double g) { return snr::pdf_gamma_au(g, p, d); });
        }
        return 0.0;
    }
    const double R = p.R;
    switch (q) {
        case Quantity::DSu:
        case Quantity::DSa:
        case Quantity::DAu: return other_topology_distance_pdf(q, x, R, topology);
        case Quantity::LogRatioEav: {
            const double z = std::exp2(x);
            // The user-origin eavesdropping law equals the line-over-point law.
            const double f = topology == Topology::SourceAtOrigin ? snr::pdf_power_ratio_law(z, d.lambda_e, p.theta)
                                                                  : snr::pdf_line_over_point_law(z, d.lambda_e, p.theta);
            return ln2 * z * f;
        }
        case Quantity::Log1pRatioJam: {
            if (!(x > 0.0)) return 0.0;
            const double z1 = std::exp2(x);
            return ln2 * z1 * snr::pdf_ratio_topology(topology, AttackMode::Jam, z1 - 1.0, p);
        }
        case Quantity::GammaSuDb:
        case Quantity::GammaSaDb:
        case Quantity::GammaAuDb: {
            const Quantity link = q == Quantity::GammaSuDb   ? Quantity::DSu
                                  : q == Quantity::GammaSaDb ? Quantity::DSa
                                                             : Quantity::DAu;
            const double kappa = q == Quantity::GammaSuDb ? d.kappa_su : q == Quantity::GammaSaDb ? d.kappa_sa : d.kappa_au;
            return db_density(x, [&](double g) {
                return snr::pdf_snr_from_distance(
                    g, kappa, p.theta, [&](double l) { return other_topology_distance_pdf(link, l, R, topology); });
            });
        }
    }
    return 0.0;
}

McReport mc_pdf(Quantity q, const SystemParams& p, const McConfig& cfg) {
    cfg.validate();
    const DerivedConstants d = derive(p);
    const auto geo = distance::geometry(p);
    const double th = p.theta;
    // Quantities tied to the eavesdropping link are conditioned on the
    // eavesdropper being in range.
    const bool conditioned = q == Quantity::DSa || q == Quantity::LogRatioEav || q == Quantity::GammaSaDb;

    struct Out {
        std::vector<double> xs;
        std::uint64_t attempts = 0;
    };
    auto shards = run_shards<Out>(cfg, [&](int, std::uint64_t n, Rng& rng, Out& out) {
        out.xs.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i) {
            distance::DistanceSample s;
            do {
                s = distance::sample_distances(rng, geo, cfg.topology, cfg.placement);
                out.attempts += static_cast<std::uint64_t>(s.attempts);
            } while (conditioned && !in_range(s, p, cfg.topology));
            double v = 0.0;
            switch (q) {
                case Quantity::DSu: v = s.d_su; break;
                case Quantity::DSa: v = s.d_sa; break;
                case Quantity::DAu: v = s.d_au; break;
                case Quantity::LogRatioEav: v = std::log2(d.lambda_e) + th * std::log2(s.d_sa / s.d_su); break;
                case Quantity::Log1pRatioJam: v = std::log2(1.0 + d.lambda_j * std::pow(s.d_au / s.d_su, th)); break;
                case Quantity::GammaSuDb: v = 10.0 * std::log10(d.kappa_su / std::pow(s.d_su, th)); break;
                case Quantity::GammaSaDb: v = 10.0 * std::log10(d.kappa_sa / std::pow(s.d_sa, th)); break;
                case Quantity::GammaAuDb: v = 10.0 * std::log10(d.kappa_au / std::pow(s.d_au, th)); break;
            }
            out.xs.push_back(v);
        }
    });

    std::vector<double> xs;
    xs.reserve(cfg.trials);
    std::uint64_t attempts = 0;
    for (auto& s : shards) {
        xs.insert(xs.end(), s.xs.begin(), s.xs.end());
        attempts += s.attempts;
    }
    McReport r = base_report(cfg);
    const double n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    r.estimate = mean;
    r.std_err = n > 1 ? std::sqrt(var / (n - 1) / n) : 0.0;
    r.acceptance = n / static_cast<double>(attempts);
    build_histogram(xs, cfg.bins, n, r);
    compare([&](double x) { return analytic_pdf(q, x, p, cfg.topology); }, r);
    return r;
}

McReport mc_fading_dth(const SystemParams& p, const design::DesignTarget& target, const FadingMeans& means,
                       const McConfig& cfg) {
    cfg.validate();
    target.validate();
    p.validate();
    if (!(means.su > 0.0 && means.sa > 0.0 && means.au > 0.0)) {
        throw InvalidParameter("fading_means", "mean gains must be > 0");
    }
    struct Out {
        std::vector<double> solved;
        std::uint64_t infeasible = 0;
        std::uint64_t unconstrained = 0;
    };
    auto shards = run_shards<Out>(cfg, [&](int, std::uint64_t n, Rng& rng, Out& out) {
        for (std::uint64_t i = 0; i < n; ++i) {
            SystemParams q = p;
            const double g_su = means.degenerate ? means.su : rng.exponential(means.su);
            const double g_sa = means.degenerate ? means.sa : rng.exponential(means.sa);
            const double g_au = means.degenerate ? means.au : rng.exponential(means.au);
            q.a_su *= g_su;
            q.a_sa *= g_sa;
            q.a_au *= g_au;
            const auto sol = design::solve_d_th(q, target);
            switch (sol.status) {
                case design::Status::Solved: out.solved.push_back(sol.value); break;
                case design::Status::Unconstrained: ++out.unconstrained; break;
                case design::Status::Infeasible: ++out.infeasible; break;
            }
        }
    });
    std::vector<double> xs;
    McReport r = base_report(cfg);
    for (auto& s : shards) {
        xs.insert(xs.end(), s.solved.begin(), s.solved.end());
        r.infeasible += s.infeasible;
        r.unconstrained += s.unconstrained;
    }
    const double total = static_cast<double>(cfg.trials);
    if (!xs.empty()) {
        double mean = 0.0;
        for (double x : xs) mean += x;
        mean /= static_cast<double>(xs.size());
        double var = 0.0;
        for (double x : xs) var += (x - mean) * (x - mean);
        r.estimate = mean;
        r.std_err = xs.size() > 1 ? std::sqrt(var / (xs.size() - 1.0) / xs.size()) : 0.0;
    }
    build_histogram(xs, cfg.bins, total, r);
    if (r.unconstrained > 0) {
        r.point_mass_locations.push_back(2.0 * p.R);
        r.point_mass_masses.push_back(static_cast<double>(r.unconstrained) / total);
    }
    return r;
}

}  // namespace plsec::mc
