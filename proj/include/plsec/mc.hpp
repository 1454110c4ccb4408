#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plsec/design.hpp"
#include "plsec/distance.hpp"
#include "plsec/model.hpp"

namespace plsec::mc {

enum class ExecPolicy { Serial, Parallel };

struct McConfig {
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    int bins = 200;
    int workers = 8;  // number of shards; also the OpenMP thread cap
    ExecPolicy policy = ExecPolicy::Parallel;
    Topology topology = Topology::AttackerAtOrigin;
    distance::Placement placement = distance::Placement::IndependentLinks;

    void validate() const;
    bool operator==(const McConfig&) const = default;
};

struct Histogram {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> density;  // count / (samples * width)

    int bins() const { return static_cast<int>(density.size()); }
    double width() const { return density.empty() ? 0.0 : (hi - lo) / density.size(); }
    double center(int i) const { return lo + (i + 0.5) * width(); }
};

struct McReport {
    double estimate = 0.0;
    double std_err = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    int workers = 0;

    Histogram histogram;
    std::vector<double> analytic_center;   // analytic density at bin centres
    std::vector<double> analytic_average;  // analytic mass of each bin / width
    double rmse = -1.0;                    // histogram vs analytic_average
    double rmse_center = -1.0;             // histogram vs analytic_center

    double acceptance = 1.0;  // fraction of S-U draws kept by the D truncation

    // Sop runs: positive-secrecy-capacity subset (in-range eavesdropper, or
    // all jamming trials) with exact and high-SNR outage counts.
    std::uint64_t positive_sc = 0;
    std::uint64_t positive_sc_exact_outage = 0;
    std::uint64_t positive_sc_asym_outage = 0;
    std::uint64_t asym_outage = 0;  // high-SNR outage over all trials

    // Fading runs.
    std::uint64_t infeasible = 0;
    std::uint64_t unconstrained = 0;
    std::vector<double> point_mass_locations;
    std::vector<double> point_mass_masses;
};

McReport mc_sop(const SystemParams& p, AttackMode mode, const McConfig& cfg);

enum class Quantity { DSu, DSa, DAu, LogRatioEav, Log1pRatioJam, GammaSuDb, GammaSaDb, GammaAuDb };

std::string to_string(Quantity q);
Quantity parse_quantity(const std::string& s);

/// Analytic density of `q` for the given topology.
double analytic_pdf(Quantity q, double x, const SystemParams& p, Topology topology);

McReport mc_pdf(Quantity q, const SystemParams& p, const McConfig& cfg);

struct FadingMeans {
    double su = 1.0;
    double sa = 1.0;
    double au = 1.0;
    bool degenerate = false;  // use the means themselves, no randomness
};

/// Exponential power gains scale a_SU, a_SA, a_AU per trial; D_th solved per
/// trial. Histogram over feasible trials (including D_th = 2R); infeasible
/// trials counted separately.
McReport mc_fading_dth(const SystemParams& p, const design::DesignTarget& target, const FadingMeans& means,
                       const McConfig& cfg);

}  // namespace plsec::mc
