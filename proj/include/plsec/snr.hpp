#pragma once

#include <functional>
#include <vector>

#include "plsec/model.hpp"
#include "plsec/numerics.hpp"

namespace plsec::snr {

struct PointMass {
    double location = 0.0;
    double mass = 0.0;
};

/// Continuous density plus optional atoms.
struct MixedDensity {
    std::function<double(double)> density;
    double lower = 0.0;               // support of the continuous part
    double upper = numerics::kInf;
    std::vector<PointMass> point_masses;

    /// Integral of the continuous part plus the atom masses.
    double total_mass(const numerics::Tolerance& tol = {}) const;
};

// SNR densities ---------------------------------------------------------------

/// Density of gamma_SU with d_SU following the truncated disk-line law.
double pdf_gamma_su(double x, const SystemParams& p, const DerivedConstants& d);

/// Continuous part of the gamma_SA law (integrates to alpha).
double pdf_gamma_sa(double y, const SystemParams& p, const DerivedConstants& d);

/// gamma_SA law with the (1 - alpha) atom at 0 for an out-of-range eavesdropper.
MixedDensity gamma_sa_density(const SystemParams& p, const DerivedConstants& d);

double pdf_gamma_au(double y, const SystemParams& p, const DerivedConstants& d);

/// Density of kappa / l^theta when l has density `distance_pdf`.
double pdf_snr_from_distance(double x, double kappa, double theta,
                             const std::function<double(double)>& distance_pdf);

// Ratio densities (attacker at origin) -------------------------------------------

/// Breakpoint lambda_E r^theta / D^theta of the eavesdropping ratio density.
double ratio_breakpoint_eav(const SystemParams& p, const DerivedConstants& d);
/// Breakpoint lambda_J R^theta / D^theta of the jamming ratio density.
double ratio_breakpoint_jam(const SystemParams& p, const DerivedConstants& d);

/// gamma_SU / gamma_SA given the eavesdropper is in range.
double pdf_ratio_eav(double z, const SystemParams& p, const DerivedConstants& d);
double cdf_ratio_eav(double z, const SystemParams& p, const DerivedConstants& d);

/// gamma_SU / gamma_AU.
double pdf_ratio_jam(double z, const SystemParams& p, const DerivedConstants& d);
double cdf_ratio_jam(double z, const SystemParams& p, const DerivedConstants& d);

/// Density of log2(z) for the eavesdropping ratio.
double pdf_log_ratio_eav(double c, const SystemParams& p, const DerivedConstants& d);
/// Density of log2(1 + z) for the jamming ratio; 0 for c <= 0.
double pdf_log1p_ratio_jam(double c, const SystemParams& p, const DerivedConstants& d);

// Generic oracle -----------------------------------------------------------------

struct Support {
    double lower = 0.0;
    double upper = numerics::kInf;
};

/// f_Z(z) = \int y f_num(z y) f_den(y) dy over the intersection of the two
/// supports. Integrates in log y; throws ConvergenceError on failure.
double ratio_pdf_oracle(const std::function<double(double)>& num, Support num_support,
                        const std::function<double(double)>& den, Support den_support, double z,
                        const numerics::Tolerance& tol = {1e-10, 1e-15, 4000});

// Other topologies (no truncation, no eavesdropping zone) ------------------------

/// Two-branch power law lambda^{-2/theta} z^{2/theta-1}/theta below lambda and
/// upper_coeff * lambda^{2/theta} z^{-2/theta-1}/theta above. upper_coeff = 1
/// is the law of lambda (d1/d2)^theta for iid disk-point distances.
double pdf_power_ratio_law(double z, double lambda, double theta, double upper_coeff = 1.0);

/// Law of lambda (d_line / d_point)^theta with a disk-line numerator distance
/// and an independent disk-point denominator distance, both on the same disk.
double pdf_line_over_point_law(double z, double lambda, double theta);

/// Ratio density for SourceAtOrigin / UserAtOrigin. Throws DomainError for
/// AttackerAtOrigin. The user-origin eavesdropping case is evaluated by the
/// quadrature oracle.
double pdf_ratio_topology(Topology topology, AttackMode mode, double z, const SystemParams& p);

/// Same quantity computed only by the quadrature oracle from the SNR laws
/// induced by each topology's distance distributions.
double pdf_ratio_topology_oracle(Topology topology, AttackMode mode, double z, const SystemParams& p);

}  // namespace plsec::snr
