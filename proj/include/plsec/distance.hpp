#pragma once

#include "plsec/model.hpp"
#include "plsec/rng.hpp"

namespace plsec::distance {

struct DiskGeometry {
    double R = 100.0;
    double D = 200.0;  // values >= 2R mean no truncation
    double r = 100.0;

    void validate() const;
    double effective_D() const { return D < 2.0 * R ? D : 2.0 * R; }
};

DiskGeometry geometry(const SystemParams& p);

/// Density of the distance between two uniform points in a disk of radius R.
double pdf_disk_line(double l, double R);

/// CDF of the same law. Domain error outside [0, 2R].
double cdf_disk_line(double d, double R);

/// \int_0^l s^2 pdf_disk_line(s, R) ds, for l in [0, 2R].
double partial_second_moment(double l, double R);

/// S-U distance density conditioned on d_SU < D.
double pdf_su_truncated(double l, const DiskGeometry& geo);
double cdf_su_truncated(double l, const DiskGeometry& geo);

/// Density of a uniform point's distance from the disk centre.
double pdf_disk_point(double l, double radius);

struct DistanceSample {
    double d_su = 0.0;
    double d_sa = 0.0;
    double d_au = 0.0;
    int attempts = 1;  // S-U draws needed to satisfy d_su <= D
};

enum class Placement {
    // Each link drawn from its own law (S-U pair with rejection, fresh points
    // for the attacker links). Matches the analytic model.
    IndependentLinks,
    // One realisation of S, U (and A where it is not at the origin); all three
    // distances measured on it.
    JointGeometry,
};

/// Attacker at the origin, S and U uniform in the R-disk, pair resampled
/// until d_su <= D.
DistanceSample sample_pair_distance(Rng& rng, const DiskGeometry& geo,
                                    Placement placement = Placement::IndependentLinks);

/// Topology-aware sampler. For SourceAtOrigin / UserAtOrigin no truncation
/// is applied.
DistanceSample sample_distances(Rng& rng, const DiskGeometry& geo, Topology topology,
                                Placement placement = Placement::IndependentLinks);

}  // namespace plsec::distance
