#include "plsec/distance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plsec/numerics.hpp"

namespace plsec::distance {

using std::numbers::pi;

void DiskGeometry::validate() const {
    if (!(R > 0.0)) throw InvalidParameter("R", "must be > 0");
    if (!(D > 0.0)) throw InvalidParameter("D", "must be > 0");
    if (!(r > 0.0) || r > R * (1.0 + 1e-12)) throw InvalidParameter("r", "must lie in (0, R]");
}

DiskGeometry geometry(const SystemParams& p) { return {p.R, p.D, p.r}; }

double pdf_disk_line(double l, double R) {
    if (!(R > 0.0)) throw DomainError("pdf_disk_line: R must be > 0");
    if (!(l > 0.0) || l >= 2.0 * R) return 0.0;
    const double x = l * l / (4.0 * R * R);
    // I_{1-x}(3/2, 1/2) = 1 - I_x(1/2, 3/2), and B(1/2, 3/2) = pi/2.
    return 2.0 * l / (R * R) * (1.0 - 2.0 / pi * numerics::beta_incomplete(x, 0.5, 1.5));
}

double cdf_disk_line(double d, double R) {
    if (!(R > 0.0)) throw DomainError("cdf_disk_line: R must be > 0");
    if (!(d >= 0.0) || d > 2.0 * R * (1.0 + 1e-12)) {
        throw DomainError("cdf_disk_line: d must lie in [0, 2R]");
    }
    if (d >= 2.0 * R) return 1.0;
    const double x = d * d / (4.0 * R * R);
    const double v = 4.0 * x - 8.0 / pi *
                                   (x * numerics::beta_incomplete(x, 0.5, 1.5) -
                                    numerics::beta_incomplete(x, 1.5, 1.5));
    return std::clamp(v, 0.0, 1.0);
}

double partial_second_moment(double l, double R) {
    if (!(l > 0.0)) return 0.0;
    const double lc = std::min(l, 2.0 * R);
    const double x = lc * lc / (4.0 * R * R);
    return 8.0 * R * R * x * x - 16.0 * R * R / pi * numerics::beta1(x);
}

double pdf_su_truncated(double l, const DiskGeometry& geo) {
    const double D = geo.effective_D();
    if (!(l > 0.0) || l >= D) return 0.0;
    return pdf_disk_line(l, geo.R) / cdf_disk_line(D, geo.R);
}

double cdf_su_truncated(double l, const DiskGeometry& geo) {
    const double D = geo.effective_D();
    if (!(l > 0.0)) return 0.0;
    if (l >= D) return 1.0;
    return cdf_disk_line(l, geo.R) / cdf_disk_line(D, geo.R);
}

double pdf_disk_point(double l, double radius) {
    if (!(radius > 0.0)) throw DomainError("pdf_disk_point: radius must be > 0");
    if (!(l > 0.0) || l > radius) return 0.0;
    return 2.0 * l / (radius * radius);
}

namespace {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

Point draw(Rng& rng, double radius) {
    Point p;
    rng.point_in_disk(radius, p.x, p.y);
    return p;
}

double dist(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }
double norm(const Point& a) { return std::hypot(a.x, a.y); }

double line_distance(Rng& rng, double R) {
    const Point a = draw(rng, R);
    const Point b = draw(rng, R);
    return dist(a, b);
}

}  // namespace

DistanceSample sample_pair_distance(Rng& rng, const DiskGeometry& geo, Placement placement) {
    return sample_distances(rng, geo, Topology::AttackerAtOrigin, placement);
}

DistanceSample sample_distances(Rng& rng, const DiskGeometry& geo, Topology topology, Placement placement) {
    const double R = geo.R;
    DistanceSample s;
    if (topology == Topology::AttackerAtOrigin) {
        const double D = geo.effective_D();
        Point S;
        Point U;
        s.attempts = 0;
        do {
            S = draw(rng, R);
            U = draw(rng, R);
            ++s.attempts;
            s.d_su = dist(S, U);
        } while (s.d_su > D);
        if (placement == Placement::JointGeometry) {
            s.d_sa = norm(S);
            s.d_au = norm(U);
        } else {
            s.d_sa = norm(draw(rng, R));
            s.d_au = norm(draw(rng, R));
        }
        return s;
    }

    if (placement == Placement::JointGeometry) {
        const Point a = draw(rng, R);
        const Point b = draw(rng, R);
        if (topology == Topology::SourceAtOrigin) {
            // a = U, b = A
            s.d_su = norm(a);
            s.d_sa = norm(b);
            s.d_au = dist(a, b);
        } else {
            // a = S, b = A
            s.d_su = norm(a);
            s.d_sa = dist(a, b);
            s.d_au = norm(b);
        }
        return s;
    }

    if (topology == Topology::SourceAtOrigin) {
        s.d_su = norm(draw(rng, R));
        s.d_sa = norm(draw(rng, R));
        s.d_au = line_distance(rng, R);
    } else {
        s.d_su = norm(draw(rng, R));
        s.d_sa = line_distance(rng, R);
        s.d_au = norm(draw(rng, R));
    }
    return s;
}

}  // namespace plsec::distance
