#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "plsec/distance.hpp"

using namespace plsec;
using namespace plsec::distance;

namespace {
bool rel_close(double a, double b, double tol) { return std::fabs(a - b) <= tol * std::max(std::fabs(b), 1e-300); }
}  // namespace

TEST_CASE("disk line density values") {
    CHECK(pdf_disk_line(2.0, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(pdf_disk_line(200.0, 100.0) == doctest::Approx(0.0));
    CHECK(rel_close(pdf_disk_line(1.0, 1.0), 0.7820044379115413, 1e-12));
    CHECK(pdf_disk_line(-1.0, 1.0) == 0.0);
    CHECK(pdf_disk_line(2.5, 1.0) == 0.0);
    CHECK(pdf_disk_line(0.0, 1.0) == 0.0);
}

TEST_CASE("disk line density normalizes") {
    for (double R : {1.0, 100.0, 150.0}) {
        const double mass = oracle::gauss([R](double l) { return pdf_disk_line(l, R); }, 0.0, 2.0 * R);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("disk line cdf") {
    CHECK(cdf_disk_line(0.0, 100.0) == 0.0);
    CHECK(cdf_disk_line(200.0, 100.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rel_close(cdf_disk_line(100.0, 100.0), 0.586503328433656, 1e-11));
    CHECK(rel_close(cdf_disk_line(60.0, 150.0), 0.13294667705309865, 1e-11));
    CHECK_THROWS_AS(cdf_disk_line(-1.0, 100.0), DomainError);
    CHECK_THROWS_AS(cdf_disk_line(200.5, 100.0), DomainError);

    const double quad = oracle::gauss([](double l) { return pdf_disk_line(l, 100.0); }, 0.0, 100.0);
    CHECK(std::fabs(cdf_disk_line(100.0, 100.0) - quad) < 1e-9);
}

TEST_CASE("disk line cdf equals the integral of the density at random points") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double R = 10.0 + 190.0 * u(gen);
        const double d = 2.0 * R * u(gen);
        const double quad = oracle::gauss([R](double l) { return pdf_disk_line(l, R); }, 0.0, d, 200);
        CHECK(std::fabs(cdf_disk_line(d, R) - quad) < 1e-8);
    }
}

TEST_CASE("disk line cdf is monotone") {
    double prev = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double v = cdf_disk_line(0.2 * i, 100.0);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("partial second moment") {
    const double R = 100.0;
    for (double l : {10.0, 77.0, 150.0, 200.0}) {
        const double quad = oracle::gauss([R](double s) { return s * s * pdf_disk_line(s, R); }, 0.0, l);
        CHECK(rel_close(partial_second_moment(l, R), quad, 1e-9));
    }
    // Mean square distance between two uniform points is R^2.
    CHECK(rel_close(partial_second_moment(2.0 * R, R), R * R, 1e-12));
}

TEST_CASE("truncated S-U density") {
    DiskGeometry geo{100.0, 100.0, 100.0};
    CHECK(rel_close(pdf_su_truncated(50.0, geo), pdf_disk_line(50.0, 100.0) / cdf_disk_line(100.0, 100.0), 1e-14));
    CHECK(rel_close(pdf_su_truncated(50.0, geo), 0.011680029920781304, 1e-11));
    CHECK(pdf_su_truncated(100.5, geo) == 0.0);
    CHECK(pdf_su_truncated(-1.0, geo) == 0.0);

    for (double D : {20.0, 100.0, 180.0}) {
        DiskGeometry g{100.0, D, 50.0};
        const double mass = oracle::gauss([&](double l) { return pdf_su_truncated(l, g); }, 0.0, D);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(cdf_su_truncated(D, g) == doctest::Approx(1.0).epsilon(1e-14));
    }

    DiskGeometry full{100.0, 200.0, 100.0};
    for (double l : {1.0, 33.0, 99.0, 150.0, 199.0}) {
        CHECK(pdf_su_truncated(l, full) == pdf_disk_line(l, 100.0));
    }
}

TEST_CASE("disk point density") {
    CHECK(pdf_disk_point(50.0, 100.0) == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(pdf_disk_point(101.0, 100.0) == 0.0);
    CHECK(pdf_disk_point(-1.0, 100.0) == 0.0);
    const double mass = oracle::gauss([](double l) { return pdf_disk_point(l, 100.0); }, 0.0, 100.0);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("geometry validation") {
    CHECK_THROWS_AS((DiskGeometry{100.0, 0.0, 50.0}).validate(), InvalidParameter);
    CHECK_THROWS_AS((DiskGeometry{100.0, 100.0, 150.0}).validate(), InvalidParameter);
    CHECK((DiskGeometry{100.0, 300.0, 50.0}).effective_D() == 200.0);
}

TEST_CASE("sampler bounds and distribution") {
    DiskGeometry geo{100.0, 120.0, 100.0};
    Rng rng(5);
    const int n = 1'000'000;
    std::vector<double> d_su;
    d_su.reserve(n);
    bool in_bounds = true;
    for (int i = 0; i < n; ++i) {
        const auto s = sample_pair_distance(rng, geo);
        in_bounds = in_bounds && s.d_su <= 120.0 && s.d_sa <= 100.0 && s.d_au <= 100.0 && s.attempts >= 1;
        d_su.push_back(s.d_su);
    }
    CHECK(in_bounds);
    const double ks = oracle::ks_distance(d_su, [&](double d) { return cdf_su_truncated(d, geo); });
    CHECK(ks < 0.005);
}

TEST_CASE("sampler determinism") {
    DiskGeometry geo{100.0, 60.0, 100.0};
    for (auto placement : {Placement::IndependentLinks, Placement::JointGeometry}) {
        Rng a(42);
        Rng b(42);
        for (int i = 0; i < 1000; ++i) {
            const auto x = sample_pair_distance(a, geo, placement);
            const auto y = sample_pair_distance(b, geo, placement);
            CHECK(x.d_su == y.d_su);
            CHECK(x.d_sa == y.d_sa);
            CHECK(x.d_au == y.d_au);
            CHECK(x.attempts == y.attempts);
        }
    }
}

TEST_CASE("topology samplers follow their distance laws") {
    DiskGeometry geo{100.0, 200.0, 100.0};
    const int n = 200'000;
    auto point_cdf = [](double l) { return std::min(l * l / 1e4, 1.0); };
    auto line_cdf = [](double l) { return cdf_disk_line(std::min(l, 200.0), 100.0); };
    for (auto placement : {Placement::IndependentLinks, Placement::JointGeometry}) {
        Rng rng(9);
        std::vector<double> su, sa, au;
        for (int i = 0; i < n; ++i) {
            const auto s = sample_distances(rng, geo, Topology::SourceAtOrigin, placement);
            su.push_back(s.d_su);
            sa.push_back(s.d_sa);
            au.push_back(s.d_au);
        }
        CHECK(oracle::ks_distance(su, point_cdf) < 0.006);
        CHECK(oracle::ks_distance(sa, point_cdf) < 0.006);
        CHECK(oracle::ks_distance(au, line_cdf) < 0.006);
    }
    Rng rng(10);
    std::vector<double> sa;
    for (int i = 0; i < n; ++i) sa.push_back(sample_distances(rng, geo, Topology::UserAtOrigin).d_sa);
    CHECK(oracle::ks_distance(sa, line_cdf) < 0.006);
}
