#pragma once

// Reference tools for the tests. Deliberately independent of the library's
// adaptive quadrature and root finder.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

// 20-point Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton
// iteration on P_20.
struct GaussLegendre20 {
    std::array<double, 20> x{};
    std::array<double, 20> w{};

    GaussLegendre20() {
        constexpr int n = 20;
        for (int i = 0; i < n; ++i) {
            double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p1 = 1.0;
                double p2 = 0.0;
                for (int j = 1; j <= n; ++j) {
                    const double p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
                }
                pp = n * (z * p1 - p2) / (z * z - 1.0);
                const double dz = p1 / pp;
                z -= dz;
                if (std::fabs(dz) < 1e-16) break;
            }
            x[static_cast<std::size_t>(i)] = z;
            w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
        }
    }
};

inline const GaussLegendre20& gl20() {
    static const GaussLegendre20 g;
    return g;
}

/// Composite 20-point Gauss-Legendre with `panels` equal panels.
inline double gauss(const std::function<double(double)>& f, double a, double b, int panels = 400) {
    const auto& g = gl20();
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double c = a + (k + 0.5) * h;
        for (std::size_t i = 0; i < 20; ++i) sum += g.w[i] * f(c + 0.5 * h * g.x[i]);
    }
    return 0.5 * h * sum;
}

/// Composite rule on geometrically graded panels towards `a`; for integrands
/// with an integrable singularity at the left end.
inline double gauss_graded(const std::function<double(double)>& f, double a, double b, int levels = 60,
                           int panels = 40) {
    double sum = 0.0;
    double hi = b;
    for (int l = 0; l < levels; ++l) {
        const double lo = a + (hi - a) * 0.5;
        sum += gauss(f, lo, hi, panels);
        hi = lo;
    }
    return sum;
}

/// \int_a^\infty f via y = a + t / (1 - t) on [0, 1); panels are graded
/// towards t = 1 where power-law tails leave an integrable singularity.
inline double gauss_tail(const std::function<double(double)>& f, double a, int panels = 2000) {
    auto g = [&](double t) {
        const double s = 1.0 - t;
        if (s <= 0.0) return 0.0;
        const double y = a + t / s;
        const double v = f(y);
        return v == 0.0 ? 0.0 : v / (s * s);
    };
    return gauss(g, 0.0, 0.5, panels) + gauss_graded([&](double s) { return g(1.0 - s); }, 0.0, 0.5, 60, 40);
}

/// B_x(p, q) by quadrature after t = x u^{1/p}, which removes the t^{p-1}
/// singularity at 0.
inline double beta_incomplete(double x, double p, double q) {
    if (x <= 0.0) return 0.0;
    // \int_0^x t^{p-1}(1-t)^{q-1} dt with t = x v^{1/p}: x^p/p \int_0^1 (1 - x v^{1/p})^{q-1} dv
    auto g = [&](double v) { return std::pow(1.0 - x * std::pow(v, 1.0 / p), q - 1.0); };
    const double core = gauss_graded(g, 0.0, 0.5) + gauss_graded([&](double v) { return g(1.0 - v); }, 0.0, 0.5);
    return std::pow(x, p) / p * core;
}

/// Largest grid point with g <= 0 on an increasing g (linear scan).
inline double grid_scan_last_nonpositive(const std::function<double(double)>& g, double lo, double hi, double step) {
    double last = lo;
    for (double x = lo; x <= hi + 1e-12; x += step) {
        if (g(x) <= 0.0) last = x;
    }
    return last;
}

/// Two-sample style Kolmogorov-Smirnov distance of a sample against a CDF.
inline double ks_distance(std::vector<double> xs, const std::function<double(double)>& cdf) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double F = cdf(xs[i]);
        d = std::max({d, std::fabs(F - i / n), std::fabs((i + 1) / n - F)});
    }
    return d;
}

}  // namespace oracle
