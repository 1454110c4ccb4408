#include "plsec/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace plsec::numerics {

void Tolerance::validate() const {
    if (!(rel >= 0.0) || !(abs >= 0.0)) throw DomainError("tolerance: rel and abs must be >= 0");
    if (rel == 0.0 && abs == 0.0) throw DomainError("tolerance: rel or abs must be positive");
    if (max_subdivisions < 1) throw DomainError("tolerance: max_subdivisions must be >= 1");
}

// ---------------------------------------------------------------------------
// Beta family
// ---------------------------------------------------------------------------

namespace {

void check_shape(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0)) {
        throw DomainError("beta: shape parameters must be positive (p=" + std::to_string(p) +
                          ", q=" + std::to_string(q) + ")");
    }
}

void check_unit(double x, const char* who) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError(std::string(who) + ": argument must lie in [0, 1], got " + std::to_string(x));
    }
}

double log_beta(double p, double q) {
    // tgamma is reentrant, lgamma touches signgam.
    if (p + q < 150.0) return std::log(std::tgamma(p) * std::tgamma(q) / std::tgamma(p + q));
#if defined(__GLIBC__)
    int s = 0;
    return ::lgamma_r(p, &s) + ::lgamma_r(q, &s) - ::lgamma_r(p + q, &s);
#else
    return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
#endif
}

// Continued fraction for I_x(p, q) (modified Lentz), without the prefactor.
double beta_cf(double x, double p, double q, int max_iter) {
    constexpr double kEps = 1e-16;
    constexpr double kTiny = 1e-300;
    const double qab = p + q;
    const double qap = p + 1.0;
    const double qam = p - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (q - m) * x / ((qam + m2) * (p + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(p + m) * (qab + m) * x / ((p + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw ConvergenceError("beta continued fraction did not converge", h, kInf);
}

// B_x(p, q) straight from the continued fraction, no symmetry switch.
double incomplete_direct(double x, double p, double q, int max_iter) {
    if (x == 0.0) return 0.0;
    if (x == 1.0) return beta_complete(p, q);
    const double front = std::exp(p * std::log(x) + q * std::log1p(-x));
    return front * beta_cf(x, p, q, max_iter) / p;
}

}  // namespace

double beta_complete(double p, double q) {
    check_shape(p, q);
    return std::exp(log_beta(p, q));
}

double beta_incomplete(double x, double p, double q) {
    check_shape(p, q);
    check_unit(x, "beta_incomplete");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return beta_complete(p, q);
    if (x < (p + 1.0) / (p + q + 2.0)) return incomplete_direct(x, p, q, 300);
    return beta_complete(p, q) - incomplete_direct(1.0 - x, q, p, 300);
}

double beta_regularized(double x, double p, double q) {
    check_shape(p, q);
    check_unit(x, "beta_regularized");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    if (x < (p + 1.0) / (p + q + 2.0)) return incomplete_direct(x, p, q, 300) / beta_complete(p, q);
    return 1.0 - incomplete_direct(1.0 - x, q, p, 300) / beta_complete(p, q);
}

double beta_reflect_check(double x, double p, double q) {
    check_shape(p, q);
    check_unit(x, "beta_reflect_check");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return beta_complete(p, q);
    // B_{1-x}(q, p) by quadrature after t = u^{1/q}, which removes the
    // t^{q-1} singularity at the origin.
    const double y = 1.0 - x;
    auto f = [p, q](double u) { return std::pow(1.0 - std::pow(u, 1.0 / q), p - 1.0) / q; };
    const Tolerance tol{1e-14, 0.0, 5000};
    return beta_complete(p, q) - integrate(f, 0.0, std::pow(y, q), tol).value;
}

double beta1(double a) {
    check_unit(a, "beta1");
    return a * a * beta_incomplete(a, 0.5, 1.5) - beta_incomplete(a, 2.5, 1.5);
}

double beta2(double a) {
    check_unit(a, "beta2");
    return a * beta_incomplete(a, 0.5, 1.5) - beta_incomplete(a, 2.5, 1.5);
}

double beta3(double a) {
    check_unit(a, "beta3");
    if (a == 0.0) return 0.0;
    return beta1(a) + beta_incomplete(a, 2.5, 1.5) / a - beta_incomplete(a, 1.5, 1.5);
}

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
};

Segment gauss_kronrod(const Integrand& f, double a, double b) {
    constexpr double kEpmach = std::numeric_limits<double>::epsilon();
    constexpr double kUflow = std::numeric_limits<double>::min();
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double dhlgth = std::fabs(hlgth);

    std::array<double, 7> fv1{};
    std::array<double, 7> fv2{};
    const double fc = f(centr);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::fabs(resk);
    for (int j = 0; j < 3; ++j) {
        const int jtw = 2 * j + 1;
        const double absc = hlgth * kXgk[jtw];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += kWg[j] * (f1 + f2);
        resk += kWgk[jtw] * (f1 + f2);
        resabs += kWgk[jtw] * (std::fabs(f1) + std::fabs(f2));
    }
    for (int j = 0; j < 4; ++j) {
        const int jtwm1 = 2 * j;
        const double absc = hlgth * kXgk[jtwm1];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += kWgk[jtwm1] * (f1 + f2);
        resabs += kWgk[jtwm1] * (std::fabs(f1) + std::fabs(f2));
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j) {
        resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
    }
    const double result = resk * hlgth;
    resabs *= dhlgth;
    resasc *= dhlgth;
    double abserr = std::fabs((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0) {
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    }
    if (resabs > kUflow / (50.0 * kEpmach)) abserr = std::max(kEpmach * 50.0 * resabs, abserr);
    if (!std::isfinite(result)) abserr = kInf;
    return {a, b, result, abserr};
}

QuadResult adaptive(const Integrand& f, std::vector<double> cuts, const Tolerance& tol) {
    auto worse = [](const Segment& x, const Segment& y) { return x.error < y.error; };
    std::vector<Segment> heap;
    heap.reserve(static_cast<std::size_t>(tol.max_subdivisions) + cuts.size());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        heap.push_back(gauss_kronrod(f, cuts[i], cuts[i + 1]));
    }
    std::make_heap(heap.begin(), heap.end(), worse);

    auto totals = [&heap]() {
        double v = 0.0;
        double e = 0.0;
        for (const auto& s : heap) {
            v += s.value;
            e += s.error;
        }
        return std::pair{v, e};
    };

    auto [value, error] = totals();
    while (error > std::max(tol.abs, tol.rel * std::fabs(value))) {
        if (static_cast<int>(heap.size()) >= tol.max_subdivisions) {
            return {value, error, static_cast<int>(heap.size()), false};
        }
        std::pop_heap(heap.begin(), heap.end(), worse);
        const Segment worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Interval exhausted at machine resolution.
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end(), worse);
            return {value, error, static_cast<int>(heap.size()), false};
        }
        heap.push_back(gauss_kronrod(f, worst.a, mid));
        std::push_heap(heap.begin(), heap.end(), worse);
        heap.push_back(gauss_kronrod(f, mid, worst.b));
        std::push_heap(heap.begin(), heap.end(), worse);
        // Re-summing keeps the running totals free of cancellation drift.
        std::tie(value, error) = totals();
    }
    return {value, error, static_cast<int>(heap.size()), true};
}

}  // namespace

QuadResult integrate(const Integrand& f, double lower, double upper, std::span<const double> breakpoints,
                     const Tolerance& tol) {
    tol.validate();
    if (std::isnan(lower) || std::isnan(upper) || std::isinf(lower)) {
        throw DomainError("integrate: lower limit must be finite");
    }
    if (upper == lower) return {0.0, 0.0, 0, true};
    if (upper < lower) {
        auto r = integrate(f, upper, lower, breakpoints, tol);
        r.value = -r.value;
        return r;
    }

    if (std::isinf(upper)) {
        const double scale = std::max(1.0, std::fabs(lower));
        Integrand mapped = [&f, lower, scale](double t) {
            const double z = lower + scale * (1.0 - t) / t;
            const double v = f(z);
            return v == 0.0 ? 0.0 : v * scale / (t * t);
        };
        std::vector<double> cuts{0.0};
        std::vector<double> inner;
        for (double b : breakpoints) {
            if (b > lower && std::isfinite(b)) inner.push_back(scale / (b - lower + scale));
        }
        std::sort(inner.begin(), inner.end());
        cuts.insert(cuts.end(), inner.begin(), inner.end());
        cuts.push_back(1.0);
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        return adaptive(mapped, std::move(cuts), tol);
    }

    std::vector<double> cuts{lower};
    std::vector<double> inner;
    for (double b : breakpoints) {
        if (b > lower && b < upper) inner.push_back(b);
    }
    std::sort(inner.begin(), inner.end());
    cuts.insert(cuts.end(), inner.begin(), inner.end());
    cuts.push_back(upper);
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return adaptive(f, std::move(cuts), tol);
}

QuadResult integrate(const Integrand& f, double lower, double upper, const Tolerance& tol) {
    return integrate(f, lower, upper, std::span<const double>{}, tol);
}

double integrate_or_throw(const Integrand& f, double lower, double upper, const Tolerance& tol) {
    const auto r = integrate(f, lower, upper, tol);
    if (!r.converged) throw ConvergenceError("integrate: tolerance not reached", r.value, r.error);
    return r.value;
}

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------

RootResult solve_bracketed(const std::function<double(double)>& g, double lo, double hi, const Tolerance& tol) {
    tol.validate();
    if (!(lo < hi)) throw BracketError("solve_bracketed: need lo < hi");
    double glo = g(lo);
    const double ghi = g(hi);
    if (glo == 0.0) return {lo, 0.0, 0};
    if (ghi == 0.0) return {hi, 0.0, 0};
    if (std::signbit(glo) == std::signbit(ghi)) {
        throw BracketError("solve_bracketed: g(lo) and g(hi) have the same sign");
    }
    const double width_floor = tol.rel * std::max(std::fabs(lo), std::fabs(hi));
    RootResult best = std::fabs(glo) < std::fabs(ghi) ? RootResult{lo, glo, 0} : RootResult{hi, ghi, 0};
    for (int it = 1; it <= 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (std::fabs(gm) <= std::fabs(best.residual)) best = {mid, gm, it};
        if (std::fabs(gm) <= tol.abs || (hi - lo) <= width_floor || !(mid > lo && mid < hi)) {
            return {mid, gm, it};
        }
        if (std::signbit(gm) == std::signbit(glo)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    best.iterations = 400;
    return best;
}

}  // namespace plsec::numerics
