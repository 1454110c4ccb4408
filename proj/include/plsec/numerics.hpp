#pragma once

#include <functional>
#include <limits>
#include <span>

#include "plsec/errors.hpp"

namespace plsec::numerics {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;
    int max_subdivisions = 2000;

    /// Throws DomainError unless at least one of rel/abs is positive and
    /// max_subdivisions >= 1.
    void validate() const;
};

// ---------------------------------------------------------------------------
// Beta family
// ---------------------------------------------------------------------------

/// Complete beta function B(p, q).
double beta_complete(double p, double q);

/// Regularized incomplete beta I_x(p, q) = B_x(p, q) / B(p, q).
double beta_regularized(double x, double p, double q);

/// Non-normalized incomplete beta B_x(p, q) = \int_0^x t^{p-1} (1-t)^{q-1} dt.
double beta_incomplete(double x, double p, double q);

/// B(p, q) - B_{1-x}(q, p). Equals beta_incomplete(x, p, q); kept as an
/// independent evaluation path for self-tests.
double beta_reflect_check(double x, double p, double q);

/// a^2 B_a(1/2, 3/2) - B_a(5/2, 3/2), the antiderivative of 2 t B_t(1/2, 3/2).
double beta1(double a);

/// a B_a(1/2, 3/2) - B_a(5/2, 3/2).
double beta2(double a);

/// beta1(a) + B_a(5/2, 3/2) / a - B_a(3/2, 3/2); the a -> 0 limit (0) is
/// returned at a == 0.
double beta3(double a);

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
    bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Adaptive 15-point Gauss-Kronrod quadrature on [lower, upper]. `upper` may
/// be +infinity; the tail is then mapped onto (0, 1] with
/// z = lower + s (1 - t) / t, s = max(1, |lower|).
///
/// Never throws on non-convergence: the partial estimate is returned with
/// `converged == false`. Use `integrate_or_throw` when failure is fatal.
QuadResult integrate(const Integrand& f, double lower, double upper, const Tolerance& tol = {});

/// As `integrate`, additionally splitting at the given interior points
/// (points outside (lower, upper) are ignored).
QuadResult integrate(const Integrand& f, double lower, double upper,
                     std::span<const double> breakpoints, const Tolerance& tol = {});

/// Same as integrate() but raises ConvergenceError on failure.
double integrate_or_throw(const Integrand& f, double lower, double upper, const Tolerance& tol = {});

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------

struct RootResult {
    double x = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Bisection on a continuous residual with g(lo), g(hi) of opposite sign.
/// Stops when |g(x)| <= tol.abs or the bracket width falls below
/// tol.rel * max(|lo|, |hi|). Throws BracketError if the signs agree.
RootResult solve_bracketed(const std::function<double(double)>& g, double lo, double hi,
                           const Tolerance& tol = {});

}  // namespace plsec::numerics
