#pragma once

#include <functional>

namespace igk::specfun {

// Relative accuracy target for the scalar functions below on their
// documented domains.
inline constexpr double kRelTol = 1e-12;

/// ln Gamma(a) for a > 0.
double ln_gamma(double a);

/// Upper incomplete gamma Gamma(a, x) = int_x^inf t^(a-1) e^(-t) dt,
/// a > 0, x >= 0. Not regularized: Gamma(a, 0) = Gamma(a).
double upper_inc_gamma(double a, double x);

/// Lower incomplete gamma gamma(a, x), complement of the above.
double lower_inc_gamma(double a, double x);

double erf(double x);
double erfc(double x);

/// Exponential integral E1(x) = Gamma(0, x), x > 0.
double expint_e1(double x);

/// Confluent hypergeometric 1F1(a, b, x), b > 0. Negative arguments are
/// routed through the Kummer transform so the series never alternates
/// catastrophically.
double hyp1f1(double a, double b, double x);

/// Bessel function of the first kind J_q(x) for q >= 0, x >= 0.
/// Ascending series below x = 12, Hankel asymptotic expansion beyond;
/// intended for verification use (1e-10 accuracy).
double bessel_j(double q, double x);

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0; // estimate
    bool converged = false;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [lo, hi] with
/// worst-segment bisection. abs_tol acts as the absolute floor.
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double rel_tol = 1e-10, double abs_tol = 1e-14,
                           int max_segments = 4000);

struct IdentityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_error = 0.0;
    bool quadrature_converged = false;
};

/// Numerically checks
///   int_0^inf Gamma(s, a^2 x^2) J_p(b x) x^(p+1) dx
///     = 1/2 (b/2)^p a^(-2p-2) Gamma(p+s+1)/Gamma(p+2) 1F1(p+s+1, p+2, -b^2/(4a^2))
/// for a > 0, b > 0, s >= 0, p > -1 (left side requires p >= 0 for J_p).
/// The quadrature cutoff is placed where the integrand falls below 1e-14.
IdentityCheck verify_appendix_identity(double a, double b, double s, double p);

} // namespace igk::specfun
