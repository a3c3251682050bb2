#include "igk/specfun.hpp"

#include "igk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace igk::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;

// Series for the lower incomplete gamma: gamma(a,x) = x^a e^-x sum_n x^n / (a (a+1) ... (a+n)).
// All terms are positive, so there is no cancellation; needs O(x) terms.
double lower_series(double a, double x) {
    if (x == 0.0) return 0.0;
    double denom = a;
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 10000; ++n) {
        denom += 1.0;
        term *= x / denom;
        sum += term;
        if (term < sum * kEps) {
            return std::exp(a * std::log(x) - x) * sum;
        }
    }
    throw NumericError("lower_inc_gamma: series failed to converge (a=" + std::to_string(a) +
                       ", x=" + std::to_string(x) + ")");
}

// Modified Lentz continued fraction for Gamma(a,x), valid for x >= a+1
// (also used for a = 0, where it evaluates E1). NR-style coefficients.
double upper_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) {
            return std::exp(-x + a * std::log(x)) * h;
        }
    }
    throw NumericError("upper_inc_gamma: continued fraction failed to converge");
}

// Positive-argument Kummer series; caller guarantees b > 0 and x >= 0.
double hyp1f1_series(double a, double b, double x, int max_terms = 4000) {
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < max_terms; ++n) {
        term *= (a + n) / (b + n) * x / (n + 1);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps && n > 2) return sum;
    }
    throw NumericError("hyp1f1: series failed to converge (a=" + std::to_string(a) +
                       ", b=" + std::to_string(b) + ", x=" + std::to_string(x) + ")");
}

double bessel_series(double q, double x) {
    // J_q(x) = (x/2)^q / Gamma(q+1) * sum_m (-x^2/4)^m / (m! (q+1)_m)
    if (x == 0.0) return q == 0.0 ? 1.0 : 0.0;
    const double lead = std::exp(q * std::log(0.5 * x) - ln_gamma(q + 1.0));
    const double z = -0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int m = 1; m < 300; ++m) {
        term *= z / (m * (q + m));
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps) break;
    }
    return lead * sum;
}

double bessel_asymptotic(double q, double x) {
    // Hankel expansion: J_q(x) ~ sqrt(2/(pi x)) [cos(chi) P(q,x) - sin(chi) Q(q,x)].
    const double mu = 4.0 * q * q;
    const double chi = x - (0.5 * q + 0.25) * M_PI;
    const double inv8x = 1.0 / (8.0 * x);
    double p_sum = 1.0, q_sum = 0.0;
    double term = 1.0;
    // term_k = prod_{j=1..k} (mu - (2j-1)^2) / (k (8x)) with alternating signs
    // folded into P (even k) and Q (odd k).
    for (int k = 1; k <= 10; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) * inv8x / k;
        if (k % 2 == 1) {
            q_sum += (k % 4 == 1 ? term : -term);
        } else {
            p_sum += (k % 4 == 2 ? -term : term);
        }
        if (std::fabs(term) < 1e-16) break;
    }
    return std::sqrt(2.0 / (M_PI * x)) * (std::cos(chi) * p_sum - std::sin(chi) * q_sum);
}

// --- Gauss-Kronrod 7/15 nodes and weights on [-1, 1] ---
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct SegmentEval {
    double kronrod;
    double err;
};

SegmentEval gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double hw = 0.5 * (hi - lo);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - hw * kXgk[i]);
        fv[14 - i] = f(c + hw * kXgk[i]);
    }
    fv[7] = f(c);
    double kron = kWgk[7] * fv[7];
    double gauss = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kron += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    kron *= hw;
    gauss *= hw;
    return {kron, std::fabs(kron - gauss)};
}

} // namespace

double ln_gamma(double a) {
    if (!(a > 0.0)) throw std::domain_error("ln_gamma: requires a > 0");
    return std::lgamma(a);
}

double erf(double x) { return std::erf(x); }
double erfc(double x) { return std::erfc(x); }

double expint_e1(double x) {
    if (!(x > 0.0)) throw std::domain_error("expint_e1: requires x > 0");
    if (x >= 1.0) return upper_cf(0.0, x);
    // Convergent series: E1(x) = -euler - ln x + sum_k (-1)^(k+1) x^k / (k k!)
    constexpr double kEuler = 0.57721566490153286060651209008240;
    double sum = -kEuler - std::log(x);
    double term = 1.0;
    for (int k = 1; k < 80; ++k) {
        term *= -x / k;
        const double contrib = -term / k;
        sum += contrib;
        if (std::fabs(contrib) < std::fabs(sum) * kEps) break;
    }
    return sum;
}

double upper_inc_gamma(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("upper_inc_gamma: requires a > 0");
    if (!(x >= 0.0)) throw std::domain_error("upper_inc_gamma: requires x >= 0");
    const double gam = std::exp(ln_gamma(a));
    if (x == 0.0) return gam;
    if (x >= a + 1.0) return upper_cf(a, x);
    return gam - lower_series(a, x);
}

double lower_inc_gamma(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("lower_inc_gamma: requires a > 0");
    if (!(x >= 0.0)) throw std::domain_error("lower_inc_gamma: requires x >= 0");
    return lower_series(a, x);
}

double hyp1f1(double a, double b, double x) {
    if (!(b > 0.0)) throw std::domain_error("hyp1f1: requires b > 0");
    if (x == 0.0) return 1.0;
    if (x < 0.0) {
        // Kummer transform: 1F1(a,b,x) = e^x 1F1(b-a, b, -x); the right side
        // has a positive argument and (for b > a) only positive terms.
        return std::exp(x) * hyp1f1_series(b - a, b, -x);
    }
    return hyp1f1_series(a, b, x);
}

double bessel_j(double q, double x) {
    if (!(q >= 0.0)) throw std::domain_error("bessel_j: requires q >= 0");
    if (!(x >= 0.0)) throw std::domain_error("bessel_j: requires x >= 0");
    return x < 12.0 ? bessel_series(q, x) : bessel_asymptotic(q, x);
}

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double rel_tol, double abs_tol, int max_segments) {
    if (lo == hi) return {0.0, 0.0, true};

    struct Segment {
        double lo, hi, value, err;
    };
    std::vector<Segment> segs;
    const SegmentEval first = gk15(f, lo, hi);
    segs.push_back({lo, hi, first.kronrod, first.err});

    auto totals = [&segs]() {
        double v = 0.0, e = 0.0;
        for (const auto& s : segs) {
            v += s.value;
            e += s.err;
        }
        return std::pair<double, double>(v, e);
    };

    while (static_cast<int>(segs.size()) < max_segments) {
        auto [value, err] = totals();
        const double tol = std::max(abs_tol, rel_tol * std::fabs(value));
        if (err <= tol) return {value, err, true};

        // Split the segment with the largest error estimate.
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (segs[i].err > segs[worst].err) worst = i;
        const Segment s = segs[worst];
        const double mid = 0.5 * (s.lo + s.hi);
        if (mid <= s.lo || mid >= s.hi) break; // interval exhausted at double precision
        const SegmentEval a = gk15(f, s.lo, mid);
        const SegmentEval b = gk15(f, mid, s.hi);
        segs[worst] = {s.lo, mid, a.kronrod, a.err};
        segs.push_back({mid, s.hi, b.kronrod, b.err});
    }
    auto [value, err] = totals();
    return {value, err, err <= std::max(abs_tol, rel_tol * std::fabs(value))};
}

IdentityCheck verify_appendix_identity(double a, double b, double s, double p) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("verify_appendix_identity: requires a, b > 0");
    if (!(s >= 0.0)) throw std::domain_error("verify_appendix_identity: requires s >= 0");
    if (!(p > -1.0)) throw std::domain_error("verify_appendix_identity: requires p > -1");

    IdentityCheck out;
    out.rhs = 0.5 * std::pow(0.5 * b, p) * std::pow(a, -2.0 * p - 2.0) *
              std::exp(ln_gamma(p + s + 1.0) - ln_gamma(p + 2.0)) *
              hyp1f1(p + s + 1.0, p + 2.0, -b * b / (4.0 * a * a));

    if (p < 0.0) {
        // J_p is only implemented for p >= 0; report the closed form alone.
        out.lhs = std::numeric_limits<double>::quiet_NaN();
        out.rel_error = std::numeric_limits<double>::quiet_NaN();
        out.quadrature_converged = false;
        return out;
    }

    // Cutoff where Gamma(s, a^2 x^2) has fully decayed: the integrand scales
    // like e^(-a^2 x^2) for large x.
    const double u_max = 45.0 + 5.0 * s; // Gamma(s, u_max) < 1e-15 Gamma(s) for s <= 2.5
    const double x_max = std::sqrt(u_max) / a;
    auto integrand = [&](double x) {
        if (x <= 0.0) return 0.0;
        const double u = a * a * x * x;
        const double g = s > 0.0 ? upper_inc_gamma(s, u) : expint_e1(u);
        return g * bessel_j(p, b * x) * std::pow(x, p + 1.0);
    };
    const QuadratureResult q = integrate(integrand, 0.0, x_max, 1e-10, 1e-14, 8000);
    out.lhs = q.value;
    out.quadrature_converged = q.converged;
    out.rel_error = std::fabs(out.lhs - out.rhs) / std::max(std::fabs(out.rhs), kTiny);
    if (!q.converged) {
        throw NumericError("verify_appendix_identity: quadrature did not converge, error estimate " +
                           std::to_string(q.abs_error));
    }
    return out;
}

} // namespace igk::specfun
