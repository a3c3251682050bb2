#include "igk/kernels.hpp"

#include "igk/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace igk {

void KernelParams::validate() const {
    if (dim < 1) throw std::domain_error("KernelParams: dim must be >= 1");
    if (!(p > 0.0)) throw std::domain_error("KernelParams: p must be > 0");
    if (!(sigma2 > 0.0)) throw std::domain_error("KernelParams: sigma2 must be > 0");
    if (truncation_radius && !(*truncation_radius > 0.0))
        throw std::domain_error("KernelParams: truncation_radius must be > 0");
}

KernelParams lop_kernel(int dim, std::optional<double> truncation_radius) {
    return KernelParams{dim, 1.0, 1.0 / 32.0, truncation_radius};
}

KernelParams gaussian_kernel(int dim, double sigma2, std::optional<double> truncation_radius) {
    return KernelParams{dim, 2.0, sigma2, truncation_radius};
}

namespace kernels {

namespace {

double norm_sq(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

bool truncated_away(const KernelParams& params, double r2) {
    return params.truncation_radius && r2 > (*params.truncation_radius) * (*params.truncation_radius);
}

} // namespace

double normalization_constant(const KernelParams& params) {
    params.validate();
    const double d = params.dim;
    return std::pow(2.0 * M_PI * params.sigma2, -0.5 * d) *
           std::exp(specfun::ln_gamma(0.5 * (d + 2.0)) - specfun::ln_gamma(0.5 * (d + params.p)));
}

double profile_k(const KernelParams& params, double x) {
    if (!(x >= 0.0)) throw std::domain_error("profile_k: requires x >= 0");
    const double u = x / (2.0 * params.sigma2);
    if (params.p == 2.0) return std::exp(-u);
    if (params.p == 1.0) return std::sqrt(M_PI) * specfun::erfc(std::sqrt(u));
    return specfun::upper_inc_gamma(0.5 * params.p, u);
}

double profile_g(const KernelParams& params, double x) {
    if (!(x >= 0.0)) throw std::domain_error("profile_g: requires x >= 0");
    const double inv2s = 1.0 / (2.0 * params.sigma2);
    if (x == 0.0) {
        if (params.p < 2.0) throw std::domain_error("profile_g: singular at x = 0 for p < 2");
        if (params.p == 2.0) return inv2s;
        return 0.0;
    }
    return std::pow(inv2s, 0.5 * params.p) * std::pow(x, 0.5 * params.p - 1.0) * std::exp(-x * inv2s);
}

double kernel_eval_r2(const KernelParams& params, double r2) {
    if (truncated_away(params, r2)) return 0.0;
    return normalization_constant(params) * profile_k(params, r2);
}

double kernel_eval(const KernelParams& params, std::span<const double> x) {
    if (static_cast<int>(x.size()) != params.dim)
        throw std::invalid_argument("kernel_eval: dimension mismatch");
    return kernel_eval_r2(params, norm_sq(x));
}

double g_normalization_constant(const KernelParams& params) {
    params.validate();
    const double d = params.dim;
    if (!(d + params.p > 2.0))
        throw std::domain_error("g_normalization_constant: G is not integrable for d + p <= 2");
    // 1/c_G = pi^(d/2) (2 sigma2)^(d/2 - 1) Gamma((d+p-2)/2) / Gamma(d/2)
    return std::exp(specfun::ln_gamma(0.5 * d) - specfun::ln_gamma(0.5 * (d + params.p) - 1.0)) /
           (std::pow(M_PI, 0.5 * d) * std::pow(2.0 * params.sigma2, 0.5 * d - 1.0));
}

double kernel_g_eval(const KernelParams& params, std::span<const double> x) {
    if (static_cast<int>(x.size()) != params.dim)
        throw std::invalid_argument("kernel_g_eval: dimension mismatch");
    const double cg = g_normalization_constant(params);
    const double r2 = norm_sq(x);
    if (truncated_away(params, r2)) return 0.0;
    return cg * profile_g(params, r2);
}

double characteristic_fn_r(const KernelParams& params, double omega_norm) {
    params.validate();
    const double d = params.dim;
    return specfun::hyp1f1(0.5 * (d + params.p), 0.5 * (d + 2.0),
                           -0.5 * params.sigma2 * omega_norm * omega_norm);
}

double characteristic_fn(const KernelParams& params, std::span<const double> omega) {
    if (static_cast<int>(omega.size()) != params.dim)
        throw std::invalid_argument("characteristic_fn: dimension mismatch");
    return characteristic_fn_r(params, std::sqrt(norm_sq(omega)));
}

double mgf(const KernelParams& params, std::span<const double> omega) {
    if (static_cast<int>(omega.size()) != params.dim)
        throw std::invalid_argument("mgf: dimension mismatch");
    params.validate();
    const double d = params.dim;
    return specfun::hyp1f1(0.5 * (d + params.p), 0.5 * (d + 2.0),
                           0.5 * params.sigma2 * norm_sq(omega));
}

std::vector<double> kernel_mean(const KernelParams& params) {
    params.validate();
    return std::vector<double>(params.dim, 0.0);
}

double kernel_covariance_factor(const KernelParams& params) {
    params.validate();
    const double d = params.dim;
    return (d + params.p) / (d + 2.0) * params.sigma2;
}

double profile_convexity_threshold(const KernelParams& params) {
    params.validate();
    return std::max(0.0, (params.p - 2.0) * params.sigma2);
}

bool is_strictly_positive_definite(const KernelParams& params) {
    params.validate();
    return params.p > 0.0 && params.p <= 2.0;
}

} // namespace kernels

} // namespace igk
