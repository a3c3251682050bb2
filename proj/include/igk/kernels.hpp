#pragma once

#include <optional>
#include <span>
#include <vector>

namespace igk {

// Parameters of an incomplete gamma kernel
//   K(x | p, sigma2) = c_K * Gamma(p/2, ||x||^2 / (2 sigma2))
// in R^dim. p = 2 is the Gaussian kernel; p = 1, sigma2 = 1/32 is the LOP
// kernel. truncation_radius, when set, hard-cuts the kernel to zero beyond
// that radius (measured on the kernel argument) without renormalizing.
struct KernelParams {
    int dim = 3;
    double p = 1.0;
    double sigma2 = 1.0 / 32.0;
    std::optional<double> truncation_radius;

    void validate() const;
};

/// The LOP kernel: p = 1, sigma2 = 1/32.
KernelParams lop_kernel(int dim, std::optional<double> truncation_radius = std::nullopt);

/// The Gaussian member of the family.
KernelParams gaussian_kernel(int dim, double sigma2,
                             std::optional<double> truncation_radius = std::nullopt);

namespace kernels {

/// Normalization constant c_K with int K = 1:
/// 1/c_K = (2 pi sigma2)^(d/2) Gamma((d+p)/2) / Gamma((d+2)/2).
double normalization_constant(const KernelParams& params);

/// Kernel profile k(x) = Gamma(p/2, x/(2 sigma2)); x is the squared radius.
double profile_k(const KernelParams& params, double x);

/// Negated profile derivative g(x) = -k'(x) =
/// (1/(2 sigma2))^(p/2) x^(p/2-1) e^(-x/(2 sigma2)), positive on (0, inf).
/// Throws at x = 0 when p < 2 (singular there).
double profile_g(const KernelParams& params, double x);

/// K(x); zero beyond the truncation radius when one is set.
double kernel_eval(const KernelParams& params, std::span<const double> x);

/// K by squared radius, bypassing the norm computation.
double kernel_eval_r2(const KernelParams& params, double r2);

/// Normalization constant of the shadow kernel G(x) = c_G g(||x||^2).
/// G is integrable only for d + p > 2; throws otherwise.
double g_normalization_constant(const KernelParams& params);

/// The shadow kernel G used in mean shift vectors, normalized to integrate
/// to one. Requires d + p > 2; throws at the origin for p < 2.
double kernel_g_eval(const KernelParams& params, std::span<const double> x);

/// Characteristic function 1F1((d+p)/2, (d+2)/2, -sigma2 ||omega||^2 / 2).
double characteristic_fn(const KernelParams& params, std::span<const double> omega);
double characteristic_fn_r(const KernelParams& params, double omega_norm);

/// Moment-generating function 1F1((d+p)/2, (d+2)/2, +sigma2 ||omega||^2 / 2).
double mgf(const KernelParams& params, std::span<const double> omega);

/// Mean of the kernel distribution (the zero vector).
std::vector<double> kernel_mean(const KernelParams& params);

/// Isotropic covariance factor: Cov = factor * I with
/// factor = (d+p)/(d+2) * sigma2.
double kernel_covariance_factor(const KernelParams& params);

/// The profile is convex on [threshold, inf) with
/// threshold = max(0, (p-2) sigma2); zero iff the profile is convex
/// everywhere, which holds exactly for p in (0, 2].
double profile_convexity_threshold(const KernelParams& params);

/// True iff p lies in (0, 2], the range where the profile is completely
/// monotonic and the kernel (truncated or not) is a strictly positive
/// definite function. Returns false for p > 2: the property is unproven
/// there and we do not speculate beyond it.
bool is_strictly_positive_definite(const KernelParams& params);

} // namespace kernels

} // namespace igk
