#pragma once

namespace dunkl {

/// Gamma(x) for x > 0. Throws DomainError otherwise.
double gamma_fn(double x);

/// Bessel function of the first kind J_alpha(x), alpha >= -1/2, x >= 0.
double bessel_j(double alpha, double x);

/// Modified Bessel function of the second kind K_alpha(x), any real alpha, x > 0.
double bessel_k(double alpha, double x);

/// Normalized Bessel function Gamma(alpha+1) (z/2)^{-alpha} J_alpha(z), z >= 0.
///
/// Entire in z with value 1 at the origin. A power series is used for z <= 1,
/// where the raw product would cancel.
double normalized_bessel_j(double alpha, double z);

/// exp(-w) Gamma(alpha+1) (w/2)^{-alpha} I_alpha(w), w >= 0, alpha >= -1/2.
///
/// The exponential scaling keeps the value finite for arbitrarily large w.
double normalized_bessel_i_scaled(double alpha, double w);

}  // namespace dunkl
