#include "dunkl/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "dunkl/errors.hpp"

namespace dunkl {
namespace {

constexpr double kSeriesCutoff = 1.0;
constexpr double kAsymptoticCutoff = 500.0;

// sum_m s^m (z/2)^{2m} Gamma(alpha+1) / (m! Gamma(m+alpha+1)), s = -1 for J, +1 for I.
double normalized_series(double alpha, double z, double sign)
{
    const double q = sign * 0.25 * z * z;
    double term = 1.0;
    double sum = 1.0;
    for (int m = 0; m < 200; ++m) {
        term *= q / ((m + 1.0) * (m + alpha + 1.0));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum))
            break;
    }
    return sum;
}

// J_alpha(x) for alpha in [-1/2, 0) and x > 0.
double bessel_j_negative_order(double alpha, double x)
{
    if (alpha == -0.5)
        return std::sqrt(2.0 / (std::numbers::pi * x)) * std::cos(x);
    const double j1 = std::cyl_bessel_j(alpha + 1.0, x);
    const double j2 = std::cyl_bessel_j(alpha + 2.0, x);
    return 2.0 * (alpha + 1.0) / x * j1 - j2;
}

// exp(-w) I_alpha(w) by the large-argument expansion; the K_alpha
// contribution for negative order is O(exp(-2w)) and dropped.
double bessel_i_scaled_asymptotic(double alpha, double w)
{
    const double mu = 4.0 * alpha * alpha;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu - odd * odd) / (k * 8.0 * w);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum))
            break;
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * w);
}

double bessel_i_scaled(double alpha, double w)
{
    if (w > kAsymptoticCutoff)
        return bessel_i_scaled_asymptotic(alpha, w);
    const double scale = std::exp(-w);
    if (alpha >= 0.0)
        return std::cyl_bessel_i(alpha, w) * scale;
    const double mu = -alpha;
    return (std::cyl_bessel_i(mu, w) + 2.0 / std::numbers::pi * std::sin(mu * std::numbers::pi) *
                                           std::cyl_bessel_k(mu, w)) *
           scale;
}

constexpr double kMaxFastOrder = 20.0;

bool is_integer(double v) { return v == std::floor(v); }

// Normalized j of half-integer order by upward recurrence from cos z and
// sin z / z: j_{a+1} = 4 a (a+1) / z^2 (j_a - j_{a-1}). Stable for z > alpha.
double normalized_half_integer(double alpha, double z)
{
    double lower = std::cos(z);
    double upper = std::sin(z) / z;
    for (double a = 0.5; a < alpha; a += 1.0) {
        const double next = 4.0 * a * (a + 1.0) / (z * z) * (upper - lower);
        lower = upper;
        upper = next;
    }
    return upper;
}

}  // namespace

double gamma_fn(double x)
{
    if (!(x > 0.0))
        throw DomainError("gamma_fn requires x > 0");
    return std::tgamma(x);
}

double bessel_j(double alpha, double x)
{
    if (!(alpha >= -0.5))
        throw DomainError("bessel_j requires alpha >= -1/2");
    if (!(x >= 0.0))
        throw DomainError("bessel_j requires x >= 0");
    if (x == 0.0) {
        if (alpha == 0.0)
            return 1.0;
        return alpha > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    if (alpha < 0.0)
        return bessel_j_negative_order(alpha, x);
    return std::cyl_bessel_j(alpha, x);
}

double bessel_k(double alpha, double x)
{
    if (!(x > 0.0))
        throw DomainError("bessel_k requires x > 0");
    return std::cyl_bessel_k(std::abs(alpha), x);
}

double normalized_bessel_j(double alpha, double z)
{
    z = std::abs(z);
    if (z <= kSeriesCutoff)
        return normalized_series(alpha, z, -1.0);
    if (alpha == -0.5)
        return std::cos(z);
    if (alpha == 0.5)
        return std::sin(z) / z;
    if (alpha <= kMaxFastOrder && is_integer(alpha - 0.5)) {
        if (z <= alpha + 1.0)
            return normalized_series(alpha, z, -1.0);
        return normalized_half_integer(alpha, z);
    }
    if (alpha <= kMaxFastOrder && is_integer(alpha))
        return gamma_fn(alpha + 1.0) * std::pow(0.5 * z, -alpha) * ::jn(static_cast<int>(alpha), z);
    return gamma_fn(alpha + 1.0) * std::pow(0.5 * z, -alpha) * bessel_j(alpha, z);
}

double normalized_bessel_i_scaled(double alpha, double w)
{
    w = std::abs(w);
    if (w <= kSeriesCutoff)
        return normalized_series(alpha, w, 1.0) * std::exp(-w);
    if (alpha == -0.5)
        return 0.5 * (1.0 + std::exp(-2.0 * w));
    // Gamma(alpha+1) (w/2)^{-alpha} can be large; combine in log space.
    const double log_prefactor = std::lgamma(alpha + 1.0) - alpha * std::log(0.5 * w);
    return std::exp(log_prefactor) * bessel_i_scaled(alpha, w);
}

}  // namespace dunkl
