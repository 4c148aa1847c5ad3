#include "dunkl/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {
namespace {

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

void check_dims(const MultiplicityConfig& config, std::size_t a, std::size_t b)
{
    const auto d = static_cast<std::size_t>(config.dimension);
    if (a != d || b != d)
        throw ConfigError("point dimension does not match config dimension " +
                          std::to_string(config.dimension));
}

}  // namespace

KernelValue kernel_1d(double kappa, double x, double y)
{
    const double z = x * y;
    if (kappa == 0.0)
        return {std::cos(z), -std::sin(z)};
    const double az = std::abs(z);
    const double even = normalized_bessel_j(kappa - 0.5, az);
    const double odd = az / (2.0 * kappa + 1.0) * normalized_bessel_j(kappa + 0.5, az);
    return {even, -sign(z) * odd};
}

double kernel_1d_real_scaled(double kappa, double a, double b)
{
    const double w = a * b;
    const double aw = std::abs(w);
    if (kappa == 0.0)
        return std::exp(w - aw);
    const double even = normalized_bessel_i_scaled(kappa - 0.5, aw);
    const double odd = aw / (2.0 * kappa + 1.0) * normalized_bessel_i_scaled(kappa + 0.5, aw);
    return even + sign(w) * odd;
}

double kernel_1d_real(double kappa, double a, double b)
{
    return kernel_1d_real_scaled(kappa, a, b) * std::exp(std::abs(a * b));
}

KernelValue kernel_nd(const MultiplicityConfig& config, std::span<const double> x,
                      std::span<const double> y)
{
    check_dims(config, x.size(), y.size());
    KernelValue value{1.0, 0.0};
    for (int i = 0; i < config.dimension; ++i)
        value *= kernel_1d(config.kappa[i], x[i], y[i]);
    return value;
}

double kernel_nd_real(const MultiplicityConfig& config, std::span<const double> a,
                      std::span<const double> b)
{
    check_dims(config, a.size(), b.size());
    double value = 1.0;
    for (int i = 0; i < config.dimension; ++i)
        value *= kernel_1d_real(config.kappa[i], a[i], b[i]);
    return value;
}

Complex dunkl_operator_1d(double kappa, const std::function<Complex(double)>& f, double x)
{
    if (x == 0.0)
        throw DomainError("the rank-one Dunkl operator is not evaluated on the mirror x = 0");

    // Ridders' tableau on central differences, step shrinking by 2 per row.
    constexpr int kLevels = 6;
    const double h0 = 0.2 * std::max(std::abs(x), 0.25);
    std::array<std::array<Complex, kLevels>, kLevels> table{};
    double h = h0;
    Complex best{};
    double best_err = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kLevels; ++i, h *= 0.5) {
        table[i][0] = (f(x + h) - f(x - h)) / (2.0 * h);
        double factor = 4.0;
        for (int j = 1; j <= i; ++j, factor *= 4.0) {
            table[i][j] = (factor * table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
            const double err = std::max(std::abs(table[i][j] - table[i][j - 1]),
                                        std::abs(table[i][j] - table[i - 1][j - 1]));
            if (err < best_err) {
                best_err = err;
                best = table[i][j];
            }
        }
    }
    return best + kappa * (f(x) - f(-x)) / x;
}

}  // namespace dunkl
