#pragma once

#include <complex>
#include <functional>
#include <span>

#include "dunkl/root_system.hpp"

namespace dunkl {

using Complex = std::complex<double>;
using KernelValue = Complex;

/// Rank-one Dunkl kernel E_kappa(x, -iy) for real x, y:
///
///   j_{kappa-1/2}(|xy|) - i sign(xy) |xy| / (2 kappa + 1) j_{kappa+1/2}(|xy|)
///
/// with j the normalized Bessel function. Equal to exp(-ixy) for kappa = 0.
KernelValue kernel_1d(double kappa, double x, double y);

/// Rank-one kernel at real arguments, E_kappa(a, b), the analytic continuation
/// of kernel_1d to imaginary frequency. Grows like exp(|ab|).
double kernel_1d_real(double kappa, double a, double b);

/// exp(-|ab|) E_kappa(a, b).
double kernel_1d_real_scaled(double kappa, double a, double b);

/// E_kappa(x, -iy) on Z_2^d as the product of rank-one kernels.
KernelValue kernel_nd(const MultiplicityConfig& config, std::span<const double> x,
                      std::span<const double> y);

/// E_kappa(a, b) at real arguments.
double kernel_nd_real(const MultiplicityConfig& config, std::span<const double> a,
                      std::span<const double> b);

/// Rank-one Dunkl operator T f(x) = f'(x) + kappa (f(x) - f(-x)) / x.
///
/// The derivative is a Richardson-extrapolated central difference. x = 0 is
/// outside the domain (throws DomainError).
Complex dunkl_operator_1d(double kappa, const std::function<Complex(double)>& f, double x);

}  // namespace dunkl
