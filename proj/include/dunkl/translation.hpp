#pragma once

#include <span>
#include <vector>

#include "dunkl/functions.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/report.hpp"

namespace dunkl {

// Translation and convolution are spectral:
//   tau_y f(x)  = c int E(ix, xi) E(-iy, xi) D f(xi) h^2(xi) dxi
//   (f * g)(x)  = c int D f(xi) D g(xi) E(ix, xi) h^2(xi) dxi
// `quad` fixes the spectral box and the minimum node count; nodes are added
// when the kernels oscillate faster than the rule resolves.

Estimate translate(const MultiplicityConfig& config, const QuadratureSpec& quad,
                   const FunctionHandle& f, std::span<const double> y, std::span<const double> x);

/// tau_y f at every node of `grid`.
std::vector<Complex> translate_on(const MultiplicityConfig& config, const QuadratureSpec& quad,
                                  const FunctionHandle& f, std::span<const double> y,
                                  const TensorGrid& grid);

/// int tau_y f h^2 against int f h^2, tolerance 1e-6. Radial inputs only.
IdentityReport translate_mass(const MultiplicityConfig& config, const QuadratureSpec& quad,
                              const FunctionHandle& f, std::span<const double> y);

Estimate convolve(const MultiplicityConfig& config, const QuadratureSpec& quad,
                  const FunctionHandle& f, const FunctionHandle& g, std::span<const double> x);

/// f * g at every node of `grid`.
std::vector<Complex> convolve_on(const MultiplicityConfig& config, const QuadratureSpec& quad,
                                 const FunctionHandle& f, const FunctionHandle& g,
                                 const TensorGrid& grid);

/// Spatial rule covering f shifted by up to `shift`, resolving frequencies up
/// to `frequency`.
QuadratureSpec spatial_quadrature(const MultiplicityConfig& config, const FunctionHandle& f,
                                  double shift, double frequency, double eps = 1e-10);

/// tau_0 f = f at x; tolerance 1e-7.
IdentityReport translation_identity(const MultiplicityConfig& config, const QuadratureSpec& quad,
                                    const FunctionHandle& f, std::span<const double> x);

/// int tau_y f g h^2 = int f tau_{-y} g h^2; tolerance 1e-6.
IdentityReport translation_duality(const MultiplicityConfig& config, const QuadratureSpec& quad,
                                   const FunctionHandle& f, const FunctionHandle& g,
                                   std::span<const double> y);

/// tau_y f(x) = tau_{-x} f(-y); tolerance 1e-7.
IdentityReport point_symmetry(const MultiplicityConfig& config, const QuadratureSpec& quad,
                              const FunctionHandle& f, std::span<const double> x,
                              std::span<const double> y);

/// f * g = g * f at x; tolerance 1e-10.
IdentityReport convolution_commutativity(const MultiplicityConfig& config,
                                         const QuadratureSpec& quad, const FunctionHandle& f,
                                         const FunctionHandle& g, std::span<const double> x);

/// D(f * g)(xi) = D f(xi) D g(xi), with f * g sampled on a spatial rule and
/// transformed back by quadrature; tolerance 1e-6.
IdentityReport convolution_product_rule(const MultiplicityConfig& config,
                                        const QuadratureSpec& quad, const FunctionHandle& f,
                                        const FunctionHandle& g, std::span<const double> xi);

/// ||f * g||_2 <= ||g||_1 ||f||_2 with ||u||_p = (c int |u|^p h^2)^{1/p}; slack 1e-6.
IdentityReport young_bound(const MultiplicityConfig& config, const QuadratureSpec& quad,
                           const FunctionHandle& f, const FunctionHandle& g);

/// Spectral convolution against c int f(y) tau_x g^v(y) h^2(y) dy with
/// g^v(y) = g(-y); tolerance 1e-5.
IdentityReport convolution_consistency(const MultiplicityConfig& config,
                                       const QuadratureSpec& quad, const FunctionHandle& f,
                                       const FunctionHandle& g, std::span<const double> x);

}  // namespace dunkl
