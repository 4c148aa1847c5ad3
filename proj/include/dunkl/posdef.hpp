#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "dunkl/functions.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/report.hpp"

namespace dunkl {

inline constexpr double kMinSeparation = 1e-9;
inline constexpr double kPsdTolerance = 1e-8;

struct PointSet {
    std::vector<Point> points;
    std::optional<std::vector<Complex>> coefficients;
};

/// Rejects wrong dimensions, pairs closer than kMinSeparation (InputError),
/// a coefficient count that differs from the point count, and all-zero
/// coefficients.
PointSet make_point_set(const MultiplicityConfig& config, std::vector<Point> points,
                        std::optional<std::vector<Complex>> coefficients = std::nullopt);

/// builtin:n. Magnitudes 0, 0.7, 1.9, 3.1, ... with alternating signs; in
/// d > 1 along (1, 0.618034, 0.414214) with a small per-axis offset.
PointSet builtin_points(const MultiplicityConfig& config, int n);

struct GramReport {
    std::vector<std::vector<Complex>> matrix;
    double hermitian_residual = 0.0;
    double min_eigenvalue = 0.0;
    double max_eigenvalue = 0.0;
    bool psd_verdict = false;
    bool spd_verdict = false;
    double tolerance = kPsdTolerance;
    /// Largest entry change between the rule and its refinement.
    double resolution_error = 0.0;
    bool warning = false;
    std::string function;
};

/// G_jl = tau_{x_j} phi(x_l) = c int D phi(xi) E(-i x_j, xi) E(i x_l, xi) h^2 dxi.
/// `quad` is the spectral rule. Eigenvalues are those of (G + G^*)/2. An
/// entry error above kPsdTolerance * max(1, max eigenvalue) widens the
/// tolerance to match and sets `warning`.
GramReport gram(const MultiplicityConfig& config, const QuadratureSpec& quad,
                const FunctionHandle& phi, const PointSet& pts);

/// spectral_quadrature(config, phi, reach) unless its refined grid exceeds
/// 2^24 nodes, in which case the default rule. A truncated spectrum still has
/// nonnegative weights, so PSD verdicts and the bounds of bound_check survive.
QuadratureSpec gram_quadrature(const MultiplicityConfig& config, const FunctionHandle& phi, double reach);

/// sum_j sum_l a_j conj(a_l) G_jl
Complex gram_quadratic_form(const GramReport& report, std::span<const Complex> coefficients);

/// D psi: the catalog partner when there is one, otherwise psi transformed
/// onto its own rule. InputError if psi dips below -1e-12 max(1, max|psi|).
FunctionHandle bochner_forward(const MultiplicityConfig& config, const QuadratureSpec& quad,
                               const FunctionHandle& psi);

/// psi = D phi by quadrature with `quad`, sampled on the nodes of `output`.
/// PASS when min Re psi >= -1e-8 max psi and max |Im psi| <= 1e-8 max |psi|.
/// details carry the minimum, its location and the extent of the negative region.
IdentityReport bochner_certify(const MultiplicityConfig& config, const QuadratureSpec& quad,
                               const FunctionHandle& phi,
                               std::optional<QuadratureSpec> output = std::nullopt);

/// |phi(x)| <= phi(0) + 1e-10 and 0 <= tau_x phi(x) <= phi(0) + 1e-8 at every x.
/// `quad` is the spectral rule.
IdentityReport bound_check(const MultiplicityConfig& config, const QuadratureSpec& quad,
                           const FunctionHandle& phi, std::span<const Point> xs);

/// Gram PSD verdicts for phi1 * phi2 (convolution) and, for radial inputs,
/// phi1 phi2 (product) on builtin:5. DomainError for a non-radial product.
std::vector<IdentityReport> closure_suite(const MultiplicityConfig& config,
                                          const QuadratureSpec& quad, const FunctionHandle& phi1,
                                          const FunctionHandle& phi2);

/// c <phi * g_t, g_t> with g_t = sum_j a_j tau_{x_j} G_t, D G_t = e^{-t|xi|^2},
/// evaluated on the transform side as c int D phi |D g_t|^2 h^2 over the
/// spectral rule `quad` (nodes added to resolve the kernels). Converges to
/// gram_quadratic_form as t -> 0.
Complex quadratic_form_heat(const MultiplicityConfig& config, const QuadratureSpec& quad,
                            const FunctionHandle& phi, const PointSet& pts, double t);

/// c (2t)^{-(gamma + d/2)} e^{-(|x|^2+|y|^2)/4t} E(x/sqrt(2t), y/sqrt(2t))
double heat_kernel(const MultiplicityConfig& config, double t, std::span<const double> x,
                   std::span<const double> y);

/// int heat_kernel(t, x, y) h^2(y) dy = 1; tolerance 1e-6.
IdentityReport heat_mass(const MultiplicityConfig& config, double t, std::span<const double> x);

/// int |x|^a K_a(|x|) h^2 dx with a = p - gamma - d/2 against Gamma(p) 2^{p-1} / c.
/// details also carry Gamma(p) / (c 2^{p-1}) and whether each constant matches.
IdentityReport bessel_integral_identity(const MultiplicityConfig& config,
                                        const QuadratureSpec& quad, double p);

/// n x m matrix [E(-i x_j, xi_m)] and its smallest singular value, without
/// checking the points.
double smallest_singular_value(const MultiplicityConfig& config, std::span<const Point> xs,
                               std::span<const Point> xis);

/// As above; rejects duplicate xs and m < n.
double kernel_independence(const MultiplicityConfig& config, std::span<const Point> xs,
                           std::span<const Point> xis);

/// m probes in [-radius, radius]^d: evenly spaced in d = 1, a Kronecker
/// sequence otherwise.
std::vector<Point> probe_points(int dimension, int m, double radius);

/// Bochner PASS, a nonzero transform, and SPD Gram matrices on builtin:3, 5
/// and 8. PreconditionError when phi vanishes or fails the Bochner check.
IdentityReport strict_pd_certify(const MultiplicityConfig& config, const QuadratureSpec& quad,
                                 const FunctionHandle& phi,
                                 std::optional<QuadratureSpec> output = std::nullopt);

nlohmann::json to_json_value(const GramReport& report);
/// row,col,re,im
std::string gram_csv(const GramReport& report);

}  // namespace dunkl
