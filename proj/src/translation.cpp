#include "dunkl/translation.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/errors.hpp"
#include "dunkl/transform.hpp"

namespace dunkl {
namespace {

double sup_norm(std::span<const double> x)
{
    double m = 0.0;
    for (double v : x)
        m = std::max(m, std::abs(v));
    return m;
}

double grid_reach(const TensorGrid& grid)
{
    const auto& nodes = grid.axis().nodes;
    return std::max(std::abs(nodes.front()), std::abs(nodes.back()));
}

QuadratureSpec effective(const QuadratureSpec& quad, double reach)
{
    quad.validate();
    return resolving_quadrature(quad.radius, reach, quad.nodes_per_axis);
}

Point negated(std::span<const double> x)
{
    Point out(x.begin(), x.end());
    for (double& v : out)
        v = -v;
    return out;
}

// c sum mu_k D f(xi_k) conj K(x, xi_k) K(y, xi_k)
Complex translate_at(const MultiplicityConfig& config, const QuadratureSpec& spec,
                     const FunctionHandle& f, std::span<const double> y, std::span<const double> x)
{
    const TensorGrid grid(config.dimension, spec);
    const auto s = spectrum_on(config, f, grid);
    const auto kx = kernel_on(config, grid, x);
    const auto ky = kernel_on(config, grid, y);
    std::vector<Complex> terms(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k)
        terms[k] = s[k] * std::conj(kx[k]) * ky[k];
    return config.mehta * integrate(config, grid, terms);
}

Complex convolve_at(const MultiplicityConfig& config, const QuadratureSpec& spec,
                    const FunctionHandle& f, const FunctionHandle& g, std::span<const double> x)
{
    const TensorGrid grid(config.dimension, spec);
    const auto sf = spectrum_on(config, f, grid);
    const auto sg = spectrum_on(config, g, grid);
    const auto kx = kernel_on(config, grid, x);
    std::vector<Complex> terms(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k)
        terms[k] = sf[k] * sg[k] * std::conj(kx[k]);
    return config.mehta * integrate(config, grid, terms);
}

double norm_p(const MultiplicityConfig& config, const TensorGrid& grid,
              std::span<const Complex> values, double p)
{
    return std::pow(config.mehta, 1.0 / p) * lp_norm(config, grid, values, p);
}

}  // namespace

Estimate translate(const MultiplicityConfig& config, const QuadratureSpec& quad,
                   const FunctionHandle& f, std::span<const double> y, std::span<const double> x)
{
    validate(config, f);
    const auto spec = effective(quad, sup_norm(x) + sup_norm(y));
    Estimate e;
    e.value = translate_at(config, spec.refined(), f, y, x);
    e.error = std::abs(e.value - translate_at(config, spec, f, y, x));
    flag_accuracy(e, std::abs(e.value));
    return e;
}

std::vector<Complex> translate_on(const MultiplicityConfig& config, const QuadratureSpec& quad,
                                  const FunctionHandle& f, std::span<const double> y,
                                  const TensorGrid& grid)
{
    validate(config, f);
    const TensorGrid spectral(config.dimension, effective(quad, grid_reach(grid) + sup_norm(y)));
    auto values = spectrum_on(config, f, spectral);
    const auto ky = kernel_on(config, spectral, y);
    for (std::size_t k = 0; k < values.size(); ++k)
        values[k] *= ky[k];
    return transform_grid(config, spectral, values, grid, Direction::inverse);
}

QuadratureSpec spatial_quadrature(const MultiplicityConfig& config, const FunctionHandle& f,
                                  double shift, double frequency, double eps)
{
    const double radius = decay_radius(config, f, eps, DecayCriterion::tail_mass) + shift;
    return resolving_quadrature(radius, frequency, default_quadrature(config.dimension).nodes_per_axis);
}

IdentityReport translate_mass(const MultiplicityConfig& config, const QuadratureSpec& quad,
                              const FunctionHandle& f, std::span<const double> y)
{
    validate(config, f);
    if (!is_radial(f))
        throw DomainError("translate_mass requires a radial function");
    const TensorGrid own(config.dimension, spatial_quadrature(config, f, 0.0, quad.radius));
    const TensorGrid shifted(config.dimension, spatial_quadrature(config, f, sup_norm(y), quad.radius));

    const Complex expected = integrate(config, own, values_on(config, f, own));
    const Complex computed = integrate(config, shifted, translate_on(config, quad, f, y, shifted));
    auto report = make_report("translate_mass", config, expected, computed, 1e-6,
                              "int tau_y f h^2 vs int f h^2 for " + describe(f));
    report.details["y"] = Point(y.begin(), y.end());
    report.details["ratio"] = std::abs(computed) / std::abs(expected);
    return report;
}

Estimate convolve(const MultiplicityConfig& config, const QuadratureSpec& quad,
                  const FunctionHandle& f, const FunctionHandle& g, std::span<const double> x)
{
    validate(config, f);
    validate(config, g);
    const auto spec = effective(quad, sup_norm(x));
    Estimate e;
    e.value = convolve_at(config, spec.refined(), f, g, x);
    e.error = std::abs(e.value - convolve_at(config, spec, f, g, x));
    flag_accuracy(e, std::abs(e.value));
    return e;
}

std::vector<Complex> convolve_on(const MultiplicityConfig& config, const QuadratureSpec& quad,
                                 const FunctionHandle& f, const FunctionHandle& g,
                                 const TensorGrid& grid)
{
    validate(config, f);
    validate(config, g);
    const TensorGrid spectral(config.dimension, effective(quad, grid_reach(grid)));
    auto values = spectrum_on(config, f, spectral);
    const auto sg = spectrum_on(config, g, spectral);
    for (std::size_t k = 0; k < values.size(); ++k)
        values[k] *= sg[k];
    return transform_grid(config, spectral, values, grid, Direction::inverse);
}

IdentityReport translation_identity(const MultiplicityConfig& config, const QuadratureSpec& quad,
                                    const FunctionHandle& f, std::span<const double> x)
{
    const Point zero(config.dimension, 0.0);
    const auto e = translate(config, quad, f, zero, x);
    auto report = make_report("translation_identity", config, evaluate(config, f, x), e.value, 1e-7,
                              "tau_0 f(x) = f(x) for " + describe(f));
    report.details["x"] = Point(x.begin(), x.end());
    report.details["resolution_error"] = e.error;
    return report;
}

IdentityReport translation_duality(const MultiplicityConfig& config, const QuadratureSpec& quad,
                                   const FunctionHandle& f, const FunctionHandle& g,
                                   std::span<const double> y)
{
    validate(config, f);
    validate(config, g);
    const double radius = std::max(decay_radius(config, f, 1e-10), decay_radius(config, g, 1e-10)) +
                          sup_norm(y);
    const TensorGrid grid(config.dimension,
                          resolving_quadrature(radius, quad.radius,
                                               default_quadrature(config.dimension).nodes_per_axis));
    const auto fv = values_on(config, f, grid);
    const auto gv = values_on(config, g, grid);
    const auto tf = translate_on(config, quad, f, y, grid);
    const auto tg = translate_on(config, quad, g, negated(y), grid);
    std::vector<Complex> lhs(grid.size());
    std::vector<Complex> rhs(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        lhs[k] = tf[k] * gv[k];
        rhs[k] = fv[k] * tg[k];
    }
    auto report = make_report("translation_duality", config, integrate(config, grid, rhs),
                              integrate(config, grid, lhs), 1e-6,
                              "int tau_y f g h^2 (computed) vs int f tau_{-y} g h^2 (expected): " +
                                  describe(f) + ", " + describe(g));
    report.details["y"] = Point(y.begin(), y.end());
    return report;
}

IdentityReport point_symmetry(const MultiplicityConfig& config, const QuadratureSpec& quad,
                              const FunctionHandle& f, std::span<const double> x,
                              std::span<const double> y)
{
    const auto lhs = translate(config, quad, f, y, x);
    const auto rhs = translate(config, quad, f, negated(x), negated(y));
    auto report = make_report("point_symmetry", config, rhs.value, lhs.value, 1e-7,
                              "tau_y f(x) (computed) vs tau_{-x} f(-y) (expected) for " + describe(f));
    report.details["x"] = Point(x.begin(), x.end());
    report.details["y"] = Point(y.begin(), y.end());
    return report;
}

IdentityReport convolution_commutativity(const MultiplicityConfig& config,
                                         const QuadratureSpec& quad, const FunctionHandle& f,
                                         const FunctionHandle& g, std::span<const double> x)
{
    const auto fg = convolve(config, quad, f, g, x);
    const auto gf = convolve(config, quad, g, f, x);
    auto report = make_report("convolution_commutativity", config, gf.value, fg.value, 1e-10,
                              "f*g (computed) vs g*f (expected): " + describe(f) + ", " + describe(g));
    report.details["x"] = Point(x.begin(), x.end());
    return report;
}

IdentityReport convolution_product_rule(const MultiplicityConfig& config,
                                        const QuadratureSpec& quad, const FunctionHandle& f,
                                        const FunctionHandle& g, std::span<const double> xi)
{
    validate(config, f);
    validate(config, g);
    const double radius = std::max(decay_radius(config, f, 1e-10), decay_radius(config, g, 1e-10));
    const QuadratureSpec spatial = resolving_quadrature(
        radius, std::max(quad.radius, sup_norm(xi)), default_quadrature(config.dimension).nodes_per_axis);
    const TensorGrid grid(config.dimension, spatial);
    const auto conv = convolve_on(config, quad, f, g, grid);

    const Point target(xi.begin(), xi.end());
    const Complex computed =
        transform_points(config, grid, conv, std::span<const Point>(&target, 1), Direction::forward)[0];
    const Complex expected = spectrum_at(config, f, std::span<const Point>(&target, 1))[0] *
                             spectrum_at(config, g, std::span<const Point>(&target, 1))[0];
    auto report = make_report("convolution_product_rule", config, expected, computed, 1e-6,
                              "D(f*g)(xi) (computed) vs Df(xi) Dg(xi) (expected): " + describe(f) +
                                  ", " + describe(g));
    report.details["xi"] = target;
    report.details["spatial_rule"] = {spatial.radius, spatial.nodes_per_axis};
    return report;
}

IdentityReport young_bound(const MultiplicityConfig& config, const QuadratureSpec& quad,
                           const FunctionHandle& f, const FunctionHandle& g)
{
    validate(config, f);
    validate(config, g);
    const double radius = std::max(decay_radius(config, f, 1e-10), decay_radius(config, g, 1e-10));
    const TensorGrid grid(config.dimension,
                          resolving_quadrature(radius, quad.radius,
                                               default_quadrature(config.dimension).nodes_per_axis));
    const auto conv = convolve_on(config, quad, f, g, grid);
    const double lhs = norm_p(config, grid, conv, 2.0);
    const double g1 = norm_p(config, grid, values_on(config, g, grid), 1.0);
    const double f2 = norm_p(config, grid, values_on(config, f, grid), 2.0);
    auto report = make_bound_report("young_bound", config, g1 * f2, lhs, 1e-6,
                                    "||f*g||_2 <= ||g||_1 ||f||_2: " + describe(f) + ", " + describe(g));
    report.details["conv_l2"] = lhs;
    report.details["g_l1"] = g1;
    report.details["f_l2"] = f2;
    return report;
}

IdentityReport convolution_consistency(const MultiplicityConfig& config,
                                       const QuadratureSpec& quad, const FunctionHandle& f,
                                       const FunctionHandle& g, std::span<const double> x)
{
    validate(config, f);
    validate(config, g);
    const auto spectral_value = convolve(config, quad, f, g, x);

    const TensorGrid ygrid(config.dimension,
                           resolving_quadrature(decay_radius(config, f, 1e-12), quad.radius + sup_norm(x),
                                                default_quadrature(config.dimension).nodes_per_axis));
    const TensorGrid spectral(config.dimension, effective(quad, grid_reach(ygrid) + sup_norm(x)));
    const auto sg = spectrum_on(config, g, spectral);
    const auto kx = kernel_on(config, spectral, x);
    std::vector<Complex> shifted(spectral.size());
    for (std::size_t k = 0; k < shifted.size(); ++k)
        shifted[k] = kx[k] * sg[mirror_index(spectral, k)];
    const auto tau = transform_grid(config, spectral, shifted, ygrid, Direction::inverse);
    const auto fv = values_on(config, f, ygrid);
    std::vector<Complex> terms(ygrid.size());
    for (std::size_t k = 0; k < terms.size(); ++k)
        terms[k] = fv[k] * tau[k];
    const Complex direct = config.mehta * integrate(config, ygrid, terms);

    auto report = make_report("convolution_consistency", config, direct, spectral_value.value, 1e-5,
                              "spectral f*g (computed) vs c int f(y) tau_x g^v(y) h^2 dy (expected): " +
                                  describe(f) + ", " + describe(g));
    report.details["x"] = Point(x.begin(), x.end());
    return report;
}

}  // namespace dunkl
