#pragma once

#include <span>
#include <vector>

#include "dunkl/functions.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/report.hpp"

namespace dunkl {

/// forward:  D f(xi) = c int f(y) E(-i xi, y) h^2(y) dy
/// inverse:  D^{-1} g(x) = c int g(y) E(i x, y) h^2(y) dy
enum class Direction { forward, inverse };

/// Transform of tensor-grid data onto arbitrary target points. `values` are
/// f at the source nodes; the measure c w h^2 is applied here.
std::vector<Complex> transform_points(const MultiplicityConfig& config, const TensorGrid& source,
                                      std::span<const Complex> values,
                                      std::span<const Point> targets, Direction direction);

/// Transform of tensor-grid data onto the nodes of another tensor grid, by
/// contracting one axis at a time (cost O(d n^{d+1}) instead of O(n^{2d})).
std::vector<Complex> transform_grid(const MultiplicityConfig& config, const TensorGrid& source,
                                    std::span<const Complex> values, const TensorGrid& target,
                                    Direction direction);

/// Quadrature transform at one point, evaluated at two resolutions.
///
/// Catalog functions are integrated at quad and quad.refined(); sampled
/// functions on their own grid, checked against their interpolation onto its refinement.
Estimate forward(const MultiplicityConfig& config, const QuadratureSpec& quad,
                 const FunctionHandle& f, std::span<const double> xi);

Estimate inverse(const MultiplicityConfig& config, const QuadratureSpec& quad,
                 const FunctionHandle& g, std::span<const double> x);

std::vector<Estimate> transform_many(const MultiplicityConfig& config, const QuadratureSpec& quad,
                                     const FunctionHandle& f, std::span<const Point> points,
                                     Direction direction);

/// Transform sampled on the tensor nodes of `output`, computed by quadrature
/// with `quad`. max_error is the largest coarse/fine difference.
struct GridTransform {
    SampledFunction function;
    /// Largest change between the two resolutions.
    double max_error = 0.0;
    /// Largest |value| on the outermost nodes of the output box, relative to the largest overall.
    double boundary_fraction = 0.0;
    /// max_error above 1e-8 of the L1 scale, or boundary_fraction above 1e-8.
    bool warning = false;
};

GridTransform transform_to_grid(const MultiplicityConfig& config, const QuadratureSpec& quad,
                                const FunctionHandle& f, const QuadratureSpec& output,
                                Direction direction);

/// Exact partner: Gaussian <-> GaussianDensity, GeneralizedCauchy -> BesselKProfile.
/// Throws NotInCatalog for BesselKProfile and sampled inputs.
FunctionHandle closed_form_transform(const MultiplicityConfig& config, const FunctionHandle& f);

/// D f at the nodes of `grid`: closed form for catalog functions, quadrature
/// over the function's own grid for sampled ones.
std::vector<Complex> spectrum_on(const MultiplicityConfig& config, const FunctionHandle& f,
                                 const TensorGrid& grid);

/// D f at arbitrary points, by the same routes as spectrum_on.
std::vector<Complex> spectrum_at(const MultiplicityConfig& config, const FunctionHandle& f,
                                 std::span<const Point> points);

/// K(a, xi_k) = E(-i a, xi_k) at every node of `grid`, in flat order.
std::vector<Complex> kernel_on(const MultiplicityConfig& config, const TensorGrid& grid,
                               std::span<const double> a);

/// Flat index of the node -x_k (the rules are symmetric about 0).
std::size_t mirror_index(const TensorGrid& grid, std::size_t flat);

/// Rule used to integrate a sampled function: its own quadrature grid when it
/// has one, otherwise a rule spanning its box.
QuadratureSpec integration_spec(const SampledFunction& f);

/// int |f|^p h^2 by quadrature.
double lp_norm(const MultiplicityConfig& config, const TensorGrid& grid,
               std::span<const Complex> values, double p);

/// int f h^2 by quadrature.
Complex integrate(const MultiplicityConfig& config, const TensorGrid& grid,
                  std::span<const Complex> values);

/// int D f g h^2 = int f D g h^2, both sides by quadrature on `quad` with the
/// transforms supplied by spectrum_on. Tolerance 1e-7.
IdentityReport plancherel_duality(const MultiplicityConfig& config, const QuadratureSpec& quad,
                                  const FunctionHandle& f, const FunctionHandle& g);

/// Rule sized for f: radius from decay_radius and enough nodes to resolve
/// oscillation up to `frequency` against that radius.
QuadratureSpec quadrature_for(const MultiplicityConfig& config, const FunctionHandle& f,
                              double frequency, double eps = 1e-12,
                              DecayCriterion criterion = DecayCriterion::tail_mass);

/// quadrature_for with the tail threshold loosened tenfold at a time (up to
/// 1e-3) until the refined grid has at most max_refined_nodes nodes.
QuadratureSpec budgeted_quadrature(const MultiplicityConfig& config, const FunctionHandle& f,
                                   double frequency, double eps = 1e-10,
                                   double max_refined_nodes = 1 << 22);

/// Rule for integrals against D f: radius from the decay of the closed-form
/// transform, nodes resolving kernels E(-i a, .) with |a| <= reach. Sampled
/// functions get the default radius.
QuadratureSpec spectral_quadrature(const MultiplicityConfig& config, const FunctionHandle& f,
                                   double reach, double eps = 1e-12);

/// inverse(forward(f)) against f at the probe points, both transforms by
/// quadrature. The spectrum is sampled on a rule whose tail holds at most
/// eps of its mass, and f is integrated on a rule resolving that spectrum.
/// Reports the worst relative error; tolerance 1e-6.
IdentityReport inversion_roundtrip(const MultiplicityConfig& config, const FunctionHandle& f,
                                   std::span<const Point> probes, double eps = 1e-7);

/// Gaussian master formula at imaginary arguments:
/// c int E(x,-iu) E(x,-iv) h^2 e^{-|x|^2/2} dx = e^{-(|u|^2+|v|^2)/2} E(u,-v).
IdentityReport master_formula(const MultiplicityConfig& config, const QuadratureSpec& quad,
                              std::span<const double> u, std::span<const double> v);

}  // namespace dunkl
