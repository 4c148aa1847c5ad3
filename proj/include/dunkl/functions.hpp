#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dunkl/kernel.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

/// exp(-t |x|^2)
struct Gaussian {
    double t = 1.0;
};

/// (2t)^{-(gamma + d/2)} exp(-|x|^2 / 4t), the transform partner of Gaussian{t}.
struct GaussianDensity {
    double t = 1.0;
};

/// (1 + |x|^2)^{-p}
struct GeneralizedCauchy {
    double p = 2.0;
};

/// (Gamma(p) 2^{p-1})^{-1} |x|^a K_a(|x|) with a = p - gamma - d/2, the
/// transform partner of GeneralizedCauchy{p}.
struct BesselKProfile {
    double p = 2.0;
};

/// Complex values on a rectangular, sorted tensor grid. Evaluation between
/// nodes is multilinear and zero outside the grid box.
///
/// When the grid is the node set of a QuadratureSpec, `origin` records it and
/// integrals use the nodes directly.
class SampledFunction {
public:
    SampledFunction(std::vector<std::vector<double>> axes, std::vector<Complex> values,
                    std::optional<QuadratureSpec> origin = std::nullopt);

    [[nodiscard]] int dimension() const { return static_cast<int>(data_->axes.size()); }
    [[nodiscard]] const std::vector<std::vector<double>>& axes() const { return data_->axes; }
    [[nodiscard]] const std::vector<Complex>& values() const { return data_->values; }
    [[nodiscard]] const std::optional<QuadratureSpec>& origin() const { return data_->origin; }

    /// Half-width of the smallest centered box containing the grid.
    [[nodiscard]] double extent() const;
    [[nodiscard]] Complex operator()(std::span<const double> x) const;
    /// True when the grid coincides with the tensor nodes of `grid`.
    [[nodiscard]] bool matches(const TensorGrid& grid) const;

private:
    struct Data {
        std::vector<std::vector<double>> axes;
        std::vector<Complex> values;
        std::optional<QuadratureSpec> origin;
    };
    std::shared_ptr<const Data> data_;
};

using FunctionHandle =
    std::variant<Gaussian, GaussianDensity, GeneralizedCauchy, BesselKProfile, SampledFunction>;

/// Throws ConfigError when catalog parameters leave their domain: t > 0, and
/// p >= gamma + d/2 + 1 for the Cauchy / Bessel-K pair.
void validate(const MultiplicityConfig& config, const FunctionHandle& f);

Complex evaluate(const MultiplicityConfig& config, const FunctionHandle& f,
                 std::span<const double> x);

bool is_catalog(const FunctionHandle& f);
/// Catalog functions are radial; sampled functions are not assumed to be.
bool is_radial(const FunctionHandle& f);

std::string describe(const FunctionHandle& f);

/// Value of a catalog function at radius r.
double radial_profile(const MultiplicityConfig& config, const FunctionHandle& f, double r);

/// Exact transform partner of a catalog function, including BesselKProfile ->
/// GeneralizedCauchy. Empty for sampled functions.
std::optional<FunctionHandle> transform_partner(const MultiplicityConfig& config,
                                                const FunctionHandle& f);

enum class DecayCriterion {
    /// Tail mass of |f| h^2 beyond the radius below eps times the total mass.
    tail_mass,
    /// Radial density |f(r)| r^{2 gamma + d - 1} below eps times its peak.
    pointwise,
};

/// Radius beyond which f is negligible against h^2 in the given sense. For
/// sampled functions this is the grid extent.
double decay_radius(const MultiplicityConfig& config, const FunctionHandle& f, double eps,
                    DecayCriterion criterion = DecayCriterion::tail_mass);

/// Samples f on the tensor nodes of `spec`.
SampledFunction sample(const MultiplicityConfig& config, const FunctionHandle& f,
                       const QuadratureSpec& spec);

SampledFunction sample(int dimension, const QuadratureSpec& spec,
                       const std::function<Complex(std::span<const double>)>& generator);

/// f(x) on the tensor nodes of `grid`, in flat order.
std::vector<Complex> values_on(const MultiplicityConfig& config, const FunctionHandle& f,
                               const TensorGrid& grid);

}  // namespace dunkl
