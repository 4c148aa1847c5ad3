#pragma once

#include <span>
#include <vector>

#include <json.hpp>

namespace dunkl {

using Point = std::vector<double>;

inline constexpr int kMaxDimension = 3;

/// Multiplicity data for the reflection group Z_2^d acting by coordinate sign
/// flips, together with the derived indices and the Mehta constant.
///
/// The weight is h^2(x) = prod_i |x_i|^{2 kappa_i}; gamma is the homogeneity
/// degree of h and lambda = gamma + (d - 2) / 2.
struct MultiplicityConfig {
    int dimension = 1;
    std::vector<double> kappa{0.0};
    double gamma = 0.0;
    double lambda_index = -0.5;
    /// c = [ int h^2(x) exp(-|x|^2 / 2) dx ]^{-1}
    double mehta = 0.0;

    /// gamma + d/2, the exponent that appears in every Gaussian transform pair.
    [[nodiscard]] double homogeneity() const { return gamma + 0.5 * dimension; }
};

/// Reflection in the hyperplane orthogonal to the coordinate axis `axis` (1-based).
struct Reflection {
    int axis = 1;
};

/// Builds a configuration and fills in gamma, lambda and the closed-form Mehta
/// constant prod_i [2^{kappa_i + 1/2} Gamma(kappa_i + 1/2)]^{-1}.
///
/// Throws ConfigError on a size mismatch or negative multiplicity and
/// UnsupportedDimension when dimension > 3.
MultiplicityConfig make_config(int dimension, std::vector<double> kappa);

/// h^2(x) = prod_i |x_i|^{2 kappa_i}, with 0^0 = 1.
double weight(const MultiplicityConfig& config, std::span<const double> x);

/// h^2 restricted to a single axis.
double axis_weight(double kappa, double x);

Point reflect(std::span<const double> x, Reflection r);

void to_json(nlohmann::json& j, const MultiplicityConfig& config);
void from_json(const nlohmann::json& j, MultiplicityConfig& config);

}  // namespace dunkl
