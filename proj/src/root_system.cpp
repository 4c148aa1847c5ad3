#include "dunkl/root_system.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {

MultiplicityConfig make_config(int dimension, std::vector<double> kappa)
{
    if (dimension < 1)
        throw ConfigError("dimension must be positive, got " + std::to_string(dimension));
    if (static_cast<int>(kappa.size()) != dimension)
        throw ConfigError("kappa has " + std::to_string(kappa.size()) + " entries, dimension is " +
                          std::to_string(dimension));
    for (double k : kappa) {
        if (!(k >= 0.0) || !std::isfinite(k))
            throw ConfigError("multiplicities must be finite and nonnegative");
    }
    if (dimension > kMaxDimension)
        throw UnsupportedDimension("dimension " + std::to_string(dimension) +
                                   " exceeds the tensor quadrature limit of 3");

    MultiplicityConfig config;
    config.dimension = dimension;
    config.kappa = std::move(kappa);
    config.gamma = std::accumulate(config.kappa.begin(), config.kappa.end(), 0.0);
    config.lambda_index = config.gamma + (dimension - 2) / 2.0;

    // Each axis contributes int |t|^{2k} e^{-t^2/2} dt = 2^{k+1/2} Gamma(k + 1/2).
    double inverse = 1.0;
    for (double k : config.kappa)
        inverse *= std::pow(2.0, k + 0.5) * gamma_fn(k + 0.5);
    config.mehta = 1.0 / inverse;
    return config;
}

double axis_weight(double kappa, double x)
{
    if (kappa == 0.0)
        return 1.0;
    return std::pow(std::abs(x), 2.0 * kappa);
}

double weight(const MultiplicityConfig& config, std::span<const double> x)
{
    double w = 1.0;
    for (int i = 0; i < config.dimension; ++i)
        w *= axis_weight(config.kappa[i], x[i]);
    return w;
}

Point reflect(std::span<const double> x, Reflection r)
{
    if (r.axis < 1 || r.axis > static_cast<int>(x.size()))
        throw ConfigError("reflection axis " + std::to_string(r.axis) + " out of range");
    Point out(x.begin(), x.end());
    out[r.axis - 1] = -out[r.axis - 1];
    return out;
}

void to_json(nlohmann::json& j, const MultiplicityConfig& config)
{
    j = nlohmann::json{{"dimension", config.dimension}, {"kappa", config.kappa}};
}

void from_json(const nlohmann::json& j, MultiplicityConfig& config)
{
    if (!j.is_object() || !j.contains("dimension") || !j.contains("kappa"))
        throw ConfigError("config JSON needs \"dimension\" and \"kappa\"");
    if (!j.at("dimension").is_number_integer() || !j.at("kappa").is_array())
        throw ConfigError("config JSON has wrongly typed fields");
    std::vector<double> kappa;
    for (const auto& k : j.at("kappa")) {
        if (!k.is_number())
            throw ConfigError("kappa entries must be numbers");
        kappa.push_back(k.get<double>());
    }
    config = make_config(j.at("dimension").get<int>(), std::move(kappa));
}

}  // namespace dunkl
