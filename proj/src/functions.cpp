#include "dunkl/functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "dunkl/errors.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

SampledFunction::SampledFunction(std::vector<std::vector<double>> axes,
                                 std::vector<Complex> values,
                                 std::optional<QuadratureSpec> origin)
{
    if (axes.empty() || axes.size() > static_cast<std::size_t>(kMaxDimension))
        throw ConfigError("sampled functions need 1 to 3 axes");
    std::size_t expected = 1;
    for (const auto& axis : axes) {
        if (axis.size() < 2)
            throw ConfigError("each sampled axis needs at least two nodes");
        if (!std::is_sorted(axis.begin(), axis.end()) ||
            std::adjacent_find(axis.begin(), axis.end()) != axis.end())
            throw ConfigError("sampled axes must be strictly increasing");
        expected *= axis.size();
    }
    if (values.size() != expected)
        throw ConfigError("sampled values do not fill the grid");
    data_ = std::make_shared<const Data>(Data{std::move(axes), std::move(values), origin});
}

double SampledFunction::extent() const
{
    double e = 0.0;
    for (const auto& axis : data_->axes)
        e = std::max({e, std::abs(axis.front()), std::abs(axis.back())});
    return e;
}

Complex SampledFunction::operator()(std::span<const double> x) const
{
    const auto& axes = data_->axes;
    const int d = dimension();
    if (static_cast<int>(x.size()) != d)
        throw ConfigError("point dimension does not match sampled function");

    std::array<std::size_t, kMaxDimension> lo{};
    std::array<double, kMaxDimension> frac{};
    for (int i = 0; i < d; ++i) {
        const auto& axis = axes[i];
        if (x[i] < axis.front() || x[i] > axis.back())
            return {};
        auto it = std::upper_bound(axis.begin(), axis.end(), x[i]);
        std::size_t hi = std::min<std::size_t>(it - axis.begin(), axis.size() - 1);
        lo[i] = hi - 1;
        frac[i] = (x[i] - axis[lo[i]]) / (axis[hi] - axis[lo[i]]);
    }

    Complex out{};
    for (int corner = 0; corner < (1 << d); ++corner) {
        double w = 1.0;
        std::size_t flat = 0;
        for (int i = 0; i < d; ++i) {
            const bool upper = (corner >> i) & 1;
            w *= upper ? frac[i] : 1.0 - frac[i];
            flat = flat * axes[i].size() + lo[i] + (upper ? 1 : 0);
        }
        if (w != 0.0)
            out += w * data_->values[flat];
    }
    return out;
}

bool SampledFunction::matches(const TensorGrid& grid) const
{
    if (grid.dimension() != dimension())
        return false;
    const auto& nodes = grid.axis().nodes;
    const double tol = 1e-12 * std::max(1.0, std::abs(nodes.back()));
    for (const auto& axis : data_->axes) {
        if (axis.size() != nodes.size())
            return false;
        for (std::size_t k = 0; k < axis.size(); ++k)
            if (std::abs(axis[k] - nodes[k]) > tol)
                return false;
    }
    return true;
}

namespace {

double cauchy_threshold(const MultiplicityConfig& config) { return config.homogeneity() + 1.0; }

double bessel_order(const MultiplicityConfig& config, double p) { return p - config.homogeneity(); }

double norm(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x)
        s += v * v;
    return std::sqrt(s);
}

}  // namespace

void validate(const MultiplicityConfig& config, const FunctionHandle& f)
{
    std::visit(overloaded{
                   [](const Gaussian& g) {
                       if (!(g.t > 0.0))
                           throw ConfigError("gaussian needs t > 0");
                   },
                   [](const GaussianDensity& g) {
                       if (!(g.t > 0.0))
                           throw ConfigError("gaussian_density needs t > 0");
                   },
                   [&](const GeneralizedCauchy& c) {
                       if (!(c.p >= cauchy_threshold(config)))
                           throw ConfigError("cauchy needs p >= gamma + d/2 + 1 = " +
                                             std::to_string(cauchy_threshold(config)));
                   },
                   [&](const BesselKProfile& k) {
                       if (!(k.p >= cauchy_threshold(config)))
                           throw ConfigError("bessel_k_profile needs p >= gamma + d/2 + 1 = " +
                                             std::to_string(cauchy_threshold(config)));
                   },
                   [&](const SampledFunction& s) {
                       if (s.dimension() != config.dimension)
                           throw ConfigError("sampled function dimension does not match config");
                   },
               },
               f);
}

double radial_profile(const MultiplicityConfig& config, const FunctionHandle& f, double r)
{
    return std::visit(
        overloaded{
            [&](const Gaussian& g) { return std::exp(-g.t * r * r); },
            [&](const GaussianDensity& g) {
                return std::pow(2.0 * g.t, -config.homogeneity()) * std::exp(-r * r / (4.0 * g.t));
            },
            [&](const GeneralizedCauchy& c) { return std::pow(1.0 + r * r, -c.p); },
            [&](const BesselKProfile& k) {
                const double a = bessel_order(config, k.p);
                const double scale = 1.0 / (gamma_fn(k.p) * std::pow(2.0, k.p - 1.0));
                if (r == 0.0)
                    return scale * std::pow(2.0, a - 1.0) * gamma_fn(a);
                if (r > 700.0)
                    return 0.0;
                return scale * std::pow(r, a) * bessel_k(a, r);
            },
            [&](const SampledFunction&) -> double {
                throw NotInCatalog("sampled functions have no radial profile");
            },
        },
        f);
}

Complex evaluate(const MultiplicityConfig& config, const FunctionHandle& f,
                 std::span<const double> x)
{
    if (const auto* s = std::get_if<SampledFunction>(&f))
        return (*s)(x);
    if (static_cast<int>(x.size()) != config.dimension)
        throw ConfigError("point dimension does not match config");
    return radial_profile(config, f, norm(x));
}

bool is_catalog(const FunctionHandle& f) { return !std::holds_alternative<SampledFunction>(f); }

bool is_radial(const FunctionHandle& f) { return is_catalog(f); }

std::string describe(const FunctionHandle& f)
{
    std::ostringstream os;
    os.precision(17);
    std::visit(overloaded{
                   [&](const Gaussian& g) { os << "gaussian:t=" << g.t; },
                   [&](const GaussianDensity& g) { os << "gaussian_density:t=" << g.t; },
                   [&](const GeneralizedCauchy& c) { os << "cauchy:p=" << c.p; },
                   [&](const BesselKProfile& k) { os << "bessel_k_profile:p=" << k.p; },
                   [&](const SampledFunction& s) {
                       os << "sampled[" << s.dimension() << "d, " << s.values().size() << " nodes]";
                   },
               },
               f);
    return os.str();
}

std::optional<FunctionHandle> transform_partner(const MultiplicityConfig&, const FunctionHandle& f)
{
    return std::visit(overloaded{
                          [](const Gaussian& g) -> std::optional<FunctionHandle> {
                              return GaussianDensity{g.t};
                          },
                          [](const GaussianDensity& g) -> std::optional<FunctionHandle> {
                              return Gaussian{g.t};
                          },
                          [](const GeneralizedCauchy& c) -> std::optional<FunctionHandle> {
                              return BesselKProfile{c.p};
                          },
                          [](const BesselKProfile& k) -> std::optional<FunctionHandle> {
                              return GeneralizedCauchy{k.p};
                          },
                          [](const SampledFunction&) -> std::optional<FunctionHandle> {
                              return std::nullopt;
                          },
                      },
                      f);
}

double decay_radius(const MultiplicityConfig& config, const FunctionHandle& f, double eps,
                    DecayCriterion criterion)
{
    if (const auto* s = std::get_if<SampledFunction>(&f))
        return s->extent();

    const double power = 2.0 * config.gamma + config.dimension - 1.0;
    auto envelope = [&](double r) {
        return std::abs(radial_profile(config, f, r)) * (r > 0.0 ? std::pow(r, power) : (power == 0 ? 1.0 : 0.0));
    };

    // Scan: fine steps near the origin, geometric growth further out.
    std::vector<double> radii;
    for (double r = 0.0; r < 8.0; r += 0.01)
        radii.push_back(r);
    for (double r = 8.0; r < 1e7; r *= 1.01)
        radii.push_back(r);

    std::vector<double> env(radii.size());
    double peak = 0.0;
    double mass = 0.0;
    for (std::size_t k = 0; k < radii.size(); ++k) {
        env[k] = envelope(radii[k]);
        peak = std::max(peak, env[k]);
        if (k > 0)
            mass += 0.5 * (env[k] + env[k - 1]) * (radii[k] - radii[k - 1]);
    }

    const double ref = criterion == DecayCriterion::tail_mass ? mass : peak;
    std::size_t last_bad = 0;
    for (std::size_t k = 0; k < radii.size(); ++k) {
        const double measure = criterion == DecayCriterion::tail_mass
                                   ? env[k] * std::max(radii[k], 1.0)
                                   : env[k];
        if (measure > eps * ref)
            last_bad = k;
    }
    const double r = radii[std::min(last_bad + 1, radii.size() - 1)];
    return std::max(1.0, std::ceil(2.0 * r) / 2.0);
}

SampledFunction sample(int dimension, const QuadratureSpec& spec,
                       const std::function<Complex(std::span<const double>)>& generator)
{
    const TensorGrid grid(dimension, spec);
    std::vector<Complex> values(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const Point x = grid.node(k);
        values[k] = generator(x);
    }
    std::vector<std::vector<double>> axes(dimension, grid.axis().nodes);
    return SampledFunction(std::move(axes), std::move(values), spec);
}

SampledFunction sample(const MultiplicityConfig& config, const FunctionHandle& f,
                       const QuadratureSpec& spec)
{
    return sample(config.dimension, spec,
                  [&](std::span<const double> x) { return evaluate(config, f, x); });
}

std::vector<Complex> values_on(const MultiplicityConfig& config, const FunctionHandle& f,
                               const TensorGrid& grid)
{
    if (const auto* s = std::get_if<SampledFunction>(&f); s && s->matches(grid))
        return s->values();

    std::vector<Complex> out(grid.size());
    if (is_catalog(f)) {
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const Point x = grid.node(k);
            out[k] = radial_profile(config, f, norm(x));
        }
        return out;
    }
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const Point x = grid.node(k);
        out[k] = evaluate(config, f, x);
    }
    return out;
}

}  // namespace dunkl
