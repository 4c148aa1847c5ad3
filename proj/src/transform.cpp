#include "dunkl/transform.hpp"

#include <cmath>
#include <algorithm>
#include <map>

#include <Eigen/Dense>

#include "dunkl/errors.hpp"

namespace dunkl {
namespace {

using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

Matrix kernel_matrix(double kappa, std::span<const double> targets, std::span<const double> sources,
                     Direction direction)
{
    Matrix m(targets.size(), sources.size());
    for (std::size_t p = 0; p < targets.size(); ++p)
        for (std::size_t q = 0; q < sources.size(); ++q) {
            const Complex k = kernel_1d(kappa, targets[p], sources[q]);
            m(p, q) = direction == Direction::forward ? k : std::conj(k);
        }
    return m;
}

Vector kernel_vector(double kappa, double target, std::span<const double> sources, Direction direction)
{
    Vector v(sources.size());
    for (std::size_t q = 0; q < sources.size(); ++q) {
        const Complex k = kernel_1d(kappa, target, sources[q]);
        v(q) = direction == Direction::forward ? k : std::conj(k);
    }
    return v;
}

std::vector<Complex> weighted(const MultiplicityConfig& config, const TensorGrid& grid,
                              std::span<const Complex> values)
{
    if (values.size() != grid.size())
        throw ConfigError("value count does not match the quadrature grid");
    const auto measure = grid.weighted_measure(config);
    std::vector<Complex> out(values.size());
    for (std::size_t k = 0; k < values.size(); ++k)
        out[k] = config.mehta * measure[k] * values[k];
    return out;
}

void check_grid(const MultiplicityConfig& config, const TensorGrid& grid)
{
    if (grid.dimension() != config.dimension)
        throw ConfigError("grid dimension does not match config dimension");
}

// Values of f at the nodes of `spec`, by interpolation for off-grid samples.
std::vector<Complex> samples_for(const MultiplicityConfig& config, const FunctionHandle& f,
                                 const TensorGrid& grid)
{
    return values_on(config, f, grid);
}

// Barycentric interpolation between the Gauss-Legendre panels of two rules
// with the same radius, per axis. Weights (-1)^j sqrt((1 - s_j^2) w_j).
Eigen::MatrixXd panel_interpolation(const QuadratureSpec& from, const QuadratureSpec& to)
{
    const int half = from.nodes_per_axis / 2;
    const int target_half = to.nodes_per_axis / 2;
    const auto& src = gauss_legendre(half);
    const auto& dst = gauss_legendre(target_half);
    std::vector<double> bary(half);
    for (int j = 0; j < half; ++j)
        bary[j] = (j % 2 ? -1.0 : 1.0) * std::sqrt((1.0 - src.nodes[j] * src.nodes[j]) * src.weights[j]);

    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(target_half, half);
    for (int i = 0; i < target_half; ++i) {
        const double s = dst.nodes[i];
        double total = 0.0;
        for (int j = 0; j < half; ++j) {
            const double diff = s - src.nodes[j];
            if (diff == 0.0) {
                block.row(i).setZero();
                block(i, j) = 1.0;
                total = 1.0;
                break;
            }
            block(i, j) = bary[j] / diff;
            total += block(i, j);
        }
        block.row(i) /= total;
    }
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(2 * target_half, 2 * half);
    p.topLeftCorner(target_half, half) = block;
    p.bottomRightCorner(target_half, half) = block;
    return p;
}

std::vector<Complex> interpolate_rule(int d, const QuadratureSpec& from, const QuadratureSpec& to,
                                      const std::vector<Complex>& values)
{
    const Eigen::MatrixXd p = panel_interpolation(from, to);
    const auto m = static_cast<std::size_t>(p.rows());
    const auto n = static_cast<std::size_t>(p.cols());
    std::vector<std::size_t> shape(d, n);
    std::vector<Complex> current = values;
    for (int axis = 0; axis < d; ++axis) {
        std::size_t outer = 1;
        std::size_t inner = 1;
        for (int i = 0; i < axis; ++i)
            outer *= shape[i];
        for (int i = axis + 1; i < d; ++i)
            inner *= shape[i];
        std::vector<Complex> next(outer * m * inner);
        for (std::size_t o = 0; o < outer; ++o)
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t k = 0; k < n; ++k) {
                    const double w = p(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k));
                    if (w == 0.0)
                        continue;
                    const Complex* src = &current[(o * n + k) * inner];
                    Complex* dst = &next[(o * m + r) * inner];
                    for (std::size_t i = 0; i < inner; ++i)
                        dst[i] += w * src[i];
                }
        shape[axis] = m;
        current = std::move(next);
    }
    return current;
}

struct Level {
    TensorGrid grid;
    std::vector<Complex> values;
};

// The level whose values are reported, then the level it is checked against.
// Catalog functions: quad.refined(), then quad. Samples on the nodes of quad:
// the samples, then their interpolation onto quad.refined().
std::pair<Level, Level> levels_for(const MultiplicityConfig& config, const QuadratureSpec& quad,
                                   const FunctionHandle& f)
{
    validate(config, f);
    const TensorGrid base(config.dimension, quad);
    if (const auto* s = std::get_if<SampledFunction>(&f)) {
        if (s->matches(base)) {
            TensorGrid fine(config.dimension, quad.refined());
            auto fine_values = interpolate_rule(config.dimension, quad, quad.refined(), s->values());
            return {Level{base, s->values()}, Level{std::move(fine), std::move(fine_values)}};
        }
    }
    TensorGrid fine(config.dimension, quad.refined());
    auto fine_values = samples_for(config, f, fine);
    auto base_values = samples_for(config, f, base);
    return {Level{std::move(fine), std::move(fine_values)}, Level{base, std::move(base_values)}};
}

}  // namespace

std::vector<Complex> transform_points(const MultiplicityConfig& config, const TensorGrid& source,
                                      std::span<const Complex> values,
                                      std::span<const Point> targets, Direction direction)
{
    check_grid(config, source);
    const auto w = weighted(config, source, values);
    const auto& nodes = source.axis().nodes;
    const auto n = static_cast<Eigen::Index>(nodes.size());
    const int d = config.dimension;

    std::vector<Complex> out(targets.size());
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const Point& x = targets[t];
        if (static_cast<int>(x.size()) != d)
            throw ConfigError("target point dimension does not match config");
        std::vector<Vector> k;
        for (int i = 0; i < d; ++i)
            k.push_back(kernel_vector(config.kappa[i], x[i], nodes, direction));

        if (d == 1) {
            Eigen::Map<const Vector> v(w.data(), n);
            out[t] = k[0].transpose() * v;
        } else if (d == 2) {
            Eigen::Map<const Matrix> v(w.data(), n, n);
            out[t] = (k[0].transpose() * v * k[1])(0, 0);
        } else {
            Eigen::Map<const Matrix> v(w.data(), n, n * n);
            const Eigen::Matrix<Complex, 1, Eigen::Dynamic> row = k[0].transpose() * v;
            Eigen::Map<const Matrix> slab(row.data(), n, n);
            out[t] = (k[1].transpose() * slab * k[2])(0, 0);
        }
    }
    return out;
}

std::vector<Complex> transform_grid(const MultiplicityConfig& config, const TensorGrid& source,
                                    std::span<const Complex> values, const TensorGrid& target,
                                    Direction direction)
{
    check_grid(config, source);
    check_grid(config, target);
    const auto w = weighted(config, source, values);
    const auto& src = source.axis().nodes;
    const auto& dst = target.axis().nodes;
    const auto ns = static_cast<Eigen::Index>(src.size());
    const auto nt = static_cast<Eigen::Index>(dst.size());
    const int d = config.dimension;

    std::map<double, Matrix> cache;
    auto matrix = [&](int axis) -> const Matrix& {
        const double kappa = config.kappa[axis];
        auto it = cache.find(kappa);
        if (it == cache.end())
            it = cache.emplace(kappa, kernel_matrix(kappa, dst, src, direction)).first;
        return it->second;
    };

    std::vector<Complex> out(target.size());
    if (d == 1) {
        Eigen::Map<const Vector> v(w.data(), ns);
        Eigen::Map<Vector> o(out.data(), nt);
        o.noalias() = matrix(0) * v;
    } else if (d == 2) {
        Eigen::Map<const Matrix> v(w.data(), ns, ns);
        Eigen::Map<Matrix> o(out.data(), nt, nt);
        const Matrix partial = matrix(0) * v;
        o.noalias() = partial * matrix(1).transpose();
    } else {
        Eigen::Map<const Matrix> v(w.data(), ns, ns * ns);
        const Matrix partial = matrix(0) * v;  // nt x (ns*ns)
        const Matrix& m1 = matrix(1);
        const Matrix& m2 = matrix(2);
        for (Eigen::Index p = 0; p < nt; ++p) {
            Eigen::Map<const Matrix> slab(partial.row(p).data(), ns, ns);
            Eigen::Map<Matrix> o(out.data() + p * nt * nt, nt, nt);
            o.noalias() = m1 * slab * m2.transpose();
        }
    }
    return out;
}

std::vector<Estimate> transform_many(const MultiplicityConfig& config, const QuadratureSpec& quad,
                                     const FunctionHandle& f, std::span<const Point> points,
                                     Direction direction)
{
    const auto [primary, check] = levels_for(config, quad, f);
    const auto value = transform_points(config, primary.grid, primary.values, points, direction);
    const auto other = transform_points(config, check.grid, check.values, points, direction);
    const double scale = config.mehta * lp_norm(config, primary.grid, primary.values, 1.0);

    std::vector<Estimate> out(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
        out[k].value = value[k];
        out[k].error = std::abs(value[k] - other[k]);
        flag_accuracy(out[k], scale);
    }
    return out;
}

Estimate forward(const MultiplicityConfig& config, const QuadratureSpec& quad,
                 const FunctionHandle& f, std::span<const double> xi)
{
    const Point p(xi.begin(), xi.end());
    return transform_many(config, quad, f, std::span<const Point>(&p, 1), Direction::forward)[0];
}

Estimate inverse(const MultiplicityConfig& config, const QuadratureSpec& quad,
                 const FunctionHandle& g, std::span<const double> x)
{
    const Point p(x.begin(), x.end());
    return transform_many(config, quad, g, std::span<const Point>(&p, 1), Direction::inverse)[0];
}

GridTransform transform_to_grid(const MultiplicityConfig& config, const QuadratureSpec& quad,
                                const FunctionHandle& f, const QuadratureSpec& output,
                                Direction direction)
{
    const auto [primary, check] = levels_for(config, quad, f);
    const TensorGrid target(config.dimension, output);
    auto value = transform_grid(config, primary.grid, primary.values, target, direction);
    const auto other = transform_grid(config, check.grid, check.values, target, direction);
    const double scale = config.mehta * lp_norm(config, primary.grid, primary.values, 1.0);

    double max_error = 0.0;
    for (std::size_t k = 0; k < value.size(); ++k)
        max_error = std::max(max_error, std::abs(value[k] - other[k]));
    const std::size_t n = target.axis().size();
    double peak = 0.0;
    double edge = 0.0;
    for (std::size_t k = 0; k < value.size(); ++k) {
        const double v = std::abs(value[k]);
        peak = std::max(peak, v);
        bool outer = false;
        std::size_t rest = k;
        for (int axis = 0; axis < config.dimension; ++axis, rest /= n)
            outer = outer || rest % n == 0 || rest % n == n - 1;
        if (outer)
            edge = std::max(edge, v);
    }
    const double boundary_fraction = peak > 0.0 ? edge / peak : 0.0;
    const bool warning = max_error > 1e-8 * std::max(scale, 1e-300) || boundary_fraction > 1e-8;
    return GridTransform{SampledFunction(std::vector<std::vector<double>>(config.dimension, target.axis().nodes),
                                         std::move(value), output),
                         max_error, boundary_fraction, warning};
}

FunctionHandle closed_form_transform(const MultiplicityConfig& config, const FunctionHandle& f)
{
    validate(config, f);
    if (std::holds_alternative<BesselKProfile>(f))
        throw NotInCatalog("bessel_k_profile has no forward entry in the closed-form catalog; "
                           "use inverse() to recover the Cauchy function");
    if (std::holds_alternative<SampledFunction>(f))
        throw NotInCatalog("sampled functions have no closed-form transform");
    return *transform_partner(config, f);
}

QuadratureSpec integration_spec(const SampledFunction& f)
{
    if (f.origin())
        return *f.origin();
    std::size_t n = 0;
    for (const auto& axis : f.axes())
        n = std::max(n, axis.size());
    int nodes = static_cast<int>(2 * n);
    return {f.extent(), std::max(nodes + nodes % 2, 8)};
}

std::vector<Complex> spectrum_on(const MultiplicityConfig& config, const FunctionHandle& f,
                                 const TensorGrid& grid)
{
    validate(config, f);
    if (auto partner = transform_partner(config, f))
        return values_on(config, *partner, grid);
    const auto& s = std::get<SampledFunction>(f);
    const TensorGrid source(config.dimension, integration_spec(s));
    const auto values = values_on(config, f, source);
    return transform_grid(config, source, values, grid, Direction::forward);
}

double lp_norm(const MultiplicityConfig& config, const TensorGrid& grid,
               std::span<const Complex> values, double p)
{
    const auto measure = grid.weighted_measure(config);
    std::vector<double> terms(values.size());
    for (std::size_t k = 0; k < values.size(); ++k)
        terms[k] = std::pow(std::abs(values[k]), p) * measure[k];
    const double s = pairwise_sum(terms);
    return p == 1.0 ? s : std::pow(s, 1.0 / p);
}

Complex integrate(const MultiplicityConfig& config, const TensorGrid& grid,
                  std::span<const Complex> values)
{
    const auto measure = grid.weighted_measure(config);
    std::vector<Complex> terms(values.size());
    for (std::size_t k = 0; k < values.size(); ++k)
        terms[k] = values[k] * measure[k];
    return pairwise_sum(terms);
}

IdentityReport plancherel_duality(const MultiplicityConfig& config, const QuadratureSpec& quad,
                                  const FunctionHandle& f, const FunctionHandle& g)
{
    auto sides = [&](const QuadratureSpec& spec) {
        const TensorGrid grid(config.dimension, spec);
        const auto fv = values_on(config, f, grid);
        const auto gv = values_on(config, g, grid);
        const auto df = spectrum_on(config, f, grid);
        const auto dg = spectrum_on(config, g, grid);
        std::vector<Complex> lhs(grid.size());
        std::vector<Complex> rhs(grid.size());
        for (std::size_t k = 0; k < grid.size(); ++k) {
            lhs[k] = df[k] * gv[k];
            rhs[k] = fv[k] * dg[k];
        }
        return std::pair{integrate(config, grid, lhs), integrate(config, grid, rhs)};
    };
    const auto [lhs, rhs] = sides(quad.refined());
    const auto [lhs_coarse, rhs_coarse] = sides(quad);
    auto report = make_report("plancherel_duality", config, rhs, lhs, 1e-7,
                              "int D f g h^2 (computed) vs int f D g h^2 (expected): " + describe(f) +
                                  ", " + describe(g));
    report.details["lhs_resolution_error"] = std::abs(lhs - lhs_coarse);
    report.details["rhs_resolution_error"] = std::abs(rhs - rhs_coarse);
    return report;
}

std::vector<Complex> spectrum_at(const MultiplicityConfig& config, const FunctionHandle& f,
                                 std::span<const Point> points)
{
    validate(config, f);
    if (auto partner = transform_partner(config, f)) {
        std::vector<Complex> out(points.size());
        for (std::size_t k = 0; k < points.size(); ++k)
            out[k] = evaluate(config, *partner, points[k]);
        return out;
    }
    const auto& s = std::get<SampledFunction>(f);
    const TensorGrid source(config.dimension, integration_spec(s));
    const auto values = values_on(config, f, source);
    return transform_points(config, source, values, points, Direction::forward);
}

std::vector<Complex> kernel_on(const MultiplicityConfig& config, const TensorGrid& grid,
                               std::span<const double> a)
{
    check_grid(config, grid);
    if (static_cast<int>(a.size()) != config.dimension)
        throw ConfigError("point dimension does not match config");
    const auto& nodes = grid.axis().nodes;
    const std::size_t n = nodes.size();
    std::vector<std::vector<Complex>> axis(config.dimension, std::vector<Complex>(n));
    for (int i = 0; i < config.dimension; ++i)
        for (std::size_t q = 0; q < n; ++q)
            axis[i][q] = kernel_1d(config.kappa[i], a[i], nodes[q]);

    std::vector<Complex> out(grid.size());
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        std::size_t rest = flat;
        Complex value = 1.0;
        for (int i = config.dimension - 1; i >= 0; --i) {
            value *= axis[i][rest % n];
            rest /= n;
        }
        out[flat] = value;
    }
    return out;
}

std::size_t mirror_index(const TensorGrid& grid, std::size_t flat)
{
    const std::size_t n = grid.axis().size();
    std::size_t out = 0;
    std::size_t scale = 1;
    for (int i = 0; i < grid.dimension(); ++i) {
        out += (n - 1 - flat % n) * scale;
        flat /= n;
        scale *= n;
    }
    return out;
}

QuadratureSpec spectral_quadrature(const MultiplicityConfig& config, const FunctionHandle& f,
                                   double reach, double eps)
{
    validate(config, f);
    const auto base = default_quadrature(config.dimension);
    if (auto partner = transform_partner(config, f)) {
        const double radius = decay_radius(config, *partner, eps, DecayCriterion::tail_mass);
        return resolving_quadrature(radius, reach, base.nodes_per_axis);
    }
    return resolving_quadrature(base.radius, reach, base.nodes_per_axis);
}

IdentityReport master_formula(const MultiplicityConfig& config, const QuadratureSpec& quad,
                              std::span<const double> u, std::span<const double> v)
{
    auto side = [&](const QuadratureSpec& spec) {
        const TensorGrid grid(config.dimension, spec);
        const auto ku = kernel_on(config, grid, u);
        const auto kv = kernel_on(config, grid, v);
        std::vector<Complex> terms(grid.size());
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const Point x = grid.node(k);
            double r2 = 0.0;
            for (double xi : x)
                r2 += xi * xi;
            terms[k] = ku[k] * kv[k] * std::exp(-r2 / 2.0);
        }
        return config.mehta * integrate(config, grid, terms);
    };
    const Complex computed = side(quad.refined());
    const Complex coarse = side(quad);

    Point minus_v(v.begin(), v.end());
    double norms = 0.0;
    for (std::size_t i = 0; i < minus_v.size(); ++i) {
        minus_v[i] = -minus_v[i];
        norms += u[i] * u[i] + v[i] * v[i];
    }
    const double expected = std::exp(-norms / 2.0) * kernel_nd_real(config, u, minus_v);
    auto report = make_report("gaussian_master_formula", config, expected, computed, 1e-7,
                              "c int E(x,-iu)E(x,-iv)h^2 e^{-|x|^2/2} vs e^{-(|u|^2+|v|^2)/2}E(u,-v)");
    report.details["u"] = Point(u.begin(), u.end());
    report.details["v"] = Point(v.begin(), v.end());
    report.details["resolution_error"] = std::abs(computed - coarse);
    return report;
}

IdentityReport inversion_roundtrip(const MultiplicityConfig& config, const FunctionHandle& f,
                                   std::span<const Point> probes, double eps)
{
    validate(config, f);
    const auto partner = transform_partner(config, f);
    if (!partner)
        throw NotInCatalog("inversion_roundtrip needs a catalog function");
    double reach = 0.0;
    for (const auto& x : probes)
        for (double xi : x)
            reach = std::max(reach, std::abs(xi));

    const auto base = default_quadrature(config.dimension);
    const QuadratureSpec spectral = resolving_quadrature(
        decay_radius(config, *partner, eps, DecayCriterion::tail_mass), reach, base.nodes_per_axis);
    const QuadratureSpec spatial = quadrature_for(config, f, spectral.radius, eps);
    const auto spectrum = transform_to_grid(config, spatial, f, spectral, Direction::forward);
    const auto back = transform_many(config, spectral, spectrum.function, probes, Direction::inverse);

    double worst = 0.0;
    Complex worst_expected = 0.0;
    Complex worst_computed = 0.0;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t k = 0; k < probes.size(); ++k) {
        const Complex expected = evaluate(config, f, probes[k]);
        const double rel = std::abs(back[k].value - expected) / std::abs(expected);
        rows.push_back({{"x", probes[k]}, {"rel_error", rel}});
        if (rel >= worst) {
            worst = rel;
            worst_expected = expected;
            worst_computed = back[k].value;
        }
    }
    auto report = make_report("inversion_roundtrip", config, worst_expected, worst_computed, 1e-6,
                              describe(f) + ": worst probe of inverse(forward(f))");
    report.details["probes"] = rows;
    report.details["spatial_rule"] = {spatial.radius, spatial.nodes_per_axis};
    report.details["spectral_rule"] = {spectral.radius, spectral.nodes_per_axis};
    report.details["forward_resolution_error"] = spectrum.max_error;
    return report;
}

QuadratureSpec quadrature_for(const MultiplicityConfig& config, const FunctionHandle& f,
                              double frequency, double eps, DecayCriterion criterion)
{
    const double radius = decay_radius(config, f, eps, criterion);
    return resolving_quadrature(radius, frequency, default_quadrature(config.dimension).nodes_per_axis);
}

QuadratureSpec budgeted_quadrature(const MultiplicityConfig& config, const FunctionHandle& f,
                                   double frequency, double eps, double max_refined_nodes)
{
    for (;;) {
        auto spec = quadrature_for(config, f, frequency, eps);
        const double size = std::pow(2.0 * spec.nodes_per_axis, config.dimension);
        if (size <= max_refined_nodes || eps >= 1e-3)
            return spec;
        eps *= 10.0;
    }
}

}  // namespace dunkl
