#include "dunkl/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "dunkl/errors.hpp"

namespace dunkl {

void QuadratureSpec::validate() const
{
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw ConfigError("quadrature radius must be positive");
    if (nodes_per_axis < 8)
        throw ConfigError("quadrature needs at least 8 nodes per axis");
    if (nodes_per_axis % 2 != 0)
        throw ConfigError("nodes per axis must be even (the axis is split at the mirror)");
}

QuadratureSpec QuadratureSpec::coarsened() const
{
    int n = nodes_per_axis / 2;
    n += n % 2;
    return {radius, std::max(n, 8), rule};
}

bool operator==(const QuadratureSpec& a, const QuadratureSpec& b)
{
    return a.radius == b.radius && a.nodes_per_axis == b.nodes_per_axis && a.rule == b.rule;
}

QuadratureSpec default_quadrature(int dimension)
{
    switch (dimension) {
    case 1:
        return {16.0, 256};
    case 2:
        return {12.0, 96};
    case 3:
        return {10.0, 48};
    default:
        throw UnsupportedDimension("no default quadrature for dimension " + std::to_string(dimension));
    }
}

QuadratureSpec resolving_quadrature(double radius, double oscillation, int min_nodes)
{
    // A Gauss-Legendre rule with m nodes on a panel of length L integrates
    // exp(i w t) to machine precision once 2m exceeds w L / 2 plus a margin
    // for the decay of the Chebyshev tail. The second bound covers
    // algebraic profiles whose nearest complex singularity sits at distance ~1
    // from the panel end at the origin.
    const double half = std::max(0.3 * std::abs(oscillation) * radius + 32.0,
                                 10.0 * std::sqrt(radius) + 16.0);
    int n = 2 * static_cast<int>(std::ceil(half));
    n = std::max(n, min_nodes + min_nodes % 2);
    return {radius, std::max(n, 8)};
}

namespace {

GaussLegendre compute_gauss_legendre(int n)
{
    GaussLegendre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p1 = x;
                p0 = 1.0;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // Recompute the derivative at the converged root.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        gl.nodes[i] = -x;
        gl.nodes[n - 1 - i] = x;
        gl.weights[i] = w;
        gl.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        gl.nodes[n / 2] = 0.0;
    return gl;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussLegendre>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot)
        slot = std::make_unique<GaussLegendre>(compute_gauss_legendre(n));
    return *slot;
}

AxisRule make_axis_rule(const QuadratureSpec& spec)
{
    spec.validate();
    const int half = spec.nodes_per_axis / 2;
    const auto& gl = gauss_legendre(half);
    const double scale = 0.5 * spec.radius;
    AxisRule rule;
    rule.nodes.reserve(spec.nodes_per_axis);
    rule.weights.reserve(spec.nodes_per_axis);
    for (int i = 0; i < half; ++i) {
        rule.nodes.push_back(scale * (gl.nodes[i] - 1.0));
        rule.weights.push_back(scale * gl.weights[i]);
    }
    for (int i = 0; i < half; ++i) {
        rule.nodes.push_back(scale * (gl.nodes[i] + 1.0));
        rule.weights.push_back(scale * gl.weights[i]);
    }
    return rule;
}

TensorGrid::TensorGrid(int dimension, AxisRule axis)
    : dimension_(dimension), axis_(std::move(axis)), size_(1)
{
    if (dimension < 1 || dimension > kMaxDimension)
        throw UnsupportedDimension("tensor grids support 1 <= d <= 3");
    for (int i = 0; i < dimension; ++i)
        size_ *= axis_.size();
}

TensorGrid::TensorGrid(int dimension, const QuadratureSpec& spec)
    : TensorGrid(dimension, make_axis_rule(spec))
{
}

Point TensorGrid::node(std::size_t flat) const
{
    Point p(dimension_);
    const std::size_t n = axis_.size();
    for (int i = dimension_ - 1; i >= 0; --i) {
        p[i] = axis_.nodes[flat % n];
        flat /= n;
    }
    return p;
}

double TensorGrid::weight(std::size_t flat) const
{
    double w = 1.0;
    const std::size_t n = axis_.size();
    for (int i = 0; i < dimension_; ++i) {
        w *= axis_.weights[flat % n];
        flat /= n;
    }
    return w;
}

std::vector<double> TensorGrid::weighted_measure(const MultiplicityConfig& config) const
{
    const std::size_t n = axis_.size();
    std::vector<std::vector<double>> per_axis(dimension_, std::vector<double>(n));
    for (int i = 0; i < dimension_; ++i)
        for (std::size_t k = 0; k < n; ++k)
            per_axis[i][k] = axis_.weights[k] * axis_weight(config.kappa[i], axis_.nodes[k]);

    std::vector<double> out(size_);
    for (std::size_t flat = 0; flat < size_; ++flat) {
        std::size_t rest = flat;
        double w = 1.0;
        for (int i = dimension_ - 1; i >= 0; --i) {
            w *= per_axis[i][rest % n];
            rest /= n;
        }
        out[flat] = w;
    }
    return out;
}

void flag_accuracy(Estimate& e, double scale, double rel_tol)
{
    const double ref = std::max(scale, std::abs(e.value));
    if (e.error > rel_tol * ref) {
        e.warning = true;
        if (e.note.empty())
            e.note = "resolution check: coarse/fine difference " + std::to_string(e.error);
    }
}

namespace {

template <typename T>
T cascade(std::span<const T> v)
{
    if (v.size() <= 16) {
        T s{};
        for (const auto& x : v)
            s += x;
        return s;
    }
    const std::size_t mid = v.size() / 2;
    return cascade(v.subspan(0, mid)) + cascade(v.subspan(mid));
}

}  // namespace

Complex pairwise_sum(std::span<const Complex> values) { return cascade(values); }
double pairwise_sum(std::span<const double> values) { return cascade(values); }

}  // namespace dunkl
