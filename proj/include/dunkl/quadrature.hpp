#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dunkl/root_system.hpp"

namespace dunkl {

using Complex = std::complex<double>;

enum class QuadratureRule { gauss_legendre_truncated };

/// Truncated tensor-product rule on the box [-radius, radius]^d.
///
/// Each axis is split at the mirror t = 0 and carries nodes_per_axis / 2
/// Gauss-Legendre nodes on either half, so the weight |t|^{2 kappa} is smooth
/// on every panel for integer 2 kappa.
struct QuadratureSpec {
    double radius = 16.0;
    int nodes_per_axis = 256;
    QuadratureRule rule = QuadratureRule::gauss_legendre_truncated;

    void validate() const;
    [[nodiscard]] QuadratureSpec refined() const { return {radius, 2 * nodes_per_axis, rule}; }
    [[nodiscard]] QuadratureSpec coarsened() const;
};

bool operator==(const QuadratureSpec& a, const QuadratureSpec& b);

/// Per-dimension default: (16, 256) in d = 1, (12, 96) in d = 2, (10, 48) in d = 3.
QuadratureSpec default_quadrature(int dimension);

/// Smallest rule on [-radius, radius] that resolves exp(i w t) for |w| <= oscillation,
/// never coarser than min_nodes per axis.
QuadratureSpec resolving_quadrature(double radius, double oscillation, int min_nodes);

/// Gauss-Legendre nodes and weights on [-1, 1], ascending.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached; safe to call concurrently.
const GaussLegendre& gauss_legendre(int n);

struct AxisRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    [[nodiscard]] std::size_t size() const { return nodes.size(); }
};

AxisRule make_axis_rule(const QuadratureSpec& spec);

/// Tensor grid with the same axis rule in every direction. Flat index is
/// row-major with the last axis fastest.
class TensorGrid {
public:
    TensorGrid(int dimension, AxisRule axis);
    TensorGrid(int dimension, const QuadratureSpec& spec);

    [[nodiscard]] int dimension() const { return dimension_; }
    [[nodiscard]] const AxisRule& axis() const { return axis_; }
    [[nodiscard]] std::size_t size() const { return size_; }

    [[nodiscard]] Point node(std::size_t flat) const;
    [[nodiscard]] double weight(std::size_t flat) const;

    /// w_k h^2(x_k) for every node: the measure h^2 dx discretized.
    [[nodiscard]] std::vector<double> weighted_measure(const MultiplicityConfig& config) const;

private:
    int dimension_;
    AxisRule axis_;
    std::size_t size_;
};

/// Quadrature value at the refined level together with the difference to the
/// coarse level.
struct Estimate {
    Complex value{};
    double error = 0.0;
    bool warning = false;
    std::string note;
};

/// Marks an estimate whose resolution error exceeds rel_tol * max(scale, |value|).
void flag_accuracy(Estimate& e, double scale, double rel_tol = 1e-8);

/// Pairwise (cascade) summation in fixed order.
Complex pairwise_sum(std::span<const Complex> values);
double pairwise_sum(std::span<const double> values);

}  // namespace dunkl
