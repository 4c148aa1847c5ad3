#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"

using namespace dunkl;

TEST_CASE("Gauss-Legendre exactness")
{
    for (int n : {4, 17, 64}) {
        const auto& gl = gauss_legendre(n);
        REQUIRE(gl.nodes.size() == static_cast<std::size_t>(n));
        CHECK(std::is_sorted(gl.nodes.begin(), gl.nodes.end()));
        for (int p = 0; p <= 2 * n - 1; p += 3) {
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                s += gl.weights[i] * std::pow(gl.nodes[i], p);
            const double exact = p % 2 ? 0.0 : 2.0 / (p + 1);
            CHECK(std::abs(s - exact) <= 1e-13);
        }
    }
}

TEST_CASE("axis rule is split at zero")
{
    const auto rule = make_axis_rule(QuadratureSpec{8.0, 20});
    REQUIRE(rule.size() == 20);
    CHECK(rule.nodes[9] < 0.0);
    CHECK(rule.nodes[10] > 0.0);
    double total = 0.0;
    double first = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        total += rule.weights[i];
        first += rule.weights[i] * std::abs(rule.nodes[i]);
    }
    CHECK(total == doctest::Approx(16.0).epsilon(1e-14));
    // |x| is a polynomial on each panel
    CHECK(first == doctest::Approx(64.0).epsilon(1e-14));
}

TEST_CASE("spec validation and refinement")
{
    CHECK_THROWS_AS(QuadratureSpec({0.0, 64}).validate(), ConfigError);
    CHECK_THROWS_AS(QuadratureSpec({4.0, 7}).validate(), ConfigError);
    CHECK_THROWS_AS(QuadratureSpec({4.0, 6}).validate(), ConfigError);
    const QuadratureSpec q{10.0, 64};
    CHECK(q.refined().nodes_per_axis == 128);
    CHECK(q.coarsened().nodes_per_axis == 32);
    CHECK(q.refined().radius == 10.0);
    CHECK(default_quadrature(1) == QuadratureSpec{16.0, 256});
    CHECK_THROWS_AS(default_quadrature(4), UnsupportedDimension);
}

TEST_CASE("resolving rule integrates oscillations")
{
    for (double w : {5.0, 40.0, 150.0}) {
        const auto spec = resolving_quadrature(10.0, w, 16);
        const auto rule = make_axis_rule(spec);
        double s = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i)
            s += rule.weights[i] * std::cos(w * rule.nodes[i]);
        CHECK(std::abs(s - 2.0 * std::sin(10.0 * w) / w) <= 1e-12);
    }
    CHECK(resolving_quadrature(2.0, 0.0, 64).nodes_per_axis == 64);
}

TEST_CASE("tensor grid ordering and weights")
{
    const TensorGrid grid(2, QuadratureSpec{1.0, 8});
    CHECK(grid.size() == 64);
    const auto x = grid.node(9);
    CHECK(x[0] == grid.axis().nodes[1]);
    CHECK(x[1] == grid.axis().nodes[1]);
    CHECK(grid.weight(9) == grid.axis().weights[1] * grid.axis().weights[1]);
    const auto cfg = make_config(2, {0.5, 0.0});
    const auto mu = grid.weighted_measure(cfg);
    double s = 0.0;
    for (double v : mu)
        s += v;
    // int_{[-1,1]^2} |x_1| dx = 2
    CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(TensorGrid(4, QuadratureSpec{1.0, 8}), UnsupportedDimension);
}

TEST_CASE("accuracy flags and summation")
{
    Estimate e{1.0, 1e-6};
    flag_accuracy(e, 1.0);
    CHECK(e.warning);
    Estimate ok{1.0, 1e-12};
    flag_accuracy(ok, 1.0);
    CHECK_FALSE(ok.warning);

    std::vector<double> v(1000001, 0.1);
    v[0] = 1e16;
    const double s = pairwise_sum(v);
    CHECK(std::abs(s - (1e16 + 100000.0)) <= 8.0);
}
