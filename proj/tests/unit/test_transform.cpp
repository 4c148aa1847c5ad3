#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dunkl/errors.hpp"
#include "dunkl/transform.hpp"

using namespace dunkl;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("classical Fourier transform at kappa = 0")
{
    const auto c = make_config(1, {0.0});
    const auto quad = default_quadrature(1);
    CHECK(std::abs(forward(c, quad, Gaussian{0.5}, Point{1.3}).value - 0.429557) <= 1e-6);
    for (double t : {0.5, 1.0, 2.0})
        for (double xi : {0.0, 0.9, 2.7}) {
            const double classical = std::exp(-xi * xi / (4.0 * t)) / std::sqrt(2.0 * t);
            CHECK(std::abs(forward(c, quad, Gaussian{t}, Point{xi}).value - classical) <= 1e-9);
        }
}

TEST_CASE("Gaussian transform at the origin and the fixed point")
{
    for (const auto& c : {make_config(1, {0.5}), make_config(2, {1.0, 0.0})}) {
        const auto quad = default_quadrature(c.dimension);
        const Point zero(c.dimension, 0.0);
        for (double t : {0.5, 2.0})
            CHECK(rel(forward(c, quad, Gaussian{t}, zero).value, std::pow(2.0 * t, -c.homogeneity())) <= 1e-10);
    }
    const auto c = make_config(1, {0.5});
    for (double xi : {0.0, 0.7, 2.0})
        CHECK(std::abs(forward(c, default_quadrature(1), Gaussian{0.5}, Point{xi}).value - std::exp(-xi * xi / 2.0)) <=
              1e-8);
}

TEST_CASE("Cauchy pair against the classical closed form")
{
    const auto c = make_config(1, {0.0});
    const auto partner = closed_form_transform(c, GeneralizedCauchy{2.0});
    const double w = 1.0;
    const double classical = std::sqrt(std::numbers::pi / 8.0) * (1.0 + w) * std::exp(-w);
    CHECK(std::abs(evaluate(c, partner, Point{w}).real() - classical) <= 1e-14);
    CHECK(std::abs(classical - 0.461) <= 1e-3);

    const auto quad = quadrature_for(c, GeneralizedCauchy{2.0}, 2.0, 1e-9);
    for (double x : {0.5, 1.0, 2.0}) {
        const double expected = std::sqrt(std::numbers::pi / 8.0) * (1.0 + x) * std::exp(-x);
        CHECK(std::abs(forward(c, quad, GeneralizedCauchy{2.0}, Point{x}).value - expected) <= 1e-8);
    }
}

TEST_CASE("Cauchy pair by quadrature, kappa = 1")
{
    const auto c = make_config(1, {1.0});
    const auto quad = quadrature_for(c, GeneralizedCauchy{4.0}, 2.0, 1e-10);
    const Complex computed = forward(c, quad, GeneralizedCauchy{4.0}, Point{1.5}).value;
    CHECK(rel(computed, evaluate(c, BesselKProfile{4.0}, Point{1.5})) <= 1e-6);
}

TEST_CASE("closed-form catalog")
{
    const auto c = make_config(1, {0.5});
    CHECK(std::get<GaussianDensity>(closed_form_transform(c, Gaussian{0.5})).t == 0.5);
    CHECK_THROWS_AS(closed_form_transform(c, BesselKProfile{3.0}), NotInCatalog);
    CHECK_THROWS_AS(closed_form_transform(c, sample(c, Gaussian{1.0}, QuadratureSpec{4.0, 16})), NotInCatalog);
    // t = 1/2 is self-reciprocal
    const auto g = closed_form_transform(c, Gaussian{0.5});
    for (double x : {0.0, 0.4, 1.7})
        CHECK(evaluate(c, g, Point{x}).real() == doctest::Approx(std::exp(-x * x / 2.0)).epsilon(1e-15));
}

TEST_CASE("inverse of forward")
{
    const auto c = make_config(1, {1.0});
    const auto quad = default_quadrature(1);
    const auto spectrum = transform_to_grid(c, quad, Gaussian{1.0}, quad, Direction::forward);
    CHECK_FALSE(spectrum.warning);
    const auto back = inverse(c, quad, spectrum.function, Point{0.9});
    CHECK(std::abs(back.value - std::exp(-0.81)) <= 1e-7);
}

TEST_CASE("inversion round trip report")
{
    const auto c = make_config(1, {0.5});
    std::vector<Point> probes;
    for (double x : {0.0, 0.3, -0.3, 0.9, -0.9, 1.6, -1.6, 2.4, -2.4})
        probes.push_back(Point{x});
    for (const FunctionHandle& f : {FunctionHandle{Gaussian{1.0}}, FunctionHandle{GeneralizedCauchy{3.0}}}) {
        const auto r = inversion_roundtrip(c, f, probes);
        CHECK(r.pass);
        CHECK(r.rel_error <= 1e-6);
    }
}

TEST_CASE("double transform reflects")
{
    const auto c = make_config(1, {0.5});
    const GeneralizedCauchy f{3.0};
    const auto spatial = quadrature_for(c, f, 30.0, 1e-9);
    const auto once = transform_to_grid(c, spatial, f, resolving_quadrature(30.0, 0.4, 256), Direction::forward);
    const Complex twice = forward(c, *once.function.origin(), once.function, Point{0.4}).value;
    CHECK(std::abs(twice - std::pow(1.16, -3.0)) <= 1e-6);
}

TEST_CASE("Plancherel duality")
{
    const auto r1 = plancherel_duality(make_config(1, {0.5}), default_quadrature(1), Gaussian{1.0}, Gaussian{2.0});
    CHECK(r1.pass);
    CHECK(r1.rel_error <= 1e-8);
    const auto c2 = make_config(2, {1.0, 0.0});
    const auto r2 = plancherel_duality(c2, default_quadrature(2), GeneralizedCauchy{3.0}, Gaussian{1.0});
    CHECK(r2.rel_error <= 1e-6);
    const auto r3 = plancherel_duality(make_config(1, {0.5}), default_quadrature(1), Gaussian{1.0}, Gaussian{1.0});
    CHECK(r3.computed.real() >= 0.0);
}

TEST_CASE("radial reduction and boundedness")
{
    const auto c = make_config(2, {1.0, 0.0});
    const auto quad = default_quadrature(2);
    const Complex a = forward(c, quad, Gaussian{1.0}, Point{1.3, 0.0}).value;
    const Complex b = forward(c, quad, Gaussian{1.0}, Point{0.0, 1.3}).value;
    const Complex m = forward(c, quad, Gaussian{1.0}, Point{1.3 / std::sqrt(2.0), 1.3 / std::sqrt(2.0)}).value;
    CHECK(std::abs(a - b) <= 1e-8);
    CHECK(std::abs(a - m) <= 1e-8);

    const TensorGrid grid(2, quad.refined());
    const double l1 = c.mehta * lp_norm(c, grid, values_on(c, Gaussian{1.0}, grid), 1.0);
    for (double s : {0.0, 1.0, 3.0})
        CHECK(std::abs(forward(c, quad, Gaussian{1.0}, Point{s, -s}).value) <= l1 * (1.0 + 1e-12));
}

TEST_CASE("sampled input on its own grid")
{
    const auto c = make_config(1, {0.5});
    const auto quad = default_quadrature(1);
    const auto s = sample(c, Gaussian{0.5}, quad);
    const auto e = forward(c, quad, s, Point{0.7});
    CHECK(std::abs(e.value - std::exp(-0.245)) <= 1e-10);
    CHECK_FALSE(e.warning);
}

TEST_CASE("truncated output boxes are flagged")
{
    const auto c = make_config(1, {0.0});
    const auto narrow = transform_to_grid(c, default_quadrature(1), Gaussian{1.0}, QuadratureSpec{2.0, 32},
                                          Direction::forward);
    CHECK(narrow.boundary_fraction > 1e-3);
    CHECK(narrow.warning);
}

TEST_CASE("master formula")
{
    const auto c1 = make_config(1, {0.5});
    for (double u : {-2.0, 0.5, 1.9})
        for (double v : {-1.1, 0.0, 2.0})
            CHECK(master_formula(c1, default_quadrature(1), Point{u}, Point{v}).pass);
    const auto c2 = make_config(2, {1.0, 0.0});
    const auto r = master_formula(c2, default_quadrature(2), Point{1.2, -0.8}, Point{0.3, 1.4});
    CHECK(r.rel_error <= 1e-7);
}

TEST_CASE("quadrature sizing")
{
    const auto c = make_config(1, {0.5});
    const auto q = quadrature_for(c, Gaussian{1.0}, 16.0);
    CHECK(q.radius < 16.0);
    CHECK(q.nodes_per_axis >= default_quadrature(1).nodes_per_axis);
    const auto b = budgeted_quadrature(make_config(2, {1.0, 0.0}), GeneralizedCauchy{3.5}, 12.0);
    CHECK(std::pow(2.0 * b.nodes_per_axis, 2) <= double(1 << 22));
}
