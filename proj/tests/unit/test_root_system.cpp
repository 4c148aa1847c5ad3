#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/root_system.hpp"

using namespace dunkl;

TEST_CASE("derived indices and Mehta constant")
{
    const auto c0 = make_config(1, {0.0});
    CHECK(c0.gamma == 0.0);
    CHECK(c0.lambda_index == -0.5);
    CHECK(c0.mehta == doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-15));
    CHECK(c0.mehta == doctest::Approx(0.398942).epsilon(1e-6));

    const auto c1 = make_config(1, {0.5});
    CHECK(c1.gamma == 0.5);
    CHECK(c1.lambda_index == 0.0);
    CHECK(c1.mehta == doctest::Approx(0.5).epsilon(1e-15));

    const auto c2 = make_config(2, {1.0, 0.5});
    CHECK(c2.gamma == 1.5);
    CHECK(c2.lambda_index == 1.5);
    // mpmath, 30 digits
    CHECK(c2.mehta == doctest::Approx(0.199471140200716338969973029967).epsilon(1e-14));
    CHECK(make_config(3, {0.5, 0.0, 1.0}).mehta ==
          doctest::Approx(0.0795774715459476678844418816862).epsilon(1e-14));
}

TEST_CASE("Mehta constant against quadrature of the Gaussian moment")
{
    auto error = [](double kappa, int n) {
        const auto c = make_config(1, {kappa});
        const TensorGrid grid(1, QuadratureSpec{16.0, n});
        double sum = 0.0;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const auto x = grid.node(k);
            sum += grid.weight(k) * weight(c, x) * std::exp(-x[0] * x[0] / 2.0);
        }
        return std::abs(c.mehta * sum - 1.0);
    };
    for (double kappa : {0.0, 0.5, 2.0})
        CHECK(error(kappa, 200) <= 1e-9);
    // |x|^{1/2} is singular at the panel ends: algebraic n^{-3} convergence
    CHECK(error(0.25, 200) <= 1e-5);
    const double ratio = error(0.25, 200) / error(0.25, 400);
    CHECK(ratio > 7.0);
    CHECK(ratio < 9.0);
    const auto c = make_config(2, {1.0, 0.0});
    const TensorGrid grid(2, QuadratureSpec{16.0, 200});
    double sum = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto x = grid.node(k);
        sum += grid.weight(k) * weight(c, x) * std::exp(-(x[0] * x[0] + x[1] * x[1]) / 2.0);
    }
    CHECK(std::abs(c.mehta * sum - 1.0) <= 1e-9);
}

TEST_CASE("configuration errors")
{
    CHECK_THROWS_AS(make_config(2, {0.5}), ConfigError);
    CHECK_THROWS_AS(make_config(1, {-0.1}), ConfigError);
    CHECK_THROWS_AS(make_config(4, {0, 0, 0, 0}), UnsupportedDimension);
    CHECK_THROWS_AS(make_config(0, {}), ConfigError);
}

TEST_CASE("weight")
{
    const auto c = make_config(2, {1.0, 0.5});
    CHECK(weight(c, Point{2.0, 3.0}) == doctest::Approx(12.0));
    CHECK(weight(make_config(1, {0.0}), Point{0.0}) == 1.0);
    CHECK(weight(make_config(1, {0.0}), Point{-7.5}) == 1.0);
    CHECK(weight(make_config(1, {0.5}), Point{-2.0}) == doctest::Approx(2.0));

    // homogeneity 2 gamma and reflection invariance
    const Point x{0.7, -1.3};
    for (double s : {-2.5, 0.3, 4.0}) {
        const Point sx{s * x[0], s * x[1]};
        CHECK(weight(c, sx) == doctest::Approx(std::pow(std::abs(s), 2.0 * c.gamma) * weight(c, x)).epsilon(1e-12));
    }
    for (int axis : {1, 2})
        CHECK(weight(c, reflect(x, Reflection{axis})) == weight(c, x));
}

TEST_CASE("reflections")
{
    CHECK(reflect(Point{1.0, 2.0}, Reflection{1}) == Point{-1.0, 2.0});
    CHECK(reflect(Point{0.0, 5.0}, Reflection{1}) == Point{0.0, 5.0});
    const Point x{0.3, -4.1, 2.2};
    for (int axis : {1, 2, 3})
        CHECK(reflect(reflect(x, Reflection{axis}), Reflection{axis}) == x);
    CHECK_THROWS_AS(reflect(x, Reflection{4}), ConfigError);
    CHECK_THROWS_AS(reflect(x, Reflection{0}), ConfigError);
}

TEST_CASE("json round trip keeps only dimension and kappa")
{
    const auto c = make_config(2, {1.0, 0.25});
    const nlohmann::json j = c;
    CHECK(j.size() == 2);
    CHECK(j["dimension"] == 2);
    const auto back = j.get<MultiplicityConfig>();
    CHECK(back.kappa == c.kappa);
    CHECK(back.mehta == c.mehta);
    CHECK_THROWS_AS(nlohmann::json({{"dimension", 1}, {"kappa", {-1.0}}}).get<MultiplicityConfig>(), ConfigError);
}
