#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dunkl/errors.hpp"
#include "dunkl/special_functions.hpp"

using namespace dunkl;

namespace {

bool close(double a, double b, double rel)
{
    return std::abs(a - b) <= rel * std::max(std::abs(b), 1e-300);
}

}  // namespace

// Reference values: mpmath at 30 digits.
TEST_CASE("gamma")
{
    CHECK(close(gamma_fn(0.5), std::sqrt(std::numbers::pi), 1e-15));
    CHECK(close(gamma_fn(3.7), 4.17065178379660403008698494469, 1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-15));
    CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
    CHECK_THROWS_AS(gamma_fn(-1.5), DomainError);
}

TEST_CASE("Bessel J")
{
    CHECK(close(bessel_j(0.5, 2.3), 0.392322595891227677066613240985, 1e-13));
    CHECK(close(bessel_j(2.25, 7.1), -0.306708431831304505951723681283, 1e-12));
    CHECK(close(bessel_j(1.0, 30.0), -0.11875106261662293652023426924, 1e-12));
    CHECK(close(bessel_j(3.0, 0.2), 0.000166250416435267864118783759429, 1e-13));
}

TEST_CASE("Bessel K")
{
    CHECK(close(bessel_k(0.5, 1.0), 0.461068504447894558439575873876, 1e-13));
    CHECK(close(bessel_k(1.5, 2.0), 0.179906657952092171052054752455, 1e-13));
    CHECK(close(bessel_k(0.3, 4.2), 0.00901428017537293765828023613649, 1e-12));
    CHECK(close(bessel_k(-1.5, 2.0), bessel_k(1.5, 2.0), 1e-15));
    CHECK_THROWS_AS(bessel_k(0.5, 0.0), DomainError);
}

TEST_CASE("normalized Bessel j")
{
    CHECK(normalized_bessel_j(0.3, 0.0) == 1.0);
    CHECK(std::abs(normalized_bessel_j(1.7, 1e-4) - 1.0) <= 1e-8);
    CHECK(close(normalized_bessel_j(0.75, 5.5), -0.133853169212793140413350945415, 1e-12));
    CHECK(close(normalized_bessel_j(0.25, 1e-3), 0.99999980000001111111082621083, 1e-15));
    // fast paths: integer and half-integer orders
    CHECK(close(normalized_bessel_j(2.5, 40.0), -0.000162584934065514943843737902243, 1e-9));
    CHECK(close(normalized_bessel_j(2.0, 13.0), -0.0103074207925186644296004664164, 1e-11));
    CHECK(close(normalized_bessel_j(-0.5, 1.3), std::cos(1.3), 1e-15));
    CHECK(close(normalized_bessel_j(0.5, 1.3), std::sin(1.3) / 1.3, 1e-15));
}

TEST_CASE("fast orders agree with the general evaluation")
{
    // general path reference: the same order perturbed by 1e-12 is continuous
    for (double alpha : {1.5, 2.5, 3.5, 1.0, 2.0, 3.0})
        for (double z : {0.05, 0.9, 2.6, 3.9, 7.3, 19.0, 55.0}) {
            const double fast = normalized_bessel_j(alpha, z);
            const double general = normalized_bessel_j(alpha + 1e-12, z);
            CHECK(std::abs(fast - general) <= 1e-10);
        }
}

TEST_CASE("series and asymptotic branches agree at the seam")
{
    for (double alpha : {0.25, 1.2, 3.7})
        CHECK(std::abs(normalized_bessel_j(alpha, 1.0 - 1e-12) - normalized_bessel_j(alpha, 1.0 + 1e-12)) <= 1e-10);
}

TEST_CASE("scaled normalized Bessel i")
{
    CHECK(close(normalized_bessel_i_scaled(0.25, 3.0), 0.196045793617247715701726050877, 1e-12));
    CHECK(close(normalized_bessel_i_scaled(1.5, 200.0), 0.0000373125000000000007767224363686, 1e-10));
    CHECK(close(normalized_bessel_i_scaled(-0.5, 2.0), 0.509157819444367090146859010637, 1e-14));
    CHECK(normalized_bessel_i_scaled(0.7, 0.0) == 1.0);
    CHECK(std::isfinite(normalized_bessel_i_scaled(0.7, 1e6)));
}
