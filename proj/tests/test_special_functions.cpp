#include <doctest.h>

#include <cmath>
#include <limits>

#include "dualris/errors.hpp"
#include "dualris/special_functions.hpp"
#include "oracles.hpp"

using namespace dualris;

namespace {

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

}  // namespace

TEST_CASE("erf matches the multiprecision series") {
    for (double x = -6.0; x <= 6.0; x += 0.0173) {
        const double want = oracle::erf(x);
        INFO("x = " << x);
        if (std::fabs(want) < 1e-3)
            CHECK(std::fabs(special::erf(x) - want) <= 1e-13);
        else
            CHECK(rel(special::erf(x), want) <= 1e-12);
    }
    CHECK(special::erf(0.0) == 0.0);
    CHECK(special::erf(10.0) == 1.0);
    CHECK(special::erf(-10.0) == -1.0);
}

TEST_CASE("erfc keeps relative precision deep in the tail") {
    for (double x = -5.0; x <= 26.0; x += 0.0371) {
        INFO("x = " << x);
        CHECK(rel(special::erfc(x), oracle::erfc(x)) <= 1e-12);
    }
    CHECK(special::erfc(30.0) == 0.0);
    CHECK(special::erfc(-30.0) == 2.0);
}

TEST_CASE("erf and erfc are consistent across the branch points") {
    for (double x : {1.999999, 2.0, 2.000001, 6.499999, 6.5}) {
        INFO("x = " << x);
        CHECK(std::fabs(special::erf(x) + special::erfc(x) - 1.0) <= 2e-16);
    }
}

TEST_CASE("E1 and its scaled form") {
    for (double x = 1e-8; x < 700.0; x *= 1.037) {
        INFO("x = " << x);
        CHECK(rel(special::expint_e1(x), oracle::e1(x)) <= 1e-12);
        CHECK(rel(special::expint_e1_scaled(x), oracle::e1_scaled(x)) <= 1e-12);
    }
    // The scaled form stays finite where E1 underflows.
    CHECK(special::expint_e1_scaled(1e6) == doctest::Approx(1.0 / (1e6 + 1.0)).epsilon(1e-6));
    CHECK(special::expint_e1_scaled(std::numeric_limits<double>::infinity()) == 0.0);
    CHECK_THROWS_AS(special::expint_e1(0.0), DomainError);
    CHECK_THROWS_AS(special::expint_e1(-1.0), DomainError);
    CHECK_THROWS_AS(special::expint_e1_scaled(-1.0), DomainError);
}
