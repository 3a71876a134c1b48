#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "zdlab/burgers_multivalued.hpp"
#include "zdlab/chi_transport.hpp"
#include "zdlab/errors.hpp"

using namespace zdl;

namespace {

// Positive root of y = sin 2y by Newton's method.
double sin2y_root() {
    double y = 1.0;
    for (int i = 0; i < 60; ++i) y -= (y - std::sin(2.0 * y)) / (1.0 - 2.0 * std::cos(2.0 * y));
    return y;
}

}  // namespace

TEST_CASE("branches at t = 0 and for constant data") {
    const auto u = TorusFunction::trig(0.2, {1.0}, {0.5});
    for (double x : torus_grid(16)) {
        const auto b = branches(u, 0.0, x);
        REQUIRE(b.roots.size() == 1);
        CHECK(std::abs(b.roots[0] - u(x)) < 1e-12);
        CHECK_FALSE(b.caustic);
    }
    const auto c = TorusFunction::constant(-0.75);
    for (double t : {0.5, 3.0})
        for (double x : torus_grid(8)) {
            const auto b = branches(c, t, x);
            REQUIRE(b.roots.size() == 1);
            CHECK(std::abs(b.roots[0] + 0.75) < 1e-12);
        }
}

TEST_CASE("three branches of cos at t = 1, x = pi/2") {
    const double r = sin2y_root();
    CHECK(r == doctest::Approx(0.9477471335).epsilon(1e-9));
    const auto b = branches(TorusFunction::trig(0.0, {1.0}), 1.0, kPi / 2.0);
    REQUIRE(b.roots.size() == 3);
    CHECK(std::abs(b.roots[0] + r) < 1e-10);
    CHECK(std::abs(b.roots[1]) < 1e-10);
    CHECK(std::abs(b.roots[2] - r) < 1e-10);
    CHECK_FALSE(b.caustic);
    for (double res : b.residuals) CHECK(res <= 1e-10);
    CHECK(std::abs(alternating_sum(b)) < 1e-10);
}

TEST_CASE("alternating_sum") {
    BranchSet one;
    one.roots = {0.3};
    CHECK(alternating_sum(one) == 0.3);
    BranchSet three;
    three.roots = {0.1, 0.5, 0.9};
    CHECK(alternating_sum(three) == doctest::Approx(0.5).epsilon(1e-15));
    three.caustic = true;
    CHECK_THROWS_AS(alternating_sum(three), DomainError);
}

TEST_CASE("breaking times") {
    const auto bt = breaking_times(TorusFunction::trig(0.0, {1.0}));
    CHECK(bt.minus == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(bt.plus == doctest::Approx(0.5).epsilon(1e-15));
    for (double a : {0.3, 2.0, 5.0}) {
        const auto s = breaking_times(TorusFunction::trig(0.0, {a}));
        CHECK(s.minus == doctest::Approx(-1.0 / (2.0 * a)).epsilon(1e-14));
        CHECK(s.plus == doctest::Approx(1.0 / (2.0 * a)).epsilon(1e-14));
    }
    const auto c = breaking_times(TorusFunction::constant(4.0));
    CHECK(c.minus == -std::numeric_limits<double>::infinity());
    CHECK(c.plus == std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(breaking_times(TorusFunction::grid({0.0, 1.0, 0.0, -1.0}, Interp::Linear)), DomainError);
}

TEST_CASE("caustic detection") {
    const auto u = TorusFunction::trig(0.0, {1.0});
    for (double x : torus_grid(64)) CHECK_FALSE(is_caustic(u, 0.3, x, 1e-6));
    CHECK(is_caustic(u, 0.5, kPi / 2.0, 1e-6));
    CHECK_FALSE(is_caustic(u, 0.5, 0.0, 1e-6));
    for (double x : torus_grid(16)) CHECK_FALSE(is_caustic(TorusFunction::constant(1.0), 2.0, x, 1e-6));
    // after breaking the fold lines of cos at t = 1 sit where sin z = 1/2
    const double z = kPi / 6.0;
    CHECK(is_caustic(u, 1.0, z + 2.0 * std::cos(z), 1e-6));
}

TEST_CASE("single branch before breaking") {
    const auto u = TorusFunction::trig(0.1, {0.6, 0.2}, {0.3});
    const auto bt = breaking_times(u);
    const double t = 0.9 * std::min(-bt.minus, bt.plus);
    for (double s : {t, -t})
        for (double x : torus_grid(64)) {
            const auto b = branches(u, s, x);
            REQUIRE(b.roots.size() == 1);
            CHECK(std::abs(b.roots[0] - u(x - 2.0 * s * b.roots[0])) <= 1e-10);
        }
}

TEST_CASE("odd parity and the kinetic identity off caustics") {
    const auto u = TorusFunction::trig(0.0, {1.0});
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> tt(-2.0, 2.0), xx(0.0, kTwoPi);
    int tested = 0;
    while (tested < 200) {
        const double t = tt(rng);
        const double x = xx(rng);
        if (is_caustic(u, t, x, 1e-3)) continue;
        ++tested;
        const auto b = branches(u, t, x);
        CHECK(b.roots.size() % 2 == 1);
        CHECK_FALSE(b.caustic);
        for (std::size_t i = 1; i < b.roots.size(); ++i) CHECK(b.roots[i] > b.roots[i - 1]);
        for (double res : b.residuals) CHECK(res <= 1e-10);
        CHECK(std::abs(alternating_sum(b) - as_profile_quadrature(u, t, x)) <= 1e-6);
    }
}

TEST_CASE("argument errors") {
    CHECK_THROWS_AS(branches(TorusFunction::constant(0.0), 1.0, 0.0, 32), DomainError);
}
