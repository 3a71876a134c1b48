#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "zdlab/errors.hpp"
#include "zdlab/fourier_core.hpp"

using namespace zdl;

namespace {

// Plain Riemann-sum coefficient, independent of the library's DFT.
cplx brute_coeff(const std::function<double(double)>& f, int k, int n = 2048) {
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j) {
        const double x = kTwoPi * j / n;
        acc += f(x) * std::exp(cplx(0.0, -k * x));
    }
    return acc / static_cast<double>(n);
}

TorusFunction random_trig_poly(std::mt19937_64& rng, int degree) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> c(degree), s(degree);
    for (int j = 0; j < degree; ++j) {
        c[j] = d(rng);
        s[j] = d(rng);
    }
    return TorusFunction::trig(d(rng), c, s);
}

}  // namespace

TEST_CASE("fourier_coeffs of simple trig polynomials") {
    const auto f = fourier_coeffs(TorusFunction::trig(0.0, {2.0}), 2);
    CHECK(f[1] == cplx(1.0, 0.0));
    CHECK(f[-1] == cplx(1.0, 0.0));
    CHECK(f[0] == cplx(0.0, 0.0));
    CHECK(f[2] == cplx(0.0, 0.0));
    CHECK(f[-2] == cplx(0.0, 0.0));

    const auto c = fourier_coeffs(TorusFunction::constant(3.0), 1);
    CHECK(c[0] == cplx(3.0, 0.0));
    CHECK(c[1] == cplx(0.0, 0.0));
    CHECK(c[-1] == cplx(0.0, 0.0));

    const auto s = fourier_coeffs(TorusFunction::trig(0.0, {0.0}, {1.0}), 1);
    CHECK(s[1] == cplx(0.0, -0.5));
    CHECK(s[-1] == cplx(0.0, 0.5));
}

TEST_CASE("szego projection keeps nonnegative modes") {
    const auto h = szego_project(fourier_coeffs(TorusFunction::trig(0.0, {2.0}), 3));
    REQUIRE(h.order() == 3);
    CHECK(h[0] == cplx(0.0));
    CHECK(h[1] == cplx(1.0));
    CHECK(h[2] == cplx(0.0));

    const auto hc = szego_project(fourier_coeffs(TorusFunction::constant(3.0), 2));
    CHECK(hc[0] == cplx(3.0));
    CHECK(hc[1] == cplx(0.0));

    const auto hs = szego_project(fourier_coeffs(TorusFunction::trig(0.0, {0.0}, {1.0}), 2));
    CHECK(hs[1] == cplx(0.0, -0.5));
    CHECK(hs[0] == cplx(0.0));
}

TEST_CASE("reconstruct_real inverts the projection") {
    HardyCoeffs a(4);
    a[1] = 1.0;
    const auto u = reconstruct_real(a);
    for (double x : torus_grid(16)) CHECK(u(x) == doctest::Approx(2.0 * std::cos(x)).epsilon(1e-14));

    HardyCoeffs b(4);
    b[0] = 3.0;
    for (double x : torus_grid(16)) CHECK(reconstruct_real(b)(x) == doctest::Approx(3.0));

    HardyCoeffs c(4);
    c[1] = cplx(0.0, -0.5);
    for (double x : torus_grid(16)) CHECK(std::abs(reconstruct_real(c)(x) - std::sin(x)) < 1e-14);

    HardyCoeffs bad(2);
    bad[0] = cplx(0.0, 1e-3);
    CHECK_THROWS_AS(reconstruct_real(bad), DomainError);
}

TEST_CASE("inner products in the Hardy space") {
    HardyCoeffs q(3), one(3);
    q[1] = 1.0;
    one[0] = 1.0;
    CHECK(inner_product(q, q) == cplx(1.0));
    CHECK(inner_product(q, one) == cplx(0.0));
    const auto p = szego_project(fourier_coeffs(TorusFunction::trig(0.0, {2.0}), 3));
    CHECK(inner_product(p, one) == cplx(0.0));
}

TEST_CASE("round trip and Parseval on random trig polynomials") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const int degree = 1 + trial % 6;
        const TorusFunction u = random_trig_poly(rng, degree);
        const int order = degree + trial % 3;
        const auto f = fourier_coeffs(u, order);
        for (int k = 0; k <= order; ++k) CHECK(f[-k] == std::conj(f[k]));
        const auto h = szego_project(f);
        const auto back = reconstruct_real(h);
        for (double x : torus_grid(64)) CHECK(std::abs(back(x) - u(x)) < 1e-10);

        double norm2 = 0.0;
        for (double x : torus_grid(256)) norm2 += u(x) * u(x);
        norm2 /= 256.0;
        double parseval = std::norm(h[0]);
        for (int k = 1; k <= order; ++k) parseval += 2.0 * std::norm(h[k]);
        CHECK(std::abs(norm2 - parseval) < 1e-10);
    }
}

TEST_CASE("grid functions") {
    std::vector<double> v;
    for (double x : torus_grid(32)) v.push_back(std::cos(x) + 0.25 * std::sin(3.0 * x));
    const auto g = TorusFunction::grid(v, Interp::Trig);
    CHECK(g.is_grid());
    CHECK(g.degree() == 16);
    CHECK(std::abs(g(0.3) - (std::cos(0.3) + 0.25 * std::sin(0.9))) < 1e-12);
    CHECK(std::abs(g.derivative(0.3) - (-std::sin(0.3) + 0.75 * std::cos(0.9))) < 1e-11);
    const auto f = fourier_coeffs(g, 5);
    auto ref = [](double x) { return std::cos(x) + 0.25 * std::sin(3.0 * x); };
    for (int k = -5; k <= 5; ++k) CHECK(std::abs(f[k] - brute_coeff(ref, k)) < 1e-12);
    CHECK_THROWS_AS(fourier_coeffs(g, 16), DomainError);

    const auto lin = TorusFunction::grid({0.0, 1.0, 0.0, -1.0}, Interp::Linear);
    CHECK(lin(kPi / 4.0) == doctest::Approx(0.5));
    CHECK(lin(kTwoPi + kPi / 4.0) == doctest::Approx(0.5));
    CHECK(lin(-kPi / 4.0) == doctest::Approx(-0.5));
    CHECK_FALSE(lin.differentiable());
    CHECK(lin.max() == 1.0);
    CHECK(lin.min() == -1.0);

    CHECK_THROWS_AS(TorusFunction::grid({1.0, 2.0, 3.0}, Interp::Trig), DomainError);
    CHECK_THROWS_AS(TorusFunction::grid({1.0, 2.0}, Interp::Linear), DomainError);
}

TEST_CASE("range and derivative range of trig data") {
    const auto u = TorusFunction::trig(0.5, {1.0});
    CHECK(u.max() == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(u.min() == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(u.sup_abs() == doctest::Approx(1.5).epsilon(1e-14));
    const auto [dmin, dmax] = u.derivative_range();
    CHECK(dmin == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(dmax == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(u.mean() == 0.5);

    const auto c = TorusFunction::constant(-2.0);
    CHECK(c.min() == -2.0);
    CHECK(c.max() == -2.0);
    CHECK(c.degree() == 0);
}

TEST_CASE("translation") {
    const auto u = TorusFunction::trig(0.1, {1.0, 0.3}, {0.2});
    const auto v = u.translated(0.7);
    for (double x : torus_grid(16)) CHECK(std::abs(v(x) - u(x - 0.7)) < 1e-13);
}

TEST_CASE("JSON round trip and malformed input") {
    const auto u = TorusFunction::trig(0.25, {1.0, -0.5}, {0.0, 2.0});
    const auto back = torus_from_json(torus_to_json(u));
    for (double x : torus_grid(8)) CHECK(back(x) == doctest::Approx(u(x)));

    const auto g = TorusFunction::grid({1.0, 2.0, 3.0, 4.0}, Interp::Linear);
    const auto gb = torus_from_json(torus_to_json(g));
    CHECK(gb.grid_data().values == g.grid_data().values);
    CHECK(gb.grid_data().interp == Interp::Linear);

    CHECK_THROWS_AS(torus_from_json(nlohmann::json{{"type", "wave"}}), DomainError);
    CHECK_THROWS_AS(torus_from_json(nlohmann::json{{"type", "trig"}, {"cos", "x"}}), DomainError);
    CHECK_THROWS_AS(torus_from_json(nlohmann::json::array()), DomainError);
    CHECK_THROWS_AS(torus_from_json(nlohmann::json{{"type", "grid"}, {"values", {1.0, 2.0, 3.0}}}), DomainError);
}
