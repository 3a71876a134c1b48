#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "zdlab/errors.hpp"
#include "zdlab/toeplitz_ops.hpp"

using namespace zdl;

namespace {

HardyCoeffs random_hardy(std::mt19937_64& rng, int order) {
    std::normal_distribution<double> d;
    HardyCoeffs h(order);
    for (int k = 0; k <= order; ++k) h[k] = cplx(d(rng), d(rng));
    return h;
}

double max_diff(const HardyCoeffs& a, const HardyCoeffs& b) {
    double m = 0.0;
    for (int k = 0; k <= a.order(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

}  // namespace

TEST_CASE("toeplitz matrices of simple symbols") {
    const auto t = toeplitz_matrix(TorusFunction::trig(0.0, {2.0}), 2);
    const double expect[3][3] = {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) CHECK(t(j, l) == cplx(expect[j][l]));

    const auto c = toeplitz_matrix(TorusFunction::constant(2.5), 3);
    CHECK((c.matrix() - 2.5 * CMatrix::Identity(4, 4)).norm() == 0.0);

    const auto s = toeplitz_matrix(TorusFunction::trig(1.0, {2.0}), 1);
    for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) CHECK(s(j, l) == cplx(1.0));
}

TEST_CASE("toeplitz matrices are Hermitian for real symbols") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const auto u = TorusFunction::trig(d(rng), {d(rng), d(rng), d(rng)}, {d(rng), d(rng), d(rng)});
        const auto t = toeplitz_matrix(u, 12);
        CHECK((t.matrix() - t.matrix().adjoint()).norm() == 0.0);
        const auto f = fourier_coeffs(u, 3);
        CHECK(t(4, 2) == f[2]);
        CHECK(t(2, 5) == f[-3]);
        CHECK(t(0, 7) == cplx(0.0));
    }
}

TEST_CASE("shift_apply") {
    HardyCoeffs one(2);
    one[0] = 1.0;
    const auto r = shift_apply(one, 1);
    CHECK(r[0] == cplx(0.0));
    CHECK(r[1] == cplx(1.0));
    CHECK(r[2] == cplx(0.0));
    const auto a = shift_apply(one, -1);
    CHECK(a.norm() == 0.0);
    HardyCoeffs q(2);
    q[1] = 1.0;
    const auto back = shift_apply(q, -1);
    CHECK(back[0] == cplx(1.0));
    CHECK(back[1] == cplx(0.0));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        HardyCoeffs h = random_hardy(rng, 8);
        h[8] = 0.0;
        CHECK(max_diff(shift_apply(shift_apply(h, 1), -1), h) == 0.0);
        HardyCoeffs g = random_hardy(rng, 8);
        const auto down_up = shift_apply(shift_apply(g, -1), 1);
        CHECK(down_up[0] == cplx(0.0));
        for (int k = 1; k <= 8; ++k) CHECK(down_up[k] == g[k]);
    }
}

TEST_CASE("build_propagator on small matrices") {
    CMatrix d = CMatrix::Zero(3, 3);
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const auto p = build_propagator(d);
    CHECK(p.eigenvalues()(0) == doctest::Approx(0.0));
    CHECK(p.eigenvalues()(1) == doctest::Approx(1.0));
    CHECK(p.eigenvalues()(2) == doctest::Approx(2.0));
    CHECK((p.eigenvectors() - CMatrix::Identity(3, 3)).norm() < 1e-14);

    const auto c = build_propagator(CMatrix(1.5 * CMatrix::Identity(3, 3)));
    for (int i = 0; i < 3; ++i) CHECK(c.eigenvalues()(i) == doctest::Approx(1.5));

    CMatrix x = CMatrix::Zero(2, 2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    const auto px = build_propagator(x);
    CHECK(px.eigenvalues()(0) == doctest::Approx(-1.0));
    CHECK(px.eigenvalues()(1) == doctest::Approx(1.0));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(px.eigenvectors()(0, 0) - r) < 1e-14);
    CHECK(std::abs(px.eigenvectors()(1, 0) + r) < 1e-14);
    CHECK(std::abs(px.eigenvectors()(0, 1) - r) < 1e-14);
    CHECK(std::abs(px.eigenvectors()(1, 1) - r) < 1e-14);

    CMatrix bad = CMatrix::Zero(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(build_propagator(bad), DomainError);
}

TEST_CASE("eigenpairs of a Toeplitz generator") {
    const auto a = bo_generator(TorusFunction::trig(0.2, {1.0, 0.5}, {0.3}), 0.1, 64);
    const auto p = build_propagator(a);
    const CMatrix& v = p.eigenvectors();
    CHECK((v.adjoint() * v - CMatrix::Identity(65, 65)).cwiseAbs().maxCoeff() <= 1e-8);
    const double an = a.norm();
    for (int j = 0; j <= 64; ++j) CHECK((a * v.col(j) - p.eigenvalues()(j) * v.col(j)).norm() <= 1e-8 * an);
    for (int j = 1; j <= 64; ++j) CHECK(p.eigenvalues()(j) >= p.eigenvalues()(j - 1));
}

TEST_CASE("propagate: identity, phase, unitarity and group law") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> th(-10.0, 10.0);
    const auto p = build_propagator(toeplitz_matrix(TorusFunction::trig(0.0, {1.0, 0.3}, {0.0, -0.7}), 32));
    for (int trial = 0; trial < 20; ++trial) {
        const auto h = random_hardy(rng, 32);
        CHECK(max_diff(propagate(p, 0.0, h), h) < 1e-12);
        const double a = th(rng);
        const double b = th(rng);
        CHECK(std::abs(propagate(p, a, h).norm() - h.norm()) <= 1e-9);
        CHECK(max_diff(propagate(p, a + b, h), propagate(p, a, propagate(p, b, h))) <= 1e-9);
    }
    const auto c = build_propagator(CMatrix(0.7 * CMatrix::Identity(4, 4)));
    const auto h = random_hardy(rng, 3);
    const auto out = propagate(c, 2.0, h);
    for (int k = 0; k <= 3; ++k) CHECK(std::abs(out[k] - std::exp(cplx(0.0, 1.4)) * h[k]) < 1e-14);
    CHECK((c.exponential(2.0) - std::exp(cplx(0.0, 1.4)) * CMatrix::Identity(4, 4)).norm() < 1e-14);
}

TEST_CASE("bo_generator assembly") {
    CHECK((bo_generator(TorusFunction::constant(1.5), 0.0, 3) + 3.0 * CMatrix::Identity(4, 4)).norm() == 0.0);
    CMatrix diag = CMatrix::Zero(4, 4);
    for (int j = 0; j < 4; ++j) diag(j, j) = 2.0 * j;
    CHECK((bo_generator(TorusFunction::constant(0.0), 1.0, 3) - diag).norm() == 0.0);
    const auto g = bo_generator(TorusFunction::trig(0.0, {2.0}), 0.5, 1);
    CHECK(g(0, 0) == cplx(0.0));
    CHECK(g(0, 1) == cplx(-2.0));
    CHECK(g(1, 0) == cplx(-2.0));
    CHECK(g(1, 1) == cplx(1.0));
    CHECK_THROWS_AS(bo_generator(TorusFunction::constant(0.0), -0.1, 3), DomainError);
}
