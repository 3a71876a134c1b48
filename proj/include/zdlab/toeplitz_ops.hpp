#pragma once

#include <string>

#include <Eigen/Dense>

#include "zdlab/fourier_core.hpp"

namespace zdl {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Compression of T_u = Pi(u .) to span{1, q, ..., q^K}: entry(j, l) = uhat(j - l).
class ToeplitzMatrix {
public:
    ToeplitzMatrix(FourierSeries symbol, int order);

    int order() const { return order_; }
    const FourierSeries& symbol() const { return symbol_; }
    const CMatrix& matrix() const { return entries_; }
    cplx operator()(int j, int l) const { return entries_(j, l); }

private:
    FourierSeries symbol_;
    int order_;
    CMatrix entries_;
};

ToeplitzMatrix toeplitz_matrix(const TorusFunction& u, int order);

// S_r = T_{q^r}. For r >= 0 the top r modes fall off the truncation; for r < 0
// the lowest |r| modes are annihilated.
HardyCoeffs shift_apply(const HardyCoeffs& h, int r);

// Eigendecomposition A = V diag(lambda) V* of a Hermitian generator, used to
// apply exp(i theta A) for many theta without refactoring.
class HermitianPropagator {
public:
    HermitianPropagator(Eigen::VectorXd eigenvalues, CMatrix eigenvectors, std::string label);

    int order() const { return static_cast<int>(eigenvalues_.size()) - 1; }
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    const CMatrix& eigenvectors() const { return eigenvectors_; }
    const std::string& label() const { return label_; }

    CVector apply(double theta, const CVector& h) const;
    // Dense exp(i theta A).
    CMatrix exponential(double theta) const;

private:
    Eigen::VectorXd eigenvalues_;
    CMatrix eigenvectors_;
    std::string label_;
};

inline constexpr double kHermitianTolerance = 1e-10;

// Eigenvalues ascending; each eigenvector's first non-negligible component is
// made real and positive so that output is reproducible.
HermitianPropagator build_propagator(const CMatrix& generator, std::string label = {});
inline HermitianPropagator build_propagator(const ToeplitzMatrix& t, std::string label = "toeplitz") {
    return build_propagator(t.matrix(), std::move(label));
}

// e^{i theta A} h
HardyCoeffs propagate(const HermitianPropagator& p, double theta, const HardyCoeffs& h);

// 2 eps diag(0..K) - 2 T_u
CMatrix bo_generator(const TorusFunction& u, double eps, int order);

CVector to_vector(const HardyCoeffs& h);
HardyCoeffs from_vector(const CVector& v);

}  // namespace zdl
