#include "zdlab/toeplitz_ops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zdlab/errors.hpp"

namespace zdl {

namespace {

double hermitian_defect(const CMatrix& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

int symbol_order(const TorusFunction& u, int order) {
    if (u.is_trig()) return std::max(1, std::min(order, u.degree()));
    const int n = static_cast<int>(u.grid_data().values.size());
    return std::max(1, std::min(order, (n - 1) / 2));
}

}  // namespace

ToeplitzMatrix::ToeplitzMatrix(FourierSeries symbol, int order)
    : symbol_(std::move(symbol)), order_(order), entries_(order + 1, order + 1) {
    if (order < 1) throw DomainError("Toeplitz order K must be >= 1");
    for (int j = 0; j <= order; ++j)
        for (int l = 0; l <= order; ++l) entries_(j, l) = symbol_[j - l];
    const double defect = hermitian_defect(entries_);
    if (defect > kHermitianTolerance) {
        std::ostringstream msg;
        msg << "Toeplitz symbol is not real-valued (Hermitian defect " << defect << ")";
        throw DomainError(msg.str());
    }
}

ToeplitzMatrix toeplitz_matrix(const TorusFunction& u, int order) {
    if (order < 1) throw DomainError("Toeplitz order K must be >= 1");
    const FourierSeries f = fourier_coeffs(u, symbol_order(u, order));
    FourierSeries symbol(order);
    for (int r = -f.order(); r <= f.order(); ++r) symbol[r] = f[r];
    return ToeplitzMatrix(std::move(symbol), order);
}

HardyCoeffs shift_apply(const HardyCoeffs& h, int r) {
    const int n = h.order();
    HardyCoeffs out(n);
    for (int k = 0; k <= n; ++k) {
        const int src = k - r;
        if (src >= 0 && src <= n) out[k] = h[src];
    }
    return out;
}

HermitianPropagator::HermitianPropagator(Eigen::VectorXd eigenvalues, CMatrix eigenvectors, std::string label)
    : eigenvalues_(std::move(eigenvalues)), eigenvectors_(std::move(eigenvectors)), label_(std::move(label)) {}

CVector HermitianPropagator::apply(double theta, const CVector& h) const {
    if (h.size() != eigenvalues_.size()) throw DomainError("propagator/vector dimension mismatch");
    CVector w = eigenvectors_.adjoint() * h;
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) *= std::polar(1.0, theta * eigenvalues_(i));
    return eigenvectors_ * w;
}

CMatrix HermitianPropagator::exponential(double theta) const {
    CMatrix scaled = eigenvectors_;
    for (Eigen::Index i = 0; i < scaled.cols(); ++i) scaled.col(i) *= std::polar(1.0, theta * eigenvalues_(i));
    return scaled * eigenvectors_.adjoint();
}

HermitianPropagator build_propagator(const CMatrix& generator, std::string label) {
    if (generator.rows() != generator.cols() || generator.rows() == 0)
        throw DomainError("generator must be a non-empty square matrix");
    const double defect = hermitian_defect(generator);
    if (defect > kHermitianTolerance) {
        std::ostringstream msg;
        msg << "generator is not Hermitian (defect " << defect << ")";
        throw DomainError(msg.str());
    }
    const CMatrix sym = 0.5 * (generator + generator.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
    if (solver.info() != Eigen::Success) throw NumericalError("Hermitian eigendecomposition failed");

    CMatrix vecs = solver.eigenvectors();
    for (Eigen::Index c = 0; c < vecs.cols(); ++c) {
        const double scale = vecs.col(c).cwiseAbs().maxCoeff();
        for (Eigen::Index r = 0; r < vecs.rows(); ++r) {
            const cplx v = vecs(r, c);
            if (std::abs(v) > 1e-8 * scale) {
                vecs.col(c) *= std::conj(v) / std::abs(v);
                break;
            }
        }
    }
    return HermitianPropagator(solver.eigenvalues(), std::move(vecs), std::move(label));
}

HardyCoeffs propagate(const HermitianPropagator& p, double theta, const HardyCoeffs& h) {
    return from_vector(p.apply(theta, to_vector(h)));
}

CMatrix bo_generator(const TorusFunction& u, double eps, int order) {
    if (!(eps >= 0.0)) throw DomainError("dispersion parameter must be >= 0");
    CMatrix a = -2.0 * toeplitz_matrix(u, order).matrix();
    for (int j = 0; j <= order; ++j) a(j, j) += 2.0 * eps * j;
    return a;
}

CVector to_vector(const HardyCoeffs& h) {
    CVector v(h.order() + 1);
    for (int k = 0; k <= h.order(); ++k) v(k) = h[k];
    return v;
}

HardyCoeffs from_vector(const CVector& v) {
    HardyCoeffs h(static_cast<int>(v.size()) - 1);
    for (Eigen::Index k = 0; k < v.size(); ++k) h[static_cast<int>(k)] = v(k);
    return h;
}

}  // namespace zdl
