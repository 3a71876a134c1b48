#include "zdlab/zd_spectral.hpp"

#include <cmath>
#include <sstream>

#include "zdlab/errors.hpp"

namespace zdl {

namespace {

HardyCoeffs projected(const TorusFunction& u0, int order) {
    int available = order;
    if (u0.is_grid()) available = std::min(order, (static_cast<int>(u0.grid_data().values.size()) - 1) / 2);
    const HardyCoeffs low = szego_project(fourier_coeffs(u0, std::max(1, available)));
    HardyCoeffs h(order);
    for (int k = 0; k <= std::min(order, low.order()); ++k) h[k] = low[k];
    return h;
}

void check_order(int order) {
    if (order < 1) throw DomainError("operator truncation K must be >= 1");
}

void check_trusted(int k, int order) {
    if (k < 0 || k > k_trust(order)) {
        std::ostringstream msg;
        msg << "mode " << k << " outside trusted range [0, " << k_trust(order) << "] for K=" << order;
        throw DomainError(msg.str());
    }
}

TorusFunction add_scaled(const TorusFunction& u, const TorusFunction& w, double s) {
    if (u.is_trig() && w.is_trig()) {
        const auto& a = u.trig_data();
        const auto& b = w.trig_data();
        auto merge = [s](std::vector<double> x, const std::vector<double>& y) {
            if (x.size() < y.size()) x.resize(y.size(), 0.0);
            for (std::size_t i = 0; i < y.size(); ++i) x[i] += s * y[i];
            return x;
        };
        return TorusFunction::trig(a.mean + s * b.mean, merge(a.cos_coeffs, b.cos_coeffs),
                                   merge(a.sin_coeffs, b.sin_coeffs));
    }
    const int n = u.is_grid() ? static_cast<int>(u.grid_data().values.size())
                              : static_cast<int>(w.grid_data().values.size());
    const Interp interp = u.is_grid() ? u.grid_data().interp : w.grid_data().interp;
    return TorusFunction::sampled([&](double x) { return u(x) + s * w(x); }, n, interp);
}

}  // namespace

SpectralSolver::SpectralSolver(const TorusFunction& u0, double eps, int order)
    : eps_(eps),
      order_(order),
      datum_((check_order(order), projected(u0, order))),
      propagator_(build_propagator(bo_generator(u0, eps, order), eps == 0.0 ? "zd" : "bo-eps")) {}

std::vector<cplx> SpectralSolver::coefficients(double t, int k_max) const {
    check_trusted(k_max, order_);
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(k_max) + 1);
    CVector v = to_vector(datum_);
    out.push_back(v(0));
    for (int k = 1; k <= k_max; ++k) {
        // S* then e^{itL}
        CVector shifted = CVector::Zero(v.size());
        shifted.head(v.size() - 1) = v.tail(v.size() - 1);
        v = propagator_.apply(t, shifted);
        out.push_back(std::polar(1.0, eps_ * k * t) * v(0));
    }
    return out;
}

cplx SpectralSolver::resolvent(double t, cplx z) const {
    if (eps_ != 0.0) throw DomainError("resolvent form is defined for the zero-dispersion generator only");
    if (!(std::abs(z) < 1.0)) throw DomainError("resolvent requires |z| < 1");
    const CMatrix u = propagator_.exponential(t);
    const Eigen::Index n = u.rows();
    // I - z U S*, where column l of U S* is column l-1 of U.
    CMatrix m = CMatrix::Identity(n, n);
    m.rightCols(n - 1) -= z * u.leftCols(n - 1);
    Eigen::PartialPivLU<CMatrix> lu(m);
    const CVector f = lu.solve(to_vector(datum_));
    const double residual = (m * f - to_vector(datum_)).norm();
    if (!std::isfinite(residual) || residual > 1e-8 * (1.0 + datum_.norm()))
        throw NumericalError("resolvent solve failed");
    return f(0);
}

cplx zd_coefficient(const TorusFunction& u0, double t, int k, int order) {
    check_order(order);
    check_trusted(k, order);
    return SpectralSolver(u0, 0.0, order).coefficients(t, k).back();
}

cplx bo_epsilon_coefficient(const TorusFunction& u0, double eps, double t, int k, int order) {
    if (!(eps > 0.0)) throw DomainError("dispersion parameter must be > 0");
    check_order(order);
    check_trusted(k, order);
    return SpectralSolver(u0, eps, order).coefficients(t, k).back();
}

SpectralProfile zd_profile_coefficients(const TorusFunction& u0, double t, int order, int k_max) {
    check_order(order);
    check_trusted(k_max, order);
    SpectralProfile p;
    p.t = t;
    p.order = order;
    p.trusted = k_trust(order);
    p.coeffs = SpectralSolver(u0, 0.0, order).coefficients(t, k_max);
    return p;
}

TorusFunction zd_profile(const TorusFunction& u0, double t, int order, int k_max) {
    const SpectralProfile p = zd_profile_coefficients(u0, t, order, k_max);
    return reconstruct_real(HardyCoeffs(p.coeffs));
}

cplx resolvent_hardy(const TorusFunction& u0, double t, cplx z, int order) {
    if (!(std::abs(z) < 1.0)) throw DomainError("resolvent requires |z| < 1");
    return SpectralSolver(u0, 0.0, order).resolvent(t, z);
}

std::vector<SweepRow> epsilon_sweep(const TorusFunction& u0, double t, int k_max,
                                    const std::vector<double>& epsilons, int order,
                                    const std::optional<TorusFunction>& perturbation) {
    if (epsilons.empty()) throw DomainError("epsilon list is empty");
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        if (!(epsilons[i] > 0.0)) throw DomainError("epsilons must be positive");
        if (i > 0 && !(epsilons[i] < epsilons[i - 1])) throw DomainError("epsilons must be strictly decreasing");
    }
    check_order(order);
    check_trusted(k_max, order);
    const auto reference = SpectralSolver(u0, 0.0, order).coefficients(t, k_max);
    std::vector<SweepRow> rows;
    for (double eps : epsilons) {
        const TorusFunction datum = perturbation ? add_scaled(u0, *perturbation, eps) : u0;
        const auto c = SpectralSolver(datum, eps, order).coefficients(t, k_max);
        double err = 0.0;
        for (int k = 0; k <= k_max; ++k)
            err = std::max(err, std::abs(c[static_cast<std::size_t>(k)] - reference[static_cast<std::size_t>(k)]));
        rows.push_back({eps, k_max, err});
    }
    return rows;
}

}  // namespace zdl
