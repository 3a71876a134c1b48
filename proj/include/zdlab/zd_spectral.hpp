#pragma once

// Zero-dispersion limit and small-dispersion solution through the explicit
// spectral formula:
//   c_k^eps(t) = e^{i eps k t} < (e^{2it(eps D - T_u0)} S*)^k Pi u0, 1 >,
// with eps = 0 giving the zero-dispersion limit.

#include <optional>
#include <vector>

#include "zdlab/fourier_core.hpp"
#include "zdlab/toeplitz_ops.hpp"

namespace zdl {

// Highest Fourier mode trusted for an operator truncation of order K.
inline int k_trust(int order) { return order / 8; }

struct SpectralProfile {
    double t = 0.0;
    std::vector<cplx> coeffs;  // c_0..c_kmax
    int order = 0;
    int trusted = 0;
};

// Holds one eigendecomposition of 2 eps D - 2 T_u0 and evaluates coefficients
// and the resolvent for any t.
class SpectralSolver {
public:
    SpectralSolver(const TorusFunction& u0, double eps, int order);

    double epsilon() const { return eps_; }
    int order() const { return order_; }
    int trusted() const { return k_trust(order_); }
    const HardyCoeffs& projected_datum() const { return datum_; }
    const HermitianPropagator& propagator() const { return propagator_; }

    // Coefficients c_0..c_kmax at time t (phase factor e^{i eps k t} included).
    std::vector<cplx> coefficients(double t, int k_max) const;
    // < (I - z e^{-2itT} S*)^{-1} Pi u0, 1 > by dense LU; eps must be 0.
    cplx resolvent(double t, cplx z) const;

private:
    double eps_;
    int order_;
    HardyCoeffs datum_;
    HermitianPropagator propagator_;
};

cplx zd_coefficient(const TorusFunction& u0, double t, int k, int order);
cplx bo_epsilon_coefficient(const TorusFunction& u0, double eps, double t, int k, int order);

SpectralProfile zd_profile_coefficients(const TorusFunction& u0, double t, int order, int k_max);
TorusFunction zd_profile(const TorusFunction& u0, double t, int order, int k_max);

cplx resolvent_hardy(const TorusFunction& u0, double t, cplx z, int order);

struct SweepRow {
    double epsilon = 0.0;
    int k_max = 0;
    double max_abs_error = 0.0;
};

// Max over k <= k_max of |c_k^eps(t) - c_k^0(t)| for each eps. With
// `perturbation` w, the eps-row uses the datum u0 + eps w.
std::vector<SweepRow> epsilon_sweep(const TorusFunction& u0, double t, int k_max,
                                    const std::vector<double>& epsilons, int order,
                                    const std::optional<TorusFunction>& perturbation = std::nullopt);

}  // namespace zdl
