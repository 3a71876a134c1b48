#pragma once

// Multivalued Burgers solution u_B(t,x) = { y : y = u0(x - 2ty) } by
// characteristics.

#include <vector>

#include "zdlab/fourier_core.hpp"

namespace zdl {

inline constexpr double kCausticTolerance = 1e-6;
inline constexpr int kDefaultScanPoints = 4096;

struct BranchSet {
    double t = 0.0;
    double x = 0.0;
    std::vector<double> roots;  // ascending
    bool caustic = false;
    std::vector<double> residuals;  // |y - u0(x - 2ty)| per root
};

// All simple roots of h(y) = y - u0(x - 2ty). The bracket scan starts at
// `scan_points` cells and doubles until the root count is unchanged over two
// consecutive doublings. `caustic` is set when a root has |h'(y)| below
// kCausticTolerance or the count comes out even (a tangency was straddled).
BranchSet branches(const TorusFunction& u0, double t, double x, int scan_points = kDefaultScanPoints);

// sum_n (-1)^n y_n over ascending roots; throws DomainError at caustics.
double alternating_sum(const BranchSet& b);

struct BreakingTimes {
    double minus = 0.0;  // -1 / sup(2 u0'), or -inf
    double plus = 0.0;   // -1 / inf(2 u0'), or +inf
};

BreakingTimes breaking_times(const TorusFunction& u0);

// True iff some z has |g(z) - x| <= tol (mod 2 pi) and |g'(z)| <= tol, where
// g(z) = z + 2 t u0(z).
bool is_caustic(const TorusFunction& u0, double t, double x, double tol);

}  // namespace zdl
