#pragma once

// Kinetic representation of the alternating-sum profile
//   AS[u0](t,x) = int chi0(x - 2ty, y) dy,
// its Fourier and Hardy-space forms, transport-collapse stepping and an
// independent Godunov solver for d_t u + d_x(u^2) = 0.

#include <functional>

#include "zdlab/fourier_core.hpp"

namespace zdl {

inline constexpr int kDefaultQuadPanels = 128;

// +1 if v(x) > y > 0, -1 if v(x) < y < 0, else 0.
int chi0(const TorusFunction& v, double x, double y);

// Composite panel rule in y over [-Y, Y]; panels whose end values differ are
// bisected down to the jump. The panel count doubles until two successive
// values differ by < 1e-7 (NumericalError after 20 doublings).
double as_profile_quadrature(const TorusFunction& u0, double t, double x, int n_quad = kDefaultQuadPanels);

// < (1 - e^{-2itk u0}) / (2itk), q^k > by periodic trapezoid quadrature.
cplx as_coefficient(const TorusFunction& u0, double t, int k);

// mean(u0) + (1/4 pi i t) int Log((1 - z e^{-i(x + 2t u0)}) / (1 - z e^{-ix})) dx
cplx as_hardy_log(const TorusFunction& u0, double t, cplx z);

// AS[v](tau, .) sampled on grid_n points.
TorusFunction transport_collapse_step(const TorusFunction& v, double tau, int grid_n);

// n-fold transport-collapse with step t/n.
TorusFunction trotter_entropy(const TorusFunction& u0, double t, int n, int grid_n);

// First-order Godunov (exact Riemann solver, CFL 0.45) for flux u^2. Cells are
// centred on the grid points 2 pi j / cells; cells must be a power of two >= 64.
TorusFunction godunov_reference(const TorusFunction& u0, double t, int cells);

// True when the largest jump between neighbouring samples exceeds ten times
// the mean jump; such profiles are stored with linear interpolation.
bool has_discontinuity(const std::vector<double>& samples);

// Normalized L^p norm (1/2pi int |f|^p)^{1/p} by an n-point midpoint rule;
// p = infinity gives the sampled maximum.
double lp_norm(const std::function<double(double)>& f, double p, int samples);

}  // namespace zdl
