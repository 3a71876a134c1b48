#pragma once

// Real functions on the torus R/2piZ, their Fourier coefficients, the Szego
// projector onto nonnegative frequencies and the reconstruction of a real
// function from its Hardy projection.
//
// Inner products and norms use the normalized measure dx/(2 pi).

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include <json.hpp>

namespace zdl {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

enum class Interp { Trig, Linear };

// u(x) = mean + sum_{j>=1} cos_coeffs[j-1] cos(jx) + sin_coeffs[j-1] sin(jx)
struct TrigPoly {
    double mean = 0.0;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;
};

// Samples at x_j = 2 pi j / N, j = 0..N-1.
struct GridSamples {
    std::vector<double> values;
    Interp interp = Interp::Trig;
};

class TorusFunction {
public:
    static TorusFunction trig(double mean, std::vector<double> cos_coeffs,
                              std::vector<double> sin_coeffs = {});
    static TorusFunction constant(double c);
    // N must be a power of two, N >= 4.
    static TorusFunction grid(std::vector<double> values, Interp interp);
    static TorusFunction sampled(const std::function<double(double)>& f, int n, Interp interp);

    bool is_trig() const { return kind_ == Kind::Trig; }
    bool is_grid() const { return kind_ == Kind::Grid; }
    const TrigPoly& trig_data() const;
    const GridSamples& grid_data() const;

    double operator()(double x) const;
    // Exact for trig data and trig-interpolated grids; segment slope for linear grids.
    double derivative(double x) const;
    bool differentiable() const { return !(is_grid() && grid_.interp == Interp::Linear); }

    // Highest Fourier mode carried (N/2 for grids).
    int degree() const;
    double mean() const;
    double min() const { return range_.first; }
    double max() const { return range_.second; }
    double sup_abs() const;
    // Extrema of u' located by dense sampling plus local refinement.
    std::pair<double, double> derivative_range() const;

    // Returns x -> u(x - a).
    TorusFunction translated(double a) const;

private:
    enum class Kind { Trig, Grid };
    TorusFunction() = default;
    void finalize();

    Kind kind_ = Kind::Trig;
    TrigPoly trig_;
    GridSamples grid_;
    // Trigonometric interpolant of the grid (Nyquist mode split evenly).
    TrigPoly interpolant_;
    std::pair<double, double> range_{0.0, 0.0};
};

// Coefficients uhat(k), k in [-K, K].
class FourierSeries {
public:
    explicit FourierSeries(int order);
    int order() const { return order_; }
    cplx operator[](int k) const;
    cplx& operator[](int k);

private:
    int order_;
    std::vector<cplx> coeffs_;
};

// Element of the truncated Hardy space: c_0..c_K.
struct HardyCoeffs {
    std::vector<cplx> c;

    HardyCoeffs() = default;
    explicit HardyCoeffs(int order) : c(static_cast<std::size_t>(order) + 1, cplx{}) {}
    explicit HardyCoeffs(std::vector<cplx> coeffs) : c(std::move(coeffs)) {}
    int order() const { return static_cast<int>(c.size()) - 1; }
    cplx operator[](int k) const { return c[static_cast<std::size_t>(k)]; }
    cplx& operator[](int k) { return c[static_cast<std::size_t>(k)]; }
    double norm() const;
};

inline constexpr double kDefaultImagTolerance = 1e-8;

FourierSeries fourier_coeffs(const TorusFunction& u, int order);
HardyCoeffs szego_project(const FourierSeries& f);
// g = Pi g + conj(Pi g) - <Pi g, 1>; throws DomainError if |Im c_0| > tau_im.
TorusFunction reconstruct_real(const HardyCoeffs& h, double tau_im = kDefaultImagTolerance);
cplx inner_product(const HardyCoeffs& f, const HardyCoeffs& g);

// Uniform grid points 2 pi j / n.
std::vector<double> torus_grid(int n);
bool is_power_of_two(long n);

TorusFunction torus_from_json(const nlohmann::json& j);
nlohmann::json torus_to_json(const TorusFunction& u);

}  // namespace zdl
