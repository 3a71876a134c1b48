#include "zdlab/chi_transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "zdlab/errors.hpp"

namespace zdl {

namespace {

constexpr double kQuadTolerance = 1e-7;
constexpr int kMaxDoublings = 20;
constexpr double kCfl = 0.45;

// Integral of a {0,1}-valued indicator over [a, b] from its values on `panels`
// uniform panels; panels whose end values differ are bisected to the jump.
template <class Ind>
double indicator_integral(Ind&& ind, double a, double b, int panels) {
    const double w = (b - a) / panels;
    const double floor_width = 1e-14 * (1.0 + std::abs(a) + std::abs(b));
    double total = 0.0;
    double left = a;
    bool f_left = ind(a);
    for (int i = 1; i <= panels; ++i) {
        const double right = (i == panels) ? b : a + i * w;
        const bool f_right = ind(right);
        if (f_left == f_right) {
            if (f_left) total += right - left;
        } else {
            // One jump assumed inside; locate it.
            double lo = left;
            double hi = right;
            while (hi - lo > floor_width) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                if (ind(mid) == f_left) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            const double cut = 0.5 * (lo + hi);
            total += f_left ? (cut - left) : (right - cut);
        }
        left = right;
        f_left = f_right;
    }
    return total;
}

double y_extent(const TorusFunction& v) { return v.sup_abs() + 1e-6 * (1.0 + v.sup_abs()); }

double profile_at(const TorusFunction& u0, double t, double x, int panels, double y_max) {
    auto above = [&](double y) { return u0(x - 2.0 * t * y) > y; };
    auto below = [&](double y) { return u0(x - 2.0 * t * y) < y; };
    const double pos = indicator_integral(above, 0.0, y_max, panels);
    const double neg = indicator_integral(below, -y_max, 0.0, panels);
    return pos - neg;
}

// (1 - e^{-iw}) / (iw), series for small |w|.
cplx phi_kernel(double w) {
    if (std::abs(w) < 1e-4) {
        // sum_{n>=0} (-iw)^n / (n+1)!
        cplx term = 1.0;
        cplx sum = 1.0;
        for (int n = 1; n < 8; ++n) {
            term *= cplx(0.0, -w) / static_cast<double>(n + 1);
            sum += term;
        }
        return sum;
    }
    const double s = std::sin(0.5 * w);
    return cplx(2.0 * s * s, std::sin(w)) / cplx(0.0, w);
}

template <class F>
cplx periodic_trapezoid(F&& f, int min_points, double rel_tol) {
    int n = 64;
    cplx sum = 0.0;
    for (int j = 0; j < n; ++j) sum += f(kTwoPi * j / n);
    cplx prev = sum / static_cast<double>(n);
    int agreements = 0;
    while (n < (1 << 22)) {
        cplx extra = 0.0;
        for (int j = 0; j < n; ++j) extra += f(kTwoPi * (j + 0.5) / n);
        sum += extra;
        n *= 2;
        const cplx cur = sum / static_cast<double>(n);
        if (n >= min_points && std::abs(cur - prev) <= rel_tol * (1.0 + std::abs(cur))) {
            if (++agreements >= 2) return cur;
        } else {
            agreements = 0;
        }
        prev = cur;
    }
    return prev;
}

double godunov_flux(double ul, double ur) {
    if (ul <= ur) {
        if (ul > 0.0) return ul * ul;
        if (ur < 0.0) return ur * ur;
        return 0.0;
    }
    return std::max(ul * ul, ur * ur);
}

}  // namespace

int chi0(const TorusFunction& v, double x, double y) {
    const double vx = v(x);
    if (vx > y && y > 0.0) return 1;
    if (vx < y && y < 0.0) return -1;
    return 0;
}

double as_profile_quadrature(const TorusFunction& u0, double t, double x, int n_quad) {
    if (n_quad < 128) throw DomainError("n_quad must be >= 128");
    const double y_max = y_extent(u0);
    int panels = n_quad;
    double prev = profile_at(u0, t, x, panels, y_max);
    for (int d = 0; d < kMaxDoublings; ++d) {
        panels *= 2;
        const double cur = profile_at(u0, t, x, panels, y_max);
        if (std::abs(cur - prev) < kQuadTolerance) return cur;
        prev = cur;
    }
    std::ostringstream msg;
    msg << "kinetic quadrature at (t,x)=(" << t << "," << x << ") did not converge";
    throw NumericalError(msg.str());
}

cplx as_coefficient(const TorusFunction& u0, double t, int k) {
    if (k < 0) throw DomainError("coefficient index must be >= 0");
    const double freq = 2.0 * t * k;
    auto integrand = [&](double x) {
        const double u = u0(x);
        return u * phi_kernel(freq * u) * std::polar(1.0, -static_cast<double>(k) * x);
    };
    const int bandwidth = k + u0.degree() * (1 + static_cast<int>(std::ceil(std::abs(freq) * u0.sup_abs())));
    return periodic_trapezoid(integrand, 2 * bandwidth + 16, 1e-14);
}

cplx as_hardy_log(const TorusFunction& u0, double t, cplx z) {
    if (!(std::abs(z) < 1.0)) throw DomainError("Hardy function requires |z| < 1");
    if (t == 0.0) throw DomainError("Log form is singular at t = 0; use the resolvent or the Fourier series of u0");
    auto integrand = [&](double x) {
        const cplx num = 1.0 - z * std::polar(1.0, -(x + 2.0 * t * u0(x)));
        const cplx den = 1.0 - z * std::polar(1.0, -x);
        return std::log(num / den);
    };
    // The integrand's Fourier tail decays like |z|^m.
    const double decay = std::max(std::abs(z), 1e-3);
    const int min_points = static_cast<int>(std::ceil(36.0 / -std::log(decay))) + 4 * u0.degree();
    const cplx avg = periodic_trapezoid(integrand, min_points, 1e-15);
    return u0.mean() + avg / cplx(0.0, 2.0 * t);
}

bool has_discontinuity(const std::vector<double>& samples) {
    const std::size_t n = samples.size();
    if (n < 2) return false;
    double tv = 0.0;
    double biggest = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double jump = std::abs(samples[(j + 1) % n] - samples[j]);
        tv += jump;
        biggest = std::max(biggest, jump);
    }
    return tv > 0.0 && biggest > 10.0 * tv / static_cast<double>(n);
}

TorusFunction transport_collapse_step(const TorusFunction& v, double tau, int grid_n) {
    if (grid_n < 4 || !is_power_of_two(grid_n)) throw DomainError("grid_n must be a power of two >= 4");
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(grid_n));
    for (double x : torus_grid(grid_n))
        samples.push_back(tau == 0.0 ? v(x) : as_profile_quadrature(v, tau, x));
    const bool linear = (v.is_grid() && v.grid_data().interp == Interp::Linear) || has_discontinuity(samples);
    return TorusFunction::grid(std::move(samples), linear ? Interp::Linear : Interp::Trig);
}

TorusFunction trotter_entropy(const TorusFunction& u0, double t, int n, int grid_n) {
    if (n < 1) throw DomainError("Trotter step count must be >= 1");
    if (t < 0.0) throw DomainError("Trotter formula needs t >= 0");
    if (t == 0.0) return u0;
    TorusFunction v = u0;
    for (int i = 0; i < n; ++i) v = transport_collapse_step(v, t / n, grid_n);
    return v;
}

TorusFunction godunov_reference(const TorusFunction& u0, double t, int cells) {
    if (cells < 64 || !is_power_of_two(cells)) throw DomainError("cells must be a power of two >= 64");
    if (t < 0.0) throw DomainError("Godunov reference needs t >= 0");
    const double dx = kTwoPi / cells;
    constexpr int kSub = 16;
    std::vector<double> u(static_cast<std::size_t>(cells));
    for (int j = 0; j < cells; ++j) {
        double acc = 0.0;
        for (int s = 0; s < kSub; ++s) acc += u0(j * dx + ((s + 0.5) / kSub - 0.5) * dx);
        u[static_cast<std::size_t>(j)] = acc / kSub;
    }
    std::vector<double> flux(static_cast<std::size_t>(cells));
    double now = 0.0;
    while (now < t) {
        double speed = 0.0;
        for (double v : u) speed = std::max(speed, 2.0 * std::abs(v));
        double dt = speed > 0.0 ? kCfl * dx / speed : t - now;
        if (now + dt > t) dt = t - now;
        // flux[j] sits at the interface between cell j and j+1
        for (int j = 0; j < cells; ++j)
            flux[static_cast<std::size_t>(j)] =
                godunov_flux(u[static_cast<std::size_t>(j)], u[static_cast<std::size_t>((j + 1) % cells)]);
        for (int j = 0; j < cells; ++j) {
            const double left = flux[static_cast<std::size_t>((j + cells - 1) % cells)];
            u[static_cast<std::size_t>(j)] -= dt / dx * (flux[static_cast<std::size_t>(j)] - left);
        }
        now += dt;
    }
    return TorusFunction::grid(std::move(u), Interp::Linear);
}

double lp_norm(const std::function<double(double)>& f, double p, int samples) {
    if (samples < 1) throw DomainError("lp_norm needs at least one sample");
    const double h = kTwoPi / samples;
    if (std::isinf(p)) {
        double m = 0.0;
        for (int j = 0; j < samples; ++j) m = std::max(m, std::abs(f((j + 0.5) * h)));
        return m;
    }
    if (!(p >= 1.0)) throw DomainError("lp_norm needs p >= 1");
    double acc = 0.0;
    for (int j = 0; j < samples; ++j) acc += std::pow(std::abs(f((j + 0.5) * h)), p);
    return std::pow(acc / samples, 1.0 / p);
}

}  // namespace zdl
